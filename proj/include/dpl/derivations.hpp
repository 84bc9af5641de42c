// Hand-assembled derivations of standard derived sequents.

#ifndef DPL_DERIVATIONS_HPP
#define DPL_DERIVATIONS_HPP

#include <string>
#include <vector>

#include "dpl/sequent.hpp"
#include "dpl/weight.hpp"

namespace dpl::derivations {

/// A ⊢ A.
ProofNode identity(const Formula& a);

/// L ⊢ L ⊗ L for crisp L, by absorption, ⊗L and cut.
ProofNode contraction_via_absorption(const Formula& l);

/// A & (A → B) ⊢ B for crisp A, B.
ProofNode modus_ponens(const Formula& a, const Formula& b);

/// α → A ⊢ β → A for β ≤ α.
ProofNode weaken_weight(const Weight& alpha, const Weight& beta, const Formula& a);

/// (α → A) & (β → (A → B)) ⊢ (α & β) → B for crisp A, B.
ProofNode graded_modus_ponens(const Weight& alpha, const Weight& beta, const Formula& a, const Formula& b);

/// (α → L) ⊗ (β → M) ⊢ (β → (L → M)) & (α → (M → L)) & ((α ℘ β) → (L ⊕ M))
/// and the converse, for crisp L, M.
ProofNode times_reduction(const Weight& alpha, const Formula& l, const Weight& beta, const Formula& m);
ProofNode times_reduction_converse(const Weight& alpha, const Formula& l, const Weight& beta, const Formula& m);

/// ¬(α → L) ⊢ α & ¬L and the converse, for crisp L.
ProofNode negation_reduction(const Weight& alpha, const Formula& l);
ProofNode negation_reduction_converse(const Weight& alpha, const Formula& l);

/// (A ⊕ B) ⊗ C ⊢ (A ⊗ C) ⊕ (B ⊗ C) and the converse.
ProofNode times_oplus_distribution(const Formula& a, const Formula& b, const Formula& c);
ProofNode times_oplus_distribution_converse(const Formula& a, const Formula& b, const Formula& c);

struct Named {
  std::string name;
  ProofNode proof;
};

/// One instance of every derivation above over atoms p, q.
std::vector<Named> library();

}  // namespace dpl::derivations

#endif  // DPL_DERIVATIONS_HPP
