// Helpers that assemble proof nodes bottom-up, computing each conclusion
// from the premises. They trust their inputs; check_proof is the judge.
//
// One-premise rules rewrite the principal occurrence in place, so the
// conclusion keeps the premise's ordering. Two-premise rules list the first
// premise's context before the second's.

#ifndef DPL_PROOF_BUILDER_HPP
#define DPL_PROOF_BUILDER_HPP

#include <vector>

#include "dpl/semantics.hpp"
#include "dpl/sequent.hpp"

namespace dpl::build {

ProofNode id(const Formula& a);
/// Γ ⊢ B, Δ and Γ′, B ⊢ Δ′ give Γ, Γ′ ⊢ Δ, Δ′.
ProofNode cut(ProofNode p1, ProofNode p2, const Formula& b);
/// Appends `a` to the left (right) side.
ProofNode weaken_left(ProofNode p, const Formula& a);
ProofNode weaken_right(ProofNode p, const Formula& a);
/// Appends every formula of `extra`.
ProofNode weaken_left(ProofNode p, const std::vector<Formula>& extra);

/// Γ, B ⊢ L, Δ gives Γ, B ⊢ L ⊗ B, Δ.
ProofNode absorb(ProofNode p, const Formula& l, const Formula& b);

/// Replaces the left occurrence of the chosen conjunct by `conj`.
ProofNode and_left(ProofNode p, const Formula& conj, int component);
ProofNode and_right(ProofNode p1, ProofNode p2, const Formula& a, const Formula& b);
/// Replaces the left occurrences of `a` and `b` by a ⊗ b.
ProofNode times_left(ProofNode p, const Formula& a, const Formula& b);
ProofNode times_right(ProofNode p1, ProofNode p2, const Formula& a, const Formula& b);
ProofNode oplus_left(ProofNode p1, ProofNode p2, const Formula& a, const Formula& b);
ProofNode oplus_right(ProofNode p, const Formula& disj, int component);
ProofNode par_left(ProofNode p1, ProofNode p2, const Formula& a, const Formula& b);
ProofNode par_right(ProofNode p, const Formula& a, const Formula& b);
/// Γ ⊢ A, Δ and Γ′, B ⊢ Δ′ give Γ, Γ′, A → B ⊢ Δ, Δ′.
ProofNode arrow_left(ProofNode p1, ProofNode p2, const Formula& a, const Formula& b);
/// Γ, A ⊢ B, Δ gives Γ ⊢ A → B, Δ.
ProofNode arrow_right(ProofNode p, const Formula& a, const Formula& b);
/// Γ ⊢ A, Δ gives Γ, ¬A ⊢ Δ.
ProofNode neg_left(ProofNode p, const Formula& a);
/// Γ, A ⊢ Δ gives Γ ⊢ ¬A, Δ.
ProofNode neg_right(ProofNode p, const Formula& a);
ProofNode one_left(ProofNode p);
ProofNode one_axiom(std::vector<Formula> gamma, std::vector<Formula> delta_rest = {});
ProofNode zero_axiom(std::vector<Formula> gamma_rest, std::vector<Formula> delta);
ProofNode s_prime(const Weight& beta, const Weight& alpha);

/// Γ, X, X ⊢ Δ gives Γ, X ⊢ Δ for crisp X, through absorption and cut.
ProofNode contract_left(ProofNode p, const Formula& x);

/// ¬¬A ⊢ A and A ⊢ ¬¬A.
ProofNode double_neg_elim(const Formula& a);
ProofNode double_neg_intro(const Formula& a);

/// A & B ⊢ A ⊗ B for crisp A and B.
ProofNode and_to_times(const Formula& a, const Formula& b);

/// (β → X) & (β → Y) ⊢ β → (X & Y).
ProofNode join_arrows(const Formula& beta, const Formula& x, const Formula& y);

/// α → L ⊢ β → M, given β ≤ α and L classically entailing M.
ProofNode weaken_clause(const Weight& alpha, const Formula& l, const Weight& beta, const Formula& m);

/// A proof of Γ ⊢ Δ for crisp formulas whose classical reading is valid
/// (the conjunction of Γ implies the disjunction of Δ). Throws
/// std::invalid_argument when the sequent is not classically valid.
ProofNode classical(const std::vector<Formula>& gamma, const std::vector<Formula>& delta);

}  // namespace dpl::build

#endif  // DPL_PROOF_BUILDER_HPP
