// Weighted-clause normal forms: every formula is equivalent to a
// conjunction &ᵢ(αᵢ → Lᵢ) of clauses with crisp bodies.

#ifndef DPL_NORMAL_FORM_HPP
#define DPL_NORMAL_FORM_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpl/clause.hpp"
#include "dpl/formula.hpp"
#include "dpl/semantics.hpp"

namespace dpl {

struct BlowupLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A multiset of clauses read as their &-conjunction. The empty normal form
/// is the formula 1.
class NormalForm {
 public:
  NormalForm() = default;
  /// Throws NotL1Error if some body is not crisp.
  explicit NormalForm(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  bool empty() const { return clauses_.empty(); }
  std::size_t size() const { return clauses_.size(); }

  std::set<std::string> atoms() const;

  /// (α₁ → L₁) & (α₂ → L₂) & ..., nested to the left; 1 when empty.
  Formula formula() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  std::vector<Clause> clauses_;
};

/// Simplified normal form with u_of_nf(normalize(a)) = u_eval(a) everywhere.
/// Throws BlowupLimit when an intermediate step would exceed
/// `limits.max_clauses` clauses, FrameTooLarge past `limits.max_atoms`.
NormalForm normalize(const Formula& a, const Limits& limits = {});

/// ¬(α → L) as {(1 − α, 0), (1, ¬L)}, unsimplified.
NormalForm negate_clause(const Clause& c);

/// Negation of a normal form: one clause (α_J, M_J) per sign pattern J of
/// the bodies, where α_J = 1 − max of the weights outside J and M_J negates
/// the conjunction of the bodies in J with the negated bodies outside J.
/// Only patterns realized by some world are emitted; the others have
/// tautological bodies. Simplified.
NormalForm negate_nf(const NormalForm& n, const Limits& limits = {});

/// (α → L) ⊗ (β → M) as {(β, L → M), (α, M → L), (α ℘ β, L ⊕ M)},
/// unsimplified.
NormalForm times_clause(const Clause& c1, const Clause& c2);

/// Pairwise times_clause over both operands, simplified. The empty normal
/// form is the unit.
NormalForm times_nf(const NormalForm& a, const NormalForm& b, const Limits& limits = {});

/// Clause union, simplified.
NormalForm with_nf(const NormalForm& a, const NormalForm& b, const Limits& limits = {});

/// Removes weight-0 clauses and tautologies, merges clauses of equal weight
/// (conjoining bodies) and of equivalent bodies (keeping the larger weight),
/// drops clauses that do not change the distribution, rewrites each body as
/// a short two-level formula over the atoms it depends on, and sorts by
/// weight descending, then printed body.
NormalForm simplify(const NormalForm& n, const Limits& limits = {});

/// The distribution of the &-formula: at each world, the minimum over the
/// clauses of 1 (body true) or 1 − weight (body false). Throws UnknownAtom.
Dist u_of_nf(const NormalForm& n, const Frame& frame);

}  // namespace dpl

#endif  // DPL_NORMAL_FORM_HPP
