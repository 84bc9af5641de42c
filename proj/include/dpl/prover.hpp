// Proof-producing entailment between normal forms, by induction on the
// number of premise clauses.

#ifndef DPL_PROVER_HPP
#define DPL_PROVER_HPP

#include <string>
#include <variant>

#include "dpl/normal_form.hpp"
#include "dpl/semantics.hpp"
#include "dpl/sequent.hpp"

namespace dpl {

/// The entailment fails; `world` is a world of `frame` where the premise
/// distribution exceeds the goal's.
struct NotDerivable {
  Frame frame;
  World world = 0;
  /// Index of the first goal clause that is not entailed.
  std::size_t goal_clause = 0;

  std::string message() const;
};

using ProofResult = std::variant<ProofNode, NotDerivable>;

/// A proof of n.formula() ⊢ clause_formula(goal).
ProofResult derive_clause_entailment(const NormalForm& n, const Clause& goal, const Limits& limits = {});

/// A proof of a.formula() ⊢ b.formula(), one goal clause at a time joined
/// by &R.
ProofResult prove_nf(const NormalForm& a, const NormalForm& b, const Limits& limits = {});

}  // namespace dpl

#endif  // DPL_PROVER_HPP
