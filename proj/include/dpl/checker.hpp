// Rule-by-rule proof checking for the sequent calculus.
//
// Rule labels and their shapes (Γ, Δ are multisets; `i` is the principal
// occurrence in the conclusion):
//
//   id      A ⊢ A
//   cut     Γ ⊢ B, Δ   Γ′, B ⊢ Δ′   /   Γ, Γ′ ⊢ Δ, Δ′         (cut: B)
//   exL exR premise and conclusion equal as multisets
//   wL wR   Γ ⊢ Δ / Γ, A ⊢ Δ  and  Γ ⊢ Δ / Γ ⊢ A, Δ
//   abs     Γ, B ⊢ L, Δ / Γ, B ⊢ L ⊗ B, Δ                      L crisp
//   andL    Γ, A ⊢ Δ  Γ, B ⊢ Δ / Γ, A & B ⊢ Δ, or one premise with
//           component 1 (Γ, A ⊢ Δ) or 2 (Γ, B ⊢ Δ)
//   andR    Γ ⊢ A, Δ   Γ ⊢ B, Δ′ / Γ ⊢ A & B, Δ, Δ′
//   timesL  Γ, A, B ⊢ Δ / Γ, A ⊗ B ⊢ Δ
//   timesR  Γ ⊢ A, Δ   Γ′ ⊢ B, Δ′ / Γ, Γ′ ⊢ A ⊗ B, Δ, Δ′
//   oplusL  Γ, A ⊢ Δ   Γ, B ⊢ Δ / Γ, A ⊕ B ⊢ Δ
//   oplusR  Γ ⊢ A, Δ   Γ ⊢ B, Δ / Γ ⊢ A ⊕ B, Δ, or one premise with
//           component 1 (Γ ⊢ A, Δ) or 2 (Γ ⊢ B, Δ)
//   parL    Γ, A ⊢ Δ   Γ′, B ⊢ Δ′ / Γ, Γ′, A ℘ B ⊢ Δ, Δ′
//   parR    Γ ⊢ A, B, Δ / Γ ⊢ A ℘ B, Δ
//   arrowL  Γ ⊢ A, Δ   Γ′, B ⊢ Δ′ / Γ, Γ′, A → B ⊢ Δ, Δ′
//   arrowR  Γ, A ⊢ B, Δ / Γ ⊢ A → B, Δ
//   negL    Γ ⊢ A, Δ / Γ, ¬A ⊢ Δ
//   negR    Γ, A ⊢ Δ / Γ ⊢ ¬A, Δ
//   one     Γ ⊢ Δ / Γ, 1 ⊢ Δ
//   oneAx   Γ ⊢ 1, Δ
//   zeroAx  Γ, 0 ⊢ Δ
//   distr   (A ⊗ C) & (B ⊗ C) ⊢ (A & B) ⊗ C
//   Sprime  β ⊢ α                                  β ≤ α
//   timesDef  α ⊗ β ⊢ γ  and  γ ⊢ α ⊗ β            γ = max(0, α + β − 1)
//   negDef  ¬α ⊢ γ                                 γ = 1 − α
//
// There is no contraction rule.

#ifndef DPL_CHECKER_HPP
#define DPL_CHECKER_HPP

#include <optional>
#include <string>
#include <vector>

#include "dpl/sequent.hpp"

namespace dpl {

const std::vector<std::string>& rule_names();
bool is_known_rule(const std::string& name);

struct RuleViolation {
  std::string rule;
  /// Premise indices from the root, e.g. "0.1" (empty for the root).
  std::string path;
  std::string conclusion;
  std::string reason;

  std::string message() const;
};

/// Checks that `n` follows from its immediate premises by its rule. The
/// premises themselves are not checked.
std::optional<RuleViolation> check_node(const ProofNode& n);

/// First violating node in preorder, if any.
std::optional<RuleViolation> check_proof(const ProofNode& p);

}  // namespace dpl

#endif  // DPL_CHECKER_HPP
