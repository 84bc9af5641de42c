// Sequents and proof trees of the sequent calculus.

#ifndef DPL_SEQUENT_HPP
#define DPL_SEQUENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpl/formula.hpp"
#include "dpl/parser.hpp"

namespace dpl {

/// Γ ⊢ Δ. Both sides are multisets; the vectors fix a printing order only.
struct Sequent {
  std::vector<Formula> gamma;
  std::vector<Formula> delta;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// Equal as multisets.
bool same_multiset(const std::vector<Formula>& a, const std::vector<Formula>& b);
bool equivalent(const Sequent& a, const Sequent& b);

/// `A, B |- C`; an empty side prints as nothing (`|- A`, `A |-`).
std::string print_sequent(const Sequent& s, const PrintOptions& opts = {});
/// Inverse of print_sequent. Throws ParseError.
Sequent parse_sequent(std::string_view text);

struct ProofParams {
  /// Principal occurrence, indexing the conclusion side the rule acts on.
  std::optional<std::size_t> index;
  /// For one-premise &L and ⊕R: which conjunct/disjunct (1 or 2).
  std::optional<int> component;
  /// The cut formula.
  std::optional<Formula> cut;

  friend bool operator==(const ProofParams&, const ProofParams&) = default;
};

/// A proof tree node. `rule` is a rule label; unknown labels are kept so
/// the checker can reject them.
struct ProofNode {
  std::string rule;
  Sequent conclusion;
  ProofParams params;
  std::vector<ProofNode> premises;

  friend bool operator==(const ProofNode&, const ProofNode&) = default;
};

std::size_t proof_size(const ProofNode& p);

}  // namespace dpl

#endif  // DPL_SEQUENT_HPP
