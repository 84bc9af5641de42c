// Formula trees over atoms, weight constants, negation, & and ⊗.

#ifndef DPL_FORMULA_HPP
#define DPL_FORMULA_HPP

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "dpl/weight.hpp"

namespace dpl {

enum class Kind { Atom, Const, Neg, With, Times };

/// Immutable formula handle. Copies share structure; equality is structural.
///
/// Only the five core connectives are nodes. The derived connectives
/// (→, ⊕, ℘) are expansions built by make_arrow / make_oplus / make_par.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula constant(Weight w);
  static Formula neg(Formula sub);
  static Formula with(Formula left, Formula right);
  static Formula times(Formula left, Formula right);

  static Formula zero() { return constant(Weight::zero()); }
  static Formula one() { return constant(Weight::one()); }

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  /// Valid for Atom.
  const std::string& name() const;
  /// Valid for Const.
  const Weight& weight() const;
  /// Valid for Neg.
  const Formula& sub() const;
  /// Valid for With and Times.
  const Formula& left() const;
  const Formula& right() const;

  /// Node count.
  std::size_t size() const;
  /// Longest root-to-leaf path, counted in nodes.
  std::size_t depth() const;
  /// Identity of the shared node, for memoisation.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind = Kind::Atom;
  std::string name;
  Weight weight;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::size_t size = 1;
  std::size_t depth = 1;
};

inline Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Weight& Formula::weight() const { return node_->weight; }
inline const Formula& Formula::sub() const { return *node_->left; }
inline const Formula& Formula::left() const { return *node_->left; }
inline const Formula& Formula::right() const { return *node_->right; }
inline std::size_t Formula::size() const { return node_->size; }
inline std::size_t Formula::depth() const { return node_->depth; }

/// A → B, expanded to ¬(A ⊗ ¬B).
Formula make_arrow(Formula a, Formula b);
/// A ⊕ B, expanded to ¬(¬A & ¬B).
Formula make_oplus(Formula a, Formula b);
/// A ℘ B, expanded to ¬(¬A ⊗ ¬B).
Formula make_par(Formula a, Formula b);

/// Pattern matchers inverting the expansions above.
std::optional<std::pair<Formula, Formula>> match_arrow(const Formula& f);
std::optional<std::pair<Formula, Formula>> match_oplus(const Formula& f);
std::optional<std::pair<Formula, Formula>> match_par(const Formula& f);

/// True iff no constant strictly between 0 and 1 occurs in `f`.
bool is_l1(const Formula& f);

/// Atom names occurring in `f`, in lexicographic order.
std::set<std::string> atoms(const Formula& f);
void collect_atoms(const Formula& f, std::set<std::string>& out);

}  // namespace dpl

#endif  // DPL_FORMULA_HPP
