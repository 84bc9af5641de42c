#include "dpl/formula.hpp"

#include <algorithm>

namespace dpl {

Formula Formula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::constant(Weight w) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->weight = std::move(w);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula sub) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->size = sub.size() + 1;
  n->depth = sub.depth() + 1;
  n->left = std::move(sub);
  return Formula(std::move(n));
}

Formula Formula::with(Formula left, Formula right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::With;
  n->size = left.size() + right.size() + 1;
  n->depth = std::max(left.depth(), right.depth()) + 1;
  n->left = std::move(left);
  n->right = std::move(right);
  return Formula(std::move(n));
}

Formula Formula::times(Formula left, Formula right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Times;
  n->size = left.size() + right.size() + 1;
  n->depth = std::max(left.depth(), right.depth()) + 1;
  n->left = std::move(left);
  n->right = std::move(right);
  return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Kind::Atom: return a.name() == b.name();
    case Kind::Const: return a.weight() == b.weight();
    case Kind::Neg: return a.sub() == b.sub();
    case Kind::With:
    case Kind::Times: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Kind::Atom: return a.name() <=> b.name();
    case Kind::Const: return a.weight() <=> b.weight();
    case Kind::Neg: return a.sub() <=> b.sub();
    case Kind::With:
    case Kind::Times:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
  return std::strong_ordering::equal;
}

Formula make_arrow(Formula a, Formula b) {
  return Formula::neg(Formula::times(std::move(a), Formula::neg(std::move(b))));
}

Formula make_oplus(Formula a, Formula b) {
  return Formula::neg(Formula::with(Formula::neg(std::move(a)), Formula::neg(std::move(b))));
}

Formula make_par(Formula a, Formula b) {
  return Formula::neg(Formula::times(Formula::neg(std::move(a)), Formula::neg(std::move(b))));
}

std::optional<std::pair<Formula, Formula>> match_arrow(const Formula& f) {
  if (!f.is(Kind::Neg) || !f.sub().is(Kind::Times)) return std::nullopt;
  const Formula& t = f.sub();
  if (!t.right().is(Kind::Neg)) return std::nullopt;
  return std::make_pair(t.left(), t.right().sub());
}

std::optional<std::pair<Formula, Formula>> match_oplus(const Formula& f) {
  if (!f.is(Kind::Neg) || !f.sub().is(Kind::With)) return std::nullopt;
  const Formula& w = f.sub();
  if (!w.left().is(Kind::Neg) || !w.right().is(Kind::Neg)) return std::nullopt;
  return std::make_pair(w.left().sub(), w.right().sub());
}

std::optional<std::pair<Formula, Formula>> match_par(const Formula& f) {
  if (!f.is(Kind::Neg) || !f.sub().is(Kind::Times)) return std::nullopt;
  const Formula& t = f.sub();
  if (!t.left().is(Kind::Neg) || !t.right().is(Kind::Neg)) return std::nullopt;
  return std::make_pair(t.left().sub(), t.right().sub());
}

bool is_l1(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: return true;
    case Kind::Const: return f.weight().is_crisp();
    case Kind::Neg: return is_l1(f.sub());
    case Kind::With:
    case Kind::Times: return is_l1(f.left()) && is_l1(f.right());
  }
  return false;
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom: out.insert(f.name()); return;
    case Kind::Const: return;
    case Kind::Neg: collect_atoms(f.sub(), out); return;
    case Kind::With:
    case Kind::Times:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
  }
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

}  // namespace dpl
