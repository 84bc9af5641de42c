#include "dpl/checker.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dpl {

namespace {

using Fs = std::vector<Formula>;

struct Reject {
  std::string why;
};

void require(bool cond, const std::string& why) {
  if (!cond) throw Reject{why};
}

void arity(const ProofNode& n, std::size_t k) {
  require(n.premises.size() == k,
          "expects " + std::to_string(k) + " premise(s), got " + std::to_string(n.premises.size()));
}

const Formula& principal(const Fs& side, const ProofNode& n, const char* side_name) {
  require(n.params.index.has_value(), "missing principal index");
  require(*n.params.index < side.size(), std::string("principal index out of range on the ") + side_name);
  return side[*n.params.index];
}

Fs without(const Fs& v, std::size_t i) {
  Fs out = v;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

Fs minus(const Fs& v, const Formula& f, const std::string& where) {
  auto it = std::find(v.begin(), v.end(), f);
  require(it != v.end(), print_formula(f) + " does not occur in " + where);
  Fs out = v;
  out.erase(out.begin() + (it - v.begin()));
  return out;
}

Fs plus(Fs v, std::initializer_list<Formula> extra) {
  v.insert(v.end(), extra.begin(), extra.end());
  return v;
}

Fs concat(Fs a, const Fs& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void same(const Fs& a, const Fs& b, const std::string& what) { require(same_multiset(a, b), what + " mismatch"); }

std::pair<Formula, Formula> split(const Formula& f, Kind k, const char* shape) {
  require(f.is(k), print_formula(f) + " is not " + shape);
  return {f.left(), f.right()};
}

std::pair<Formula, Formula> split(const Formula& f,
                                  std::optional<std::pair<Formula, Formula>> (*matcher)(const Formula&),
                                  const char* shape) {
  auto m = matcher(f);
  require(m.has_value(), print_formula(f) + " is not " + shape);
  return *m;
}

const Weight& constant(const Formula& f) {
  require(f.is(Kind::Const), print_formula(f) + " is not a constant");
  return f.weight();
}

int component(const ProofNode& n) {
  require(n.params.component == 1 || n.params.component == 2, "one-premise form needs component 1 or 2");
  return *n.params.component;
}

const Sequent& c_of(const ProofNode& n) { return n.conclusion; }
const Sequent& p_of(const ProofNode& n, std::size_t i) { return n.premises[i].conclusion; }

void single(const Sequent& s) {
  require(s.gamma.size() == 1 && s.delta.size() == 1, "axiom takes exactly one formula on each side");
}

// Each checker assumes the node's rule label and throws Reject on failure.
using RuleCheck = std::function<void(const ProofNode&)>;

const std::map<std::string, RuleCheck>& table() {
  static const std::map<std::string, RuleCheck> rules = {
      {"id",
       [](const ProofNode& n) {
         arity(n, 0);
         single(c_of(n));
         require(c_of(n).gamma[0] == c_of(n).delta[0], "sides differ");
       }},
      {"cut",
       [](const ProofNode& n) {
         arity(n, 2);
         require(n.params.cut.has_value(), "missing cut formula");
         const Formula& b = *n.params.cut;
         const Fs d1 = minus(p_of(n, 0).delta, b, "the right side of the first premise");
         const Fs g2 = minus(p_of(n, 1).gamma, b, "the left side of the second premise");
         same(c_of(n).gamma, concat(p_of(n, 0).gamma, g2), "left side");
         same(c_of(n).delta, concat(d1, p_of(n, 1).delta), "right side");
       }},
      {"exL",
       [](const ProofNode& n) {
         arity(n, 1);
         require(equivalent(c_of(n), p_of(n, 0)), "exchange changed the multisets");
       }},
      {"exR",
       [](const ProofNode& n) {
         arity(n, 1);
         require(equivalent(c_of(n), p_of(n, 0)), "exchange changed the multisets");
       }},
      {"wL",
       [](const ProofNode& n) {
         arity(n, 1);
         principal(c_of(n).gamma, n, "left");
         same(p_of(n, 0).gamma, without(c_of(n).gamma, *n.params.index), "left side");
         same(p_of(n, 0).delta, c_of(n).delta, "right side");
       }},
      {"wR",
       [](const ProofNode& n) {
         arity(n, 1);
         principal(c_of(n).delta, n, "right");
         same(p_of(n, 0).gamma, c_of(n).gamma, "left side");
         same(p_of(n, 0).delta, without(c_of(n).delta, *n.params.index), "right side");
       }},
      {"abs",
       [](const ProofNode& n) {
         arity(n, 1);
         const auto [l, b] = split(principal(c_of(n).delta, n, "right"), Kind::Times, "a product L * B");
         require(is_l1(l), "absorbed formula " + print_formula(l) + " is not crisp");
         require(std::find(c_of(n).gamma.begin(), c_of(n).gamma.end(), b) != c_of(n).gamma.end(),
                 print_formula(b) + " does not occur on the left");
         same(p_of(n, 0).gamma, c_of(n).gamma, "left side");
         same(p_of(n, 0).delta, plus(without(c_of(n).delta, *n.params.index), {l}), "right side");
       }},
      {"andL",
       [](const ProofNode& n) {
         const auto [a, b] = split(principal(c_of(n).gamma, n, "left"), Kind::With, "a conjunction A & B");
         const Fs rest = without(c_of(n).gamma, *n.params.index);
         if (n.premises.size() == 1) {
           same(p_of(n, 0).gamma, plus(rest, {component(n) == 1 ? a : b}), "left side");
           same(p_of(n, 0).delta, c_of(n).delta, "right side");
           return;
         }
         arity(n, 2);
         same(p_of(n, 0).gamma, plus(rest, {a}), "left side of the first premise");
         same(p_of(n, 1).gamma, plus(rest, {b}), "left side of the second premise");
         same(p_of(n, 0).delta, c_of(n).delta, "right side of the first premise");
         same(p_of(n, 1).delta, c_of(n).delta, "right side of the second premise");
       }},
      {"andR",
       [](const ProofNode& n) {
         arity(n, 2);
         const auto [a, b] = split(principal(c_of(n).delta, n, "right"), Kind::With, "a conjunction A & B");
         same(p_of(n, 0).gamma, c_of(n).gamma, "left side of the first premise");
         same(p_of(n, 1).gamma, c_of(n).gamma, "left side of the second premise");
         const Fs d1 = minus(p_of(n, 0).delta, a, "the right side of the first premise");
         const Fs d2 = minus(p_of(n, 1).delta, b, "the right side of the second premise");
         same(without(c_of(n).delta, *n.params.index), concat(d1, d2), "right side");
       }},
      {"timesL",
       [](const ProofNode& n) {
         arity(n, 1);
         const auto [a, b] = split(principal(c_of(n).gamma, n, "left"), Kind::Times, "a product A * B");
         same(p_of(n, 0).gamma, plus(without(c_of(n).gamma, *n.params.index), {a, b}), "left side");
         same(p_of(n, 0).delta, c_of(n).delta, "right side");
       }},
      {"timesR",
       [](const ProofNode& n) {
         arity(n, 2);
         const auto [a, b] = split(principal(c_of(n).delta, n, "right"), Kind::Times, "a product A * B");
         const Fs d1 = minus(p_of(n, 0).delta, a, "the right side of the first premise");
         const Fs d2 = minus(p_of(n, 1).delta, b, "the right side of the second premise");
         same(c_of(n).gamma, concat(p_of(n, 0).gamma, p_of(n, 1).gamma), "left side");
         same(without(c_of(n).delta, *n.params.index), concat(d1, d2), "right side");
       }},
      {"oplusL",
       [](const ProofNode& n) {
         arity(n, 2);
         const auto [a, b] = split(principal(c_of(n).gamma, n, "left"), match_oplus, "a disjunction A | B");
         const Fs rest = without(c_of(n).gamma, *n.params.index);
         same(p_of(n, 0).gamma, plus(rest, {a}), "left side of the first premise");
         same(p_of(n, 1).gamma, plus(rest, {b}), "left side of the second premise");
         same(p_of(n, 0).delta, c_of(n).delta, "right side of the first premise");
         same(p_of(n, 1).delta, c_of(n).delta, "right side of the second premise");
       }},
      {"oplusR",
       [](const ProofNode& n) {
         const auto [a, b] = split(principal(c_of(n).delta, n, "right"), match_oplus, "a disjunction A | B");
         const Fs rest = without(c_of(n).delta, *n.params.index);
         if (n.premises.size() == 1) {
           same(p_of(n, 0).gamma, c_of(n).gamma, "left side");
           same(p_of(n, 0).delta, plus(rest, {component(n) == 1 ? a : b}), "right side");
           return;
         }
         arity(n, 2);
         same(p_of(n, 0).gamma, c_of(n).gamma, "left side of the first premise");
         same(p_of(n, 1).gamma, c_of(n).gamma, "left side of the second premise");
         same(p_of(n, 0).delta, plus(rest, {a}), "right side of the first premise");
         same(p_of(n, 1).delta, plus(rest, {b}), "right side of the second premise");
       }},
      {"parL",
       [](const ProofNode& n) {
         arity(n, 2);
         const auto [a, b] = split(principal(c_of(n).gamma, n, "left"), match_par, "a par A % B");
         const Fs g1 = minus(p_of(n, 0).gamma, a, "the left side of the first premise");
         const Fs g2 = minus(p_of(n, 1).gamma, b, "the left side of the second premise");
         same(without(c_of(n).gamma, *n.params.index), concat(g1, g2), "left side");
         same(c_of(n).delta, concat(p_of(n, 0).delta, p_of(n, 1).delta), "right side");
       }},
      {"parR",
       [](const ProofNode& n) {
         arity(n, 1);
         const auto [a, b] = split(principal(c_of(n).delta, n, "right"), match_par, "a par A % B");
         same(p_of(n, 0).gamma, c_of(n).gamma, "left side");
         same(p_of(n, 0).delta, plus(without(c_of(n).delta, *n.params.index), {a, b}), "right side");
       }},
      {"arrowL",
       [](const ProofNode& n) {
         arity(n, 2);
         const auto [a, b] = split(principal(c_of(n).gamma, n, "left"), match_arrow, "an implication A -> B");
         const Fs d1 = minus(p_of(n, 0).delta, a, "the right side of the first premise");
         const Fs g2 = minus(p_of(n, 1).gamma, b, "the left side of the second premise");
         same(without(c_of(n).gamma, *n.params.index), concat(p_of(n, 0).gamma, g2), "left side");
         same(c_of(n).delta, concat(d1, p_of(n, 1).delta), "right side");
       }},
      {"arrowR",
       [](const ProofNode& n) {
         arity(n, 1);
         const auto [a, b] = split(principal(c_of(n).delta, n, "right"), match_arrow, "an implication A -> B");
         same(p_of(n, 0).gamma, plus(c_of(n).gamma, {a}), "left side");
         same(p_of(n, 0).delta, plus(without(c_of(n).delta, *n.params.index), {b}), "right side");
       }},
      {"negL",
       [](const ProofNode& n) {
         arity(n, 1);
         const Formula& f = principal(c_of(n).gamma, n, "left");
         require(f.is(Kind::Neg), print_formula(f) + " is not a negation");
         same(p_of(n, 0).gamma, without(c_of(n).gamma, *n.params.index), "left side");
         same(p_of(n, 0).delta, plus(c_of(n).delta, {f.sub()}), "right side");
       }},
      {"negR",
       [](const ProofNode& n) {
         arity(n, 1);
         const Formula& f = principal(c_of(n).delta, n, "right");
         require(f.is(Kind::Neg), print_formula(f) + " is not a negation");
         same(p_of(n, 0).gamma, plus(c_of(n).gamma, {f.sub()}), "left side");
         same(p_of(n, 0).delta, without(c_of(n).delta, *n.params.index), "right side");
       }},
      {"one",
       [](const ProofNode& n) {
         arity(n, 1);
         const Formula& f = principal(c_of(n).gamma, n, "left");
         require(f == Formula::one(), print_formula(f) + " is not the constant 1");
         same(p_of(n, 0).gamma, without(c_of(n).gamma, *n.params.index), "left side");
         same(p_of(n, 0).delta, c_of(n).delta, "right side");
       }},
      {"oneAx",
       [](const ProofNode& n) {
         arity(n, 0);
         require(principal(c_of(n).delta, n, "right") == Formula::one(), "principal formula is not the constant 1");
       }},
      {"zeroAx",
       [](const ProofNode& n) {
         arity(n, 0);
         require(principal(c_of(n).gamma, n, "left") == Formula::zero(), "principal formula is not the constant 0");
       }},
      {"distr",
       [](const ProofNode& n) {
         arity(n, 0);
         single(c_of(n));
         const auto [ac, bc] = split(c_of(n).gamma[0], Kind::With, "of the form (A * C) & (B * C)");
         const auto [a, c1] = split(ac, Kind::Times, "a product A * C");
         const auto [b, c2] = split(bc, Kind::Times, "a product B * C");
         require(c1 == c2, "the two products have different right factors");
         require(c_of(n).delta[0] == Formula::times(Formula::with(a, b), c1), "right side is not (A & B) * C");
       }},
      {"Sprime",
       [](const ProofNode& n) {
         arity(n, 0);
         single(c_of(n));
         const Weight& beta = constant(c_of(n).gamma[0]);
         const Weight& alpha = constant(c_of(n).delta[0]);
         require(beta <= alpha, beta.fraction() + " is not at most " + alpha.fraction());
       }},
      {"timesDef",
       [](const ProofNode& n) {
         arity(n, 0);
         single(c_of(n));
         const Formula& l = c_of(n).gamma[0];
         const Formula& r = c_of(n).delta[0];
         const bool forward = l.is(Kind::Times);
         const Formula& prod = forward ? l : r;
         const Formula& gamma = forward ? r : l;
         const auto [a, b] = split(prod, Kind::Times, "a product of constants");
         const Weight expect = w_times(constant(a), constant(b));
         require(constant(gamma) == expect, "product of constants is " + expect.fraction() + ", not " +
                                                constant(gamma).fraction());
       }},
      {"negDef",
       [](const ProofNode& n) {
         arity(n, 0);
         single(c_of(n));
         const Formula& l = c_of(n).gamma[0];
         require(l.is(Kind::Neg), "left side is not a negated constant");
         const Weight expect = w_neg(constant(l.sub()));
         require(constant(c_of(n).delta[0]) == expect, "negated constant is " + expect.fraction());
       }},
  };
  return rules;
}

std::optional<RuleViolation> check_at(const ProofNode& p, const std::string& path) {
  if (auto v = check_node(p)) {
    v->path = path;
    return v;
  }
  for (std::size_t i = 0; i < p.premises.size(); ++i)
    if (auto v = check_at(p.premises[i], path.empty() ? std::to_string(i) : path + "." + std::to_string(i)))
      return v;
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_known_rule(const std::string& name) { return table().count(name) != 0; }

std::string RuleViolation::message() const {
  std::string out = "rule '" + rule + "'";
  out += path.empty() ? " at the root" : " at premise path " + path;
  out += " (" + conclusion + "): " + reason;
  return out;
}

std::optional<RuleViolation> check_node(const ProofNode& n) {
  auto it = table().find(n.rule);
  if (it == table().end())
    return RuleViolation{n.rule, "", print_sequent(n.conclusion), "no such rule in the calculus"};
  try {
    it->second(n);
  } catch (const Reject& r) {
    return RuleViolation{n.rule, "", print_sequent(n.conclusion), r.why};
  }
  return std::nullopt;
}

std::optional<RuleViolation> check_proof(const ProofNode& p) { return check_at(p, ""); }

}  // namespace dpl
