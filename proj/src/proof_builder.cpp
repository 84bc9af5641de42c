#include "dpl/proof_builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpl::build {

namespace {

using Fs = std::vector<Formula>;

std::size_t find_in(const Fs& v, const Formula& f, std::size_t skip = SIZE_MAX) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != skip && v[i] == f) return i;
  throw std::logic_error("proof builder: " + print_formula(f) + " not found");
}

Fs erase_one(Fs v, const Formula& f) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(find_in(v, f)));
  return v;
}

Fs concat(Fs a, const Fs& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ProofNode node(std::string rule, Fs gamma, Fs delta, std::vector<ProofNode> premises, ProofParams params = {}) {
  return ProofNode{std::move(rule), Sequent{std::move(gamma), std::move(delta)}, std::move(params),
                   std::move(premises)};
}

ProofParams at(std::size_t i) {
  ProofParams p;
  p.index = i;
  return p;
}

}  // namespace

ProofNode id(const Formula& a) { return node("id", {a}, {a}, {}); }

ProofNode cut(ProofNode p1, ProofNode p2, const Formula& b) {
  Fs gamma = concat(p1.conclusion.gamma, erase_one(p2.conclusion.gamma, b));
  Fs delta = concat(erase_one(p1.conclusion.delta, b), p2.conclusion.delta);
  ProofParams params;
  params.cut = b;
  return node("cut", std::move(gamma), std::move(delta), {std::move(p1), std::move(p2)}, std::move(params));
}

ProofNode weaken_left(ProofNode p, const Formula& a) {
  Fs gamma = p.conclusion.gamma;
  gamma.push_back(a);
  Fs delta = p.conclusion.delta;
  const std::size_t i = gamma.size() - 1;
  return node("wL", std::move(gamma), std::move(delta), {std::move(p)}, at(i));
}

ProofNode weaken_right(ProofNode p, const Formula& a) {
  Fs gamma = p.conclusion.gamma;
  Fs delta = p.conclusion.delta;
  delta.push_back(a);
  const std::size_t i = delta.size() - 1;
  return node("wR", std::move(gamma), std::move(delta), {std::move(p)}, at(i));
}

ProofNode weaken_left(ProofNode p, const std::vector<Formula>& extra) {
  for (const auto& a : extra) p = weaken_left(std::move(p), a);
  return p;
}

ProofNode absorb(ProofNode p, const Formula& l, const Formula& b) {
  Fs gamma = p.conclusion.gamma;
  Fs delta = p.conclusion.delta;
  const std::size_t i = find_in(delta, l);
  delta[i] = Formula::times(l, b);
  return node("abs", std::move(gamma), std::move(delta), {std::move(p)}, at(i));
}

ProofNode and_left(ProofNode p, const Formula& conj, int component) {
  Fs gamma = p.conclusion.gamma;
  Fs delta = p.conclusion.delta;
  const std::size_t i = find_in(gamma, component == 1 ? conj.left() : conj.right());
  gamma[i] = conj;
  ProofParams params = at(i);
  params.component = component;
  return node("andL", std::move(gamma), std::move(delta), {std::move(p)}, std::move(params));
}

ProofNode and_right(ProofNode p1, ProofNode p2, const Formula& a, const Formula& b) {
  Fs gamma = p1.conclusion.gamma;
  Fs delta = p1.conclusion.delta;
  const std::size_t i = find_in(delta, a);
  delta[i] = Formula::with(a, b);
  delta = concat(std::move(delta), erase_one(p2.conclusion.delta, b));
  return node("andR", std::move(gamma), std::move(delta), {std::move(p1), std::move(p2)}, at(i));
}

ProofNode times_left(ProofNode p, const Formula& a, const Formula& b) {
  Fs gamma = p.conclusion.gamma;
  Fs delta = p.conclusion.delta;
  std::size_t ia = find_in(gamma, a);
  const std::size_t ib = find_in(gamma, b, ia);
  gamma.erase(gamma.begin() + static_cast<std::ptrdiff_t>(ib));
  if (ib < ia) --ia;
  gamma[ia] = Formula::times(a, b);
  return node("timesL", std::move(gamma), std::move(delta), {std::move(p)}, at(ia));
}

ProofNode times_right(ProofNode p1, ProofNode p2, const Formula& a, const Formula& b) {
  Fs gamma = concat(p1.conclusion.gamma, p2.conclusion.gamma);
  Fs delta = p1.conclusion.delta;
  const std::size_t i = find_in(delta, a);
  delta[i] = Formula::times(a, b);
  delta = concat(std::move(delta), erase_one(p2.conclusion.delta, b));
  return node("timesR", std::move(gamma), std::move(delta), {std::move(p1), std::move(p2)}, at(i));
}

ProofNode oplus_left(ProofNode p1, ProofNode p2, const Formula& a, const Formula& b) {
  Fs gamma = p1.conclusion.gamma;
  Fs delta = p1.conclusion.delta;
  const std::size_t i = find_in(gamma, a);
  gamma[i] = make_oplus(a, b);
  return node("oplusL", std::move(gamma), std::move(delta), {std::move(p1), std::move(p2)}, at(i));
}

ProofNode oplus_right(ProofNode p, const Formula& disj, int component) {
  const auto parts = match_oplus(disj);
  if (!parts) throw std::logic_error("proof builder: not a disjunction");
  Fs gamma = p.conclusion.gamma;
  Fs delta = p.conclusion.delta;
  const std::size_t i = find_in(delta, component == 1 ? parts->first : parts->second);
  delta[i] = disj;
  ProofParams params = at(i);
  params.component = component;
  return node("oplusR", std::move(gamma), std::move(delta), {std::move(p)}, std::move(params));
}

ProofNode par_left(ProofNode p1, ProofNode p2, const Formula& a, const Formula& b) {
  Fs gamma = p1.conclusion.gamma;
  const std::size_t i = find_in(gamma, a);
  gamma[i] = make_par(a, b);
  gamma = concat(std::move(gamma), erase_one(p2.conclusion.gamma, b));
  Fs delta = concat(p1.conclusion.delta, p2.conclusion.delta);
  return node("parL", std::move(gamma), std::move(delta), {std::move(p1), std::move(p2)}, at(i));
}

ProofNode par_right(ProofNode p, const Formula& a, const Formula& b) {
  Fs gamma = p.conclusion.gamma;
  Fs delta = p.conclusion.delta;
  std::size_t ia = find_in(delta, a);
  const std::size_t ib = find_in(delta, b, ia);
  delta.erase(delta.begin() + static_cast<std::ptrdiff_t>(ib));
  if (ib < ia) --ia;
  delta[ia] = make_par(a, b);
  return node("parR", std::move(gamma), std::move(delta), {std::move(p)}, at(ia));
}

ProofNode arrow_left(ProofNode p1, ProofNode p2, const Formula& a, const Formula& b) {
  Fs g2 = p2.conclusion.gamma;
  const std::size_t j = find_in(g2, b);
  g2[j] = make_arrow(a, b);
  const std::size_t i = p1.conclusion.gamma.size() + j;
  Fs gamma = concat(p1.conclusion.gamma, g2);
  Fs delta = concat(erase_one(p1.conclusion.delta, a), p2.conclusion.delta);
  return node("arrowL", std::move(gamma), std::move(delta), {std::move(p1), std::move(p2)}, at(i));
}

ProofNode arrow_right(ProofNode p, const Formula& a, const Formula& b) {
  Fs gamma = erase_one(p.conclusion.gamma, a);
  Fs delta = p.conclusion.delta;
  const std::size_t i = find_in(delta, b);
  delta[i] = make_arrow(a, b);
  return node("arrowR", std::move(gamma), std::move(delta), {std::move(p)}, at(i));
}

ProofNode neg_left(ProofNode p, const Formula& a) {
  Fs gamma = p.conclusion.gamma;
  gamma.push_back(Formula::neg(a));
  Fs delta = erase_one(p.conclusion.delta, a);
  const std::size_t i = gamma.size() - 1;
  return node("negL", std::move(gamma), std::move(delta), {std::move(p)}, at(i));
}

ProofNode neg_right(ProofNode p, const Formula& a) {
  Fs gamma = erase_one(p.conclusion.gamma, a);
  Fs delta = p.conclusion.delta;
  delta.push_back(Formula::neg(a));
  const std::size_t i = delta.size() - 1;
  return node("negR", std::move(gamma), std::move(delta), {std::move(p)}, at(i));
}

ProofNode one_left(ProofNode p) {
  Fs gamma = p.conclusion.gamma;
  gamma.push_back(Formula::one());
  Fs delta = p.conclusion.delta;
  const std::size_t i = gamma.size() - 1;
  return node("one", std::move(gamma), std::move(delta), {std::move(p)}, at(i));
}

ProofNode one_axiom(std::vector<Formula> gamma, std::vector<Formula> delta_rest) {
  delta_rest.insert(delta_rest.begin(), Formula::one());
  return node("oneAx", std::move(gamma), std::move(delta_rest), {}, at(0));
}

ProofNode zero_axiom(std::vector<Formula> gamma_rest, std::vector<Formula> delta) {
  gamma_rest.push_back(Formula::zero());
  const std::size_t i = gamma_rest.size() - 1;
  return node("zeroAx", std::move(gamma_rest), std::move(delta), {}, at(i));
}

ProofNode s_prime(const Weight& beta, const Weight& alpha) {
  return node("Sprime", {Formula::constant(beta)}, {Formula::constant(alpha)}, {});
}

ProofNode contract_left(ProofNode p, const Formula& x) {
  const Formula xx = Formula::times(x, x);
  ProofNode joined = times_left(std::move(p), x, x);
  return cut(absorb(id(x), x, x), std::move(joined), xx);
}

ProofNode double_neg_elim(const Formula& a) {
  return neg_left(neg_right(id(a), a), Formula::neg(a));
}

ProofNode double_neg_intro(const Formula& a) {
  return neg_right(neg_left(id(a), a), Formula::neg(a));
}

ProofNode and_to_times(const Formula& a, const Formula& b) {
  const Formula conj = Formula::with(a, b);
  ProofNode p = times_right(id(a), id(b), a, b);
  p = and_left(std::move(p), conj, 2);
  p = and_left(std::move(p), conj, 1);
  return contract_left(std::move(p), conj);
}

namespace {

class Refuter {
 public:
  explicit Refuter(Frame frame) : frame_(std::move(frame)) {}

  bool unsat(const Fs& g) {
    WorldSet s(frame_.world_count(), true);
    for (const auto& f : g) s = s & classical_models(f, frame_);
    return s.empty();
  }

  // A proof of g ⊢ (nothing) for a classically unsatisfiable g.
  ProofNode refute(Fs g) {
    Fs dropped;
    for (std::size_t i = 0; i < g.size();) {
      Fs rest = g;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (unsat(rest)) {
        dropped.push_back(g[i]);
        g = std::move(rest);
      } else {
        ++i;
      }
    }
    return weaken_left(refute_core(std::move(g)), dropped);
  }

 private:
  static Fs without(const Fs& g, std::size_t i) {
    Fs out = g;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  }

  // rest ⊢ a, from a refutation of rest, ¬a.
  ProofNode prove_from_refutation(const Fs& rest, const Formula& a) {
    const Formula na = Formula::neg(a);
    ProofNode p = neg_right(refute(concat(rest, {na})), na);
    return cut(std::move(p), double_neg_elim(a), Formula::neg(na));
  }

  ProofNode refute_core(Fs g) {
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] == Formula::zero()) return zero_axiom(without(g, i), {});

    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g[i].is(Kind::Neg) || !g[i].sub().is(Kind::Atom)) continue;
      const Formula& p = g[i].sub();
      auto j = std::find(g.begin(), g.end(), p);
      if (j == g.end()) continue;
      Fs others = without(g, i);
      others.erase(std::find(others.begin(), others.end(), p));
      return weaken_left(neg_left(id(p), p), others);
    }

    // Non-branching steps first.
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Formula f = g[i];
      const Fs rest = without(g, i);
      switch (f.kind()) {
        case Kind::Times: return times_left(refute(concat(rest, {f.left(), f.right()})), f.left(), f.right());
        case Kind::With: {
          ProofNode p = refute(concat(rest, {f.left(), f.right()}));
          p = and_left(std::move(p), f, 2);
          p = and_left(std::move(p), f, 1);
          return contract_left(std::move(p), f);
        }
        case Kind::Const: return one_left(refute(rest));
        case Kind::Neg: {
          const Formula& x = f.sub();
          if (x.is(Kind::Neg)) return neg_left(neg_right(refute(concat(rest, {x.sub()})), x.sub()), x);
          if (x == Formula::one()) return neg_left(one_axiom(rest), x);
          if (x == Formula::zero()) return neg_left(weaken_right(refute(rest), x), x);
          break;
        }
        case Kind::Atom: break;
      }
    }

    for (std::size_t i = 0; i < g.size(); ++i) {
      const Formula f = g[i];
      if (!f.is(Kind::Neg)) continue;
      const Formula& x = f.sub();
      if (!x.is(Kind::With) && !x.is(Kind::Times)) continue;
      const Fs rest = without(g, i);
      const Formula a = x.left();
      const Formula b = x.right();
      ProofNode both = and_right(prove_from_refutation(rest, a), prove_from_refutation(rest, b), a, b);
      if (x.is(Kind::Times)) both = cut(std::move(both), and_to_times(a, b), Formula::with(a, b));
      return neg_left(std::move(both), x);
    }
    throw std::logic_error("classical refutation: satisfiable literal set");
  }

  Frame frame_;
};

}  // namespace

ProofNode join_arrows(const Formula& beta, const Formula& x, const Formula& y) {
  const Formula w = Formula::with(make_arrow(beta, x), make_arrow(beta, y));
  ProofNode px = and_left(arrow_left(id(beta), id(x), beta, x), w, 1);
  ProofNode py = and_left(arrow_left(id(beta), id(y), beta, y), w, 2);
  return arrow_right(and_right(std::move(px), std::move(py), x, y), beta, Formula::with(x, y));
}

ProofNode weaken_clause(const Weight& alpha, const Formula& l, const Weight& beta, const Formula& m) {
  const Formula a = Formula::constant(alpha);
  const Formula b = Formula::constant(beta);
  return arrow_right(arrow_left(s_prime(beta, alpha), classical({l}, {m}), a, l), b, m);
}

ProofNode classical(const std::vector<Formula>& gamma, const std::vector<Formula>& delta) {
  std::set<std::string> names;
  for (const auto& f : gamma) collect_atoms(f, names);
  for (const auto& f : delta) collect_atoms(f, names);
  Refuter r{Frame(names)};

  Fs g = gamma;
  for (const auto& d : delta) g.push_back(Formula::neg(d));
  if (!r.unsat(g)) throw std::invalid_argument("sequent is not classically valid: " + print_sequent({gamma, delta}));

  ProofNode p = r.refute(std::move(g));
  for (const auto& d : delta) {
    const Formula nd = Formula::neg(d);
    p = neg_right(std::move(p), nd);
    p = cut(std::move(p), double_neg_elim(d), Formula::neg(nd));
  }
  return p;
}

}  // namespace dpl::build
