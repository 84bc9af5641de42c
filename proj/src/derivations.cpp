#include "dpl/derivations.hpp"

#include "dpl/parser.hpp"
#include "dpl/proof_builder.hpp"

namespace dpl::derivations {

namespace {

using namespace build;

Formula k(const Weight& w) { return Formula::constant(w); }

// Y ⊢ x → Y.
ProofNode arrow_intro(const Formula& x, const Formula& y) {
  return arrow_right(weaken_left(id(y), x), x, y);
}

// ¬x ⊢ x → Y.
ProofNode arrow_from_negated_antecedent(const Formula& x, const Formula& y) {
  const Formula ny = Formula::neg(y);
  ProofNode p = times_left(weaken_left(id(x), ny), x, ny);
  p = neg_left(std::move(p), x);
  return neg_right(std::move(p), Formula::times(x, ny));
}

// Γ ⊢ Δ from Γ, X ⊢ Δ and Γ, ¬X ⊢ Δ, cutting on X ⊕ ¬X (X crisp).
ProofNode case_split(ProofNode with_x, ProofNode with_not_x, const Formula& x) {
  const Formula nx = Formula::neg(x);
  const Formula em = make_oplus(x, nx);
  ProofNode joined = oplus_left(std::move(with_x), std::move(with_not_x), x, nx);
  return cut(classical({}, {em}), std::move(joined), em);
}

}  // namespace

ProofNode identity(const Formula& a) { return id(a); }

ProofNode contraction_via_absorption(const Formula& l) {
  return contract_left(times_right(id(l), id(l), l, l), l);
}

ProofNode modus_ponens(const Formula& a, const Formula& b) {
  const Formula conj = Formula::with(a, make_arrow(a, b));
  ProofNode p = arrow_left(id(a), id(b), a, b);
  p = and_left(std::move(p), conj, 2);
  p = and_left(std::move(p), conj, 1);
  return contract_left(std::move(p), conj);
}

ProofNode weaken_weight(const Weight& alpha, const Weight& beta, const Formula& a) {
  return arrow_right(arrow_left(s_prime(beta, alpha), id(a), k(alpha), a), k(beta), a);
}

ProofNode graded_modus_ponens(const Weight& alpha, const Weight& beta, const Formula& a, const Formula& b) {
  const Weight gamma = w_min(alpha, beta);
  const Formula g = k(gamma);
  const Formula ab = make_arrow(a, b);
  const Formula w = Formula::with(make_arrow(k(alpha), a), make_arrow(k(beta), ab));

  // Both premises weakened to the common weight γ, then joined.
  const Formula ga = make_arrow(g, a);
  const Formula gab = make_arrow(g, ab);
  ProofNode p = and_right(and_left(weaken_weight(alpha, gamma, a), w, 1),
                          and_left(weaken_weight(beta, gamma, ab), w, 2), ga, gab);
  p = cut(std::move(p), join_arrows(g, a, ab), Formula::with(ga, gab));

  const Formula mp = Formula::with(a, ab);
  ProofNode to_b = arrow_right(arrow_left(s_prime(gamma, gamma), modus_ponens(a, b), g, mp), g, b);
  p = cut(std::move(p), std::move(to_b), make_arrow(g, mp));

  // γ → B ⊢ (α & β) → B, since α & β ⊢ γ.
  const Formula both = Formula::with(k(alpha), k(beta));
  ProofNode pick = and_left(id(g), both, gamma == alpha ? 1 : 2);
  ProofNode widen = arrow_right(arrow_left(std::move(pick), id(b), g, b), both, b);
  return cut(std::move(p), std::move(widen), make_arrow(g, b));
}

ProofNode times_reduction(const Weight& alpha, const Formula& l, const Weight& beta, const Formula& m) {
  const Formula a = k(alpha);
  const Formula b = k(beta);
  const Formula ca = make_arrow(a, l);
  const Formula cb = make_arrow(b, m);
  const Formula c1 = make_arrow(b, make_arrow(l, m));
  const Formula c2 = make_arrow(a, make_arrow(m, l));
  const Formula lm = make_oplus(l, m);
  const Formula c3 = make_arrow(make_par(a, b), lm);

  ProofNode p1 = weaken_left(weaken_clause(beta, m, beta, make_arrow(l, m)), ca);
  ProofNode p2 = weaken_left(weaken_clause(alpha, l, alpha, make_arrow(m, l)), cb);

  ProofNode both = par_left(arrow_left(id(a), id(l), a, l), arrow_left(id(b), id(m), b, m), a, b);
  both = par_right(std::move(both), l, m);
  both = cut(std::move(both), classical({make_par(l, m)}, {lm}), make_par(l, m));
  ProofNode p3 = arrow_right(std::move(both), make_par(a, b), lm);

  ProofNode p = and_right(and_right(std::move(p1), std::move(p2), c1, c2), std::move(p3), Formula::with(c1, c2), c3);
  return times_left(std::move(p), ca, cb);
}

ProofNode times_reduction_converse(const Weight& alpha, const Formula& l, const Weight& beta, const Formula& m) {
  const Formula a = k(alpha);
  const Formula b = k(beta);
  const Formula ca = make_arrow(a, l);
  const Formula cb = make_arrow(b, m);
  const Formula c1 = make_arrow(b, make_arrow(l, m));
  const Formula c2 = make_arrow(a, make_arrow(m, l));
  const Formula c12 = Formula::with(c1, c2);
  const Formula lm = make_oplus(l, m);
  const Formula ab = make_par(a, b);
  const Formula c3 = make_arrow(ab, lm);
  const Formula phi = Formula::with(c12, c3);
  const Formula nl = Formula::neg(l);
  const Formula nm = Formula::neg(m);

  // L, M: both clauses hold outright.
  ProofNode case_lm = weaken_left(times_right(arrow_intro(a, l), arrow_intro(b, m), ca, cb), phi);

  // L, ¬M: the first conjunct with L gives β → M.
  ProofNode lb = arrow_left(id(b), arrow_left(id(l), id(m), l, m), b, make_arrow(l, m));
  lb = and_left(and_left(arrow_right(std::move(lb), b, m), c12, 1), phi, 1);
  ProofNode case_lnm = times_right(arrow_intro(a, l), std::move(lb), ca, cb);
  case_lnm = weaken_left(contract_left(std::move(case_lnm), l), nm);

  // ¬L, M: symmetric, through the second conjunct.
  ProofNode ma = arrow_left(id(a), arrow_left(id(m), id(l), m, l), a, make_arrow(m, l));
  ma = and_left(and_left(arrow_right(std::move(ma), a, l), c12, 2), phi, 1);
  ProofNode case_nlm = times_right(std::move(ma), arrow_intro(b, m), ca, cb);
  case_nlm = weaken_left(contract_left(std::move(case_nlm), m), nl);

  // ¬L, ¬M: the third conjunct leaves ¬(α ℘ β), i.e. ¬α ⊗ ¬β.
  const Formula na = Formula::neg(a);
  const Formula nb = Formula::neg(b);
  ProofNode from_negs = times_right(arrow_from_negated_antecedent(a, l), arrow_from_negated_antecedent(b, m), ca, cb);
  from_negs = times_left(std::move(from_negs), na, nb);
  const Formula nlm = Formula::neg(lm);
  ProofNode third = times_right(id(ab), classical({nl, nm}, {nlm}), ab, nlm);
  third = neg_right(neg_left(std::move(third), Formula::times(ab, nlm)), ab);
  third = cut(std::move(third), double_neg_elim(Formula::times(na, nb)), Formula::neg(ab));
  third = cut(std::move(third), std::move(from_negs), Formula::times(na, nb));
  ProofNode case_nlnm = and_left(std::move(third), phi, 2);

  ProofNode with_l = case_split(std::move(case_lm), std::move(case_lnm), m);
  ProofNode with_nl = case_split(std::move(case_nlm), std::move(case_nlnm), m);
  return case_split(std::move(with_l), std::move(with_nl), l);
}

ProofNode negation_reduction(const Weight& alpha, const Formula& l) {
  const Formula a = k(alpha);
  const Formula nl = Formula::neg(l);
  const Formula prod = Formula::times(a, nl);
  ProofNode pa = times_left(weaken_left(id(a), nl), a, nl);
  ProofNode pl = times_left(weaken_left(id(nl), a), a, nl);
  return cut(double_neg_elim(prod), and_right(std::move(pa), std::move(pl), a, nl), prod);
}

ProofNode negation_reduction_converse(const Weight& alpha, const Formula& l) {
  const Formula a = k(alpha);
  const Formula nl = Formula::neg(l);
  const Formula conj = Formula::with(a, nl);
  const Formula prod = Formula::times(a, nl);
  ProofNode absorbed = absorb(and_left(id(nl), conj, 2), nl, conj);
  ProofNode rebuilt = and_left(times_right(id(a), id(nl), a, nl), conj, 1);
  rebuilt = times_left(std::move(rebuilt), nl, conj);
  ProofNode p = cut(std::move(absorbed), std::move(rebuilt), Formula::times(nl, conj));
  return cut(std::move(p), double_neg_intro(prod), prod);
}

ProofNode times_oplus_distribution(const Formula& a, const Formula& b, const Formula& c) {
  const Formula x = make_oplus(Formula::times(a, c), Formula::times(b, c));
  ProofNode pa = oplus_right(times_right(id(a), id(c), a, c), x, 1);
  ProofNode pb = oplus_right(times_right(id(b), id(c), b, c), x, 2);
  return times_left(oplus_left(std::move(pa), std::move(pb), a, b), make_oplus(a, b), c);
}

ProofNode times_oplus_distribution_converse(const Formula& a, const Formula& b, const Formula& c) {
  const Formula ab = make_oplus(a, b);
  ProofNode pa = times_left(times_right(oplus_right(id(a), ab, 1), id(c), ab, c), a, c);
  ProofNode pb = times_left(times_right(oplus_right(id(b), ab, 2), id(c), ab, c), b, c);
  return oplus_left(std::move(pa), std::move(pb), Formula::times(a, c), Formula::times(b, c));
}

std::vector<Named> library() {
  const Formula p = Formula::atom("p");
  const Formula q = Formula::atom("q");
  const Weight a(7, 10), b(2, 5);
  std::vector<Named> out;
  out.push_back({"id", identity(parse_formula("p * 0.3"))});
  out.push_back({"contraction-via-absorption", contraction_via_absorption(make_arrow(p, q))});
  out.push_back({"MP", modus_ponens(p, q)});
  out.push_back({"S", weaken_weight(a, Weight(1, 2), p)});
  out.push_back({"GMP", graded_modus_ponens(a, b, p, q)});
  out.push_back({"times-red", times_reduction(Weight(4, 5), p, a, q)});
  out.push_back({"times-red-converse", times_reduction_converse(Weight(4, 5), p, a, q)});
  out.push_back({"neg-red", negation_reduction(Weight(3, 5), p)});
  out.push_back({"neg-red-converse", negation_reduction_converse(Weight(3, 5), p)});
  out.push_back({"times-oplus-distr", times_oplus_distribution(p, Formula::constant(Weight(3, 10)), q)});
  out.push_back(
      {"times-oplus-distr-converse", times_oplus_distribution_converse(p, Formula::constant(Weight(3, 10)), q)});
  return out;
}

}  // namespace dpl::derivations
