#include <doctest.h>

#include "dpl/checker.hpp"
#include "dpl/parser.hpp"
#include "dpl/proof_builder.hpp"
#include "dpl/semantics.hpp"

using namespace dpl;

namespace {

Formula P(const char* s) { return parse_formula(s); }

ProofNode node(const char* rule, const char* seq, std::vector<ProofNode> premises = {}, ProofParams params = {}) {
  return ProofNode{rule, parse_sequent(seq), std::move(params), std::move(premises)};
}

ProofParams at(std::size_t i) { return ProofParams{i, std::nullopt, std::nullopt}; }
ProofParams at(std::size_t i, int component) { return ProofParams{i, component, std::nullopt}; }

bool ok(const ProofNode& n) { return !check_node(n); }

std::string reason(const ProofNode& n) {
  const auto v = check_node(n);
  return v ? v->reason : "";
}

}  // namespace

TEST_CASE("sequent syntax") {
  const Sequent s = parse_sequent("p, q -> r |- r, 0.5");
  CHECK(s.gamma == std::vector<Formula>{P("p"), P("q -> r")});
  CHECK(s.delta == std::vector<Formula>{P("r"), P("0.5")});
  CHECK(print_sequent(s) == "p, q -> r |- r, 0.5");
  CHECK(print_sequent(parse_sequent("|- 1")) == "|- 1");
  CHECK(print_sequent(parse_sequent("0 |-")) == "0 |-");
  CHECK(print_sequent(s, PrintOptions{true}) == "p, q → r ⊢ r, 0.5");
  CHECK_THROWS_AS(parse_sequent("p, q"), ParseError);
  CHECK_THROWS_AS(parse_sequent("p, |- q"), ParseError);
  CHECK(same_multiset({P("p"), P("q"), P("p")}, {P("p"), P("p"), P("q")}));
  CHECK_FALSE(same_multiset({P("p"), P("q")}, {P("p"), P("q"), P("q")}));
}

TEST_CASE("axioms") {
  CHECK(ok(node("id", "p & q |- p & q")));
  CHECK_FALSE(ok(node("id", "p |- q")));
  CHECK_FALSE(ok(node("id", "p, p |- p")));
  CHECK(ok(node("oneAx", "p, q |- r, 1", {}, at(1))));
  CHECK(ok(node("zeroAx", "q, 0 |- r", {}, at(1))));
  CHECK_FALSE(ok(node("zeroAx", "q, 0 |- r", {}, at(0))));
  CHECK(ok(node("distr", "(p * r) & (q * r) |- (p & q) * r")));
  CHECK_FALSE(ok(node("distr", "(p * r) & (q * s) |- (p & q) * r")));
  CHECK_FALSE(ok(node("id", "p |- p", {node("id", "p |- p")})));
}

TEST_CASE("numerical rules use exact comparison") {
  CHECK(ok(node("Sprime", "0.3 |- 0.7")));
  CHECK(ok(node("Sprime", "1/3 |- 1/3")));
  CHECK_FALSE(ok(node("Sprime", "0.7 |- 0.3")));
  CHECK_FALSE(ok(node("Sprime", "1/3 |- 0.3333")));
  CHECK(ok(node("timesDef", "0.7 * 0.4 |- 0.1")));
  CHECK(ok(node("timesDef", "0.1 |- 0.7 * 0.4")));
  CHECK(ok(node("timesDef", "0.3 * 0.4 |- 0")));
  CHECK_FALSE(ok(node("timesDef", "0.7 * 0.4 |- 0.2")));
  CHECK(ok(node("negDef", "~0.7 |- 0.3")));
  CHECK_FALSE(ok(node("negDef", "~0.7 |- 0.7")));
}

TEST_CASE("there is no contraction") {
  const ProofNode premise = node("id", "p |- p");
  const ProofNode two = node("wL", "p, p |- p", {premise}, at(1));
  CHECK(ok(two));
  const ProofNode contraction = node("contraction", "p |- p", {two});
  CHECK(reason(contraction) == "no such rule in the calculus");
  for (const auto& r : rule_names()) {
    ProofNode attempt = contraction;
    attempt.rule = r;
    attempt.params = at(0);
    CHECK_MESSAGE(!ok(attempt), r);
  }
}

TEST_CASE("weakening and exchange") {
  const ProofNode p = node("id", "p |- p");
  CHECK(ok(node("wL", "q, p |- p", {p}, at(0))));
  CHECK(ok(node("wR", "p |- p, q", {p}, at(1))));
  CHECK_FALSE(ok(node("wR", "p |- p, q", {p}, at(0))));
  CHECK_FALSE(ok(node("wL", "q, p |- p", {p})));
  const ProofNode two = node("wL", "q, p |- p", {p}, at(0));
  CHECK(ok(node("exL", "p, q |- p", {two})));
  CHECK(ok(node("exR", "p, q |- p", {two})));
  CHECK_FALSE(ok(node("exL", "p, q, q |- p", {two})));
}

TEST_CASE("absorption needs a crisp formula and a retained occurrence") {
  const ProofNode p = node("id", "q |- q");
  CHECK(ok(node("abs", "q |- q * q", {p}, at(0))));
  const ProofNode c = node("id", "0.5 |- 0.5");
  CHECK_FALSE(ok(node("abs", "0.5 |- 0.5 * 0.5", {c}, at(0))));
  const ProofNode w = node("wL", "r, q |- q", {p}, at(0));
  CHECK(ok(node("abs", "r, q |- q * r", {w}, at(0))));
  CHECK_FALSE(ok(node("abs", "q |- q * r", {p}, at(0))));
}

TEST_CASE("additive and multiplicative rules") {
  const ProofNode pp = node("id", "p |- p");
  const ProofNode qq = node("id", "q |- q");
  CHECK(ok(node("andL", "p & q |- p", {pp}, at(0, 1))));
  CHECK_FALSE(ok(node("andL", "p & q |- p", {pp}, at(0, 2))));
  CHECK(ok(node("andL", "p & p |- p", {pp, pp}, at(0))));
  CHECK(ok(node("timesR", "p, q |- p * q", {pp, qq}, at(0))));
  CHECK_FALSE(ok(node("timesR", "p |- p * q", {pp, qq}, at(0))));
  const ProofNode both = node("timesR", "p, q |- p * q", {pp, qq}, at(0));
  CHECK(ok(node("timesL", "p * q |- p * q", {both}, at(0))));
  const ProofNode wpq = node("wL", "q, p |- p", {pp}, at(0));
  const ProofNode wqp = node("wL", "p, q |- q", {qq}, at(1));
  CHECK(ok(node("andR", "p, q |- p & q", {wpq, wqp}, at(0))));
  CHECK(ok(node("oplusR", "p |- p | q", {pp}, at(0, 1))));
  CHECK(ok(node("oplusL", "p | q |- p, q", {node("wR", "p |- p, q", {pp}, at(1)), node("wR", "q |- p, q", {qq}, at(0))}, at(0))));
  CHECK(ok(node("parR", "p |- p % q", {node("wR", "p |- p, q", {pp}, at(1))}, at(0))));
  CHECK(ok(node("parL", "p % q |- p, q", {pp, qq}, at(0))));
  CHECK(ok(node("arrowL", "p, p -> q |- q", {pp, qq}, at(1))));
  CHECK(ok(node("arrowR", "|- p -> p", {pp}, at(0))));
  CHECK(ok(node("negL", "p, ~p |-", {pp}, at(1))));
  CHECK(ok(node("negR", "|- p, ~p", {pp}, at(1))));
  CHECK(ok(node("one", "1, p |- p", {pp}, at(0))));
  CHECK_FALSE(ok(node("one", "0.5, p |- p", {pp}, at(0))));
}

TEST_CASE("cut") {
  const ProofNode a = node("Sprime", "0.3 |- 0.5");
  const ProofNode b = node("Sprime", "0.5 |- 0.7");
  CHECK(ok(node("cut", "0.3 |- 0.7", {a, b}, ProofParams{std::nullopt, std::nullopt, P("0.5")})));
  CHECK_FALSE(ok(node("cut", "0.3 |- 0.7", {a, b})));
  CHECK_FALSE(ok(node("cut", "0.3 |- 0.7", {a, b}, ProofParams{std::nullopt, std::nullopt, P("0.7")})));
}

TEST_CASE("violations are reported in preorder with a path") {
  const ProofNode bad = node("Sprime", "0.7 |- 0.3");
  const ProofNode good = node("Sprime", "0.3 |- 0.7");
  const ProofNode root = node("cut", "0.3 |- 0.3", {good, bad}, ProofParams{std::nullopt, std::nullopt, P("0.7")});
  const auto v = check_proof(root);
  REQUIRE(v);
  CHECK(v->rule == "Sprime");
  CHECK(v->path == "1");
  CHECK(v->message().find("premise path 1") != std::string::npos);
  CHECK_FALSE(check_proof(good));
}

TEST_CASE("builder output checks and is sound") {
  using namespace build;
  const std::vector<std::pair<ProofNode, const char*>> proofs = {
      {contract_left(times_right(id(P("p")), id(P("p")), P("p"), P("p")), P("p")), "p |- p * p"},
      {double_neg_elim(P("p * q")), "~~(p * q) |- p * q"},
      {double_neg_intro(P("0.3")), "0.3 |- ~~0.3"},
      {and_to_times(P("p"), P("q -> p")), "p & (q -> p) |- p * (q -> p)"},
      {weaken_clause(Weight(7, 10), P("p & q"), Weight(1, 2), P("q")), "0.7 -> p & q |- 0.5 -> q"},
      {classical({P("p"), P("p -> q")}, {P("q")}), "p, p -> q |- q"},
      {classical({}, {P("p | ~p")}), "|- p | ~p"},
      {classical({P("~(p & q)"), P("p")}, {P("~q")}), "~(p & q), p |- ~q"},
  };
  for (const auto& [p, expect] : proofs) {
    const auto v = check_proof(p);
    CHECK_MESSAGE(!v, (v ? v->message() : ""));
    CHECK(equivalent(p.conclusion, parse_sequent(expect)));
    CHECK(valid_sequent_sem(p.conclusion.gamma, p.conclusion.delta));
  }
  CHECK_THROWS_AS(classical({P("p")}, {P("q")}), std::invalid_argument);
}
