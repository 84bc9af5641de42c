#include <doctest.h>

#include "dpl/checker.hpp"
#include "dpl/derivations.hpp"
#include "dpl/proof_io.hpp"
#include "dpl/prover.hpp"

using namespace dpl;

TEST_CASE("write then read reproduces the tree and the text") {
  for (const auto& d : derivations::library()) {
    const std::string text = write_proof(d.proof, {"derivation " + d.name});
    const ProofNode back = read_proof(text);
    CHECK(back == d.proof);
    CHECK(write_proof(back, {"derivation " + d.name}) == text);
  }
}

TEST_CASE("format") {
  const ProofNode p = derivations::weaken_weight(Weight(7, 10), Weight(1, 2), parse_formula("p"));
  const std::string text = write_proof(p, {"S"});
  CHECK(text.rfind("; S\n(arrowR [0.7 -> p |- 0.5 -> p] {i: 0}\n  (arrowL", 0) == 0);
  CHECK(text.back() == '\n');
}

TEST_CASE("cut formulas and components survive") {
  ProofNode n{"cut", parse_sequent("0.3 |- 0.7"), ProofParams{std::nullopt, 2, parse_formula("p -> 1/3")}, {}};
  n.premises.push_back(ProofNode{"Sprime", parse_sequent("0.3 |- 1/3"), {}, {}});
  const ProofNode back = read_proof(write_proof(n));
  CHECK(back == n);
}

TEST_CASE("malformed files are parse errors") {
  CHECK_THROWS_AS(read_proof(""), ParseError);
  CHECK_THROWS_AS(read_proof("(id [p |- p]"), ParseError);
  CHECK_THROWS_AS(read_proof("(id p |- p)"), ParseError);
  CHECK_THROWS_AS(read_proof("(id [p |- p] {i: x})"), ParseError);
  CHECK_THROWS_AS(read_proof("(id [p |- p] {zz: 1})"), ParseError);
  CHECK_THROWS_AS(read_proof("(id [p |- p]) trailing"), ParseError);
  CHECK_THROWS_AS(read_proof("(id [p & |- p])"), ParseError);
}

TEST_CASE("unknown rules read fine and fail the check") {
  const ProofNode p = read_proof("(contraction [p |- p] (wL [p, p |- p] {i: 1} (id [p |- p])))");
  const auto v = check_proof(p);
  REQUIRE(v);
  CHECK(v->rule == "contraction");
}
