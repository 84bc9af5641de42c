#include <doctest.h>

#include "dpl/parser.hpp"
#include "support/generators.hpp"

using namespace dpl;

namespace {

Formula P(const char* s) { return parse_formula(s); }
Formula atom(const char* s) { return Formula::atom(s); }

SourceSpan span_of(const char* text) {
  try {
    parse_formula(text);
  } catch (const ParseError& e) {
    return e.span();
  }
  FAIL("expected a parse error for ", text);
  return {};
}

}  // namespace

TEST_CASE("arrow with a weight antecedent") {
  CHECK(P("0.7 -> p") ==
        Formula::neg(Formula::times(Formula::constant(Weight(7, 10)), Formula::neg(atom("p")))));
}

TEST_CASE("precedence: ~ binds tightest, then *, then &") {
  CHECK(P("~p & q * r") == Formula::with(Formula::neg(atom("p")), Formula::times(atom("q"), atom("r"))));
  CHECK(P("p | q & r") == make_oplus(atom("p"), Formula::with(atom("q"), atom("r"))));
  CHECK(P("p % q | r") == make_par(atom("p"), make_oplus(atom("q"), atom("r"))));
  CHECK(P("p % q -> r") == make_arrow(make_par(atom("p"), atom("q")), atom("r")));
}

TEST_CASE("associativity") {
  CHECK(P("p & q & r") == Formula::with(Formula::with(atom("p"), atom("q")), atom("r")));
  CHECK(P("p * q * r") == Formula::times(Formula::times(atom("p"), atom("q")), atom("r")));
  CHECK(P("p -> q -> r") == make_arrow(atom("p"), make_arrow(atom("q"), atom("r"))));
}

TEST_CASE("weight literals") {
  CHECK(P("3/4") == Formula::constant(Weight(3, 4)));
  CHECK(P("0") == Formula::zero());
  CHECK(P("1.0") == Formula::one());
}

TEST_CASE("errors carry spans") {
  CHECK_THROWS_AS(P("1.5 -> p"), ParseError);
  CHECK_THROWS_AS(P("(p & q"), ParseError);
  CHECK_THROWS_AS(P("p & "), ParseError);
  CHECK_THROWS_AS(P("p $ q"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("p q"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  const SourceSpan s = span_of("p & 1.5");
  CHECK(s.start == 4);
  CHECK(s.end == 7);
  CHECK(span_of("p $ q").start == 2);
}

TEST_CASE("deep nesting is an error, not a crash") {
  const std::string deep(100000, '(');
  CHECK_THROWS_AS(parse_formula(deep + "p"), ParseError);
  const std::string negs(100000, '~');
  CHECK_THROWS_AS(parse_formula(negs + "p"), ParseError);
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(print_formula(Formula::with(atom("p"), atom("q"))) == "p & q");
  CHECK(print_formula(Formula::times(Formula::with(atom("p"), atom("q")), atom("r"))) == "(p & q) * r");
  CHECK(print_formula(Formula::constant(Weight(7, 10))) == "0.7");
  CHECK(print_formula(Formula::constant(Weight(1, 3))) == "1/3");
  CHECK(print_formula(P("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(print_formula(P("p -> q -> r")) == "p -> q -> r");
  CHECK(print_formula(P("~(p & q)")) == "~(p & q)");
  CHECK(print_formula(P("~~p")) == "~~p");
  CHECK(print_formula(P("0.7 -> p"), PrintOptions{true}) == "0.7 → p");
}

TEST_CASE("print then parse is the identity") {
  gen::Gen g(21);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = g.formula(4, 8);
    CHECK(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("ast rendering") {
  CHECK(print_ast(P("0.7 -> p")) == "(neg (times (const 7/10) (neg (atom p))))");
}

TEST_CASE("knowledge-base files") {
  const auto kb = parse_kb("0.7 :: p\n0.4 :: p -> q\n");
  REQUIRE(kb.size() == 2);
  CHECK(kb[0] == Clause{Weight(7, 10), atom("p")});
  CHECK(kb[1] == Clause{Weight(2, 5), make_arrow(atom("p"), atom("q"))});

  const auto kb2 = parse_kb("# comment\n\n1 :: p | q   # trailing\n");
  REQUIRE(kb2.size() == 1);
  CHECK(kb2[0] == Clause{Weight::one(), make_oplus(atom("p"), atom("q"))});

  CHECK(parse_kb("").empty());
  CHECK(print_kb(kb) == "0.7 :: p\n0.4 :: p -> q\n");
  CHECK(parse_kb(print_kb(kb)) == kb);
}

TEST_CASE("knowledge-base errors name the line") {
  try {
    parse_kb("0.7 :: p\n0.5 :: 0.3 -> p\n");
    FAIL("expected an error");
  } catch (const KbError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_kb("0.7 p"), KbError);
  CHECK_THROWS_AS(parse_kb("2 :: p"), KbError);
  CHECK_THROWS_AS(parse_kb("0.5 :: p &"), KbError);
}
