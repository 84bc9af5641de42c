#include <doctest.h>

#include "dpl/formula.hpp"
#include "dpl/parser.hpp"

using namespace dpl;

TEST_CASE("derived connectives expand to the core ones") {
  const Formula p = Formula::atom("p"), q = Formula::atom("q");
  CHECK(make_arrow(p, q) == Formula::neg(Formula::times(p, Formula::neg(q))));
  CHECK(make_oplus(p, q) == Formula::neg(Formula::with(Formula::neg(p), Formula::neg(q))));
  CHECK(make_par(p, q) == Formula::neg(Formula::times(Formula::neg(p), Formula::neg(q))));
}

TEST_CASE("matchers invert the expansions") {
  const Formula a = parse_formula("p & 0.3"), b = parse_formula("~q");
  CHECK(match_arrow(make_arrow(a, b)) == std::pair{a, b});
  CHECK(match_oplus(make_oplus(a, b)) == std::pair{a, b});
  CHECK(match_par(make_par(a, b)) == std::pair{a, b});
  CHECK_FALSE(match_arrow(Formula::neg(a)));
  CHECK_FALSE(match_oplus(make_arrow(a, b)));
}

TEST_CASE("crispness") {
  CHECK(is_l1(parse_formula("p -> q | ~r")));
  CHECK(is_l1(parse_formula("p & 1 * 0")));
  CHECK_FALSE(is_l1(parse_formula("0.7 -> p")));
}

TEST_CASE("atoms are sorted and unique") {
  const auto as = atoms(parse_formula("r & (p -> r) * q1"));
  CHECK(std::vector<std::string>(as.begin(), as.end()) == std::vector<std::string>{"p", "q1", "r"});
}

TEST_CASE("size and depth") {
  const Formula f = parse_formula("0.7 -> p");
  CHECK(f.size() == 5);
  CHECK(f.depth() == 4);
}

TEST_CASE("structural equality and ordering") {
  CHECK(parse_formula("p & q") == parse_formula("(p & q)"));
  CHECK_FALSE(parse_formula("p & q") == parse_formula("q & p"));
  CHECK(Formula::constant(Weight(1, 2)) == parse_formula("2/4"));
  const Formula a = parse_formula("p"), b = parse_formula("q");
  CHECK((a < b) != (b < a));
}
