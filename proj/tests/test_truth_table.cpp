#include <doctest.h>

#include "dpl/parser.hpp"
#include "dpl/truth_table.hpp"
#include "support/generators.hpp"

using namespace dpl;

TEST_CASE("support ignores irrelevant atoms") {
  const Frame f(std::vector<std::string>{"p", "q", "r"});
  CHECK(support(classical_models(parse_formula("p & (q | ~q)"), f), f) == std::vector<std::size_t>{0});
}

TEST_CASE("synthesized bodies have the same models") {
  gen::Gen g(51);
  const Frame f(std::vector<std::string>{"p", "q", "r", "s"});
  for (int i = 0; i < 400; ++i) {
    const Formula l = g.crisp(4, 6);
    const WorldSet m = classical_models(l, f);
    const auto s = synthesize(m, f);
    REQUIRE(s.has_value());
    CHECK(classical_models(*s, f) == m);
    CHECK(s->size() <= 2 * l.size() + 8);
  }
}

TEST_CASE("small cases print naturally") {
  const Frame f(std::vector<std::string>{"p", "q"});
  auto show = [&](const char* src) { return print_formula(*synthesize(classical_models(parse_formula(src), f), f)); };
  CHECK(show("p & q") == "p & q");
  CHECK(show("~(p & q)") == "~p | ~q");
  CHECK(show("p -> q") == "~p | q");
  CHECK(show("p | ~p") == "1");
  CHECK(show("p & ~p") == "0");
}
