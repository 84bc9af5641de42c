#include <doctest.h>

#include "dpl/weight.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace dpl;

TEST_CASE("lukasiewicz product clamps at zero") {
  CHECK(w_times(Weight(7, 10), Weight(4, 10)) == Weight(1, 10));
  CHECK(w_times(Weight(3, 10), Weight(4, 10)) == Weight::zero());
  CHECK(w_times(Weight(2, 3), Weight::one()) == Weight(2, 3));
}

TEST_CASE("par is the dual of the product") {
  CHECK(w_par(Weight(8, 10), Weight(7, 10)) == Weight::one());
  CHECK(w_par(Weight(1, 5), Weight(1, 3)) == Weight(8, 15));
  gen::Gen g(11);
  for (int i = 0; i < 300; ++i) {
    const Weight a = g.weight(12), b = g.weight(12);
    CHECK(w_par(a, b) == w_neg(w_times(w_neg(a), w_neg(b))));
  }
}

TEST_CASE("operations agree with 64-bit rationals") {
  gen::Gen g(12);
  using oracle::Q;
  for (int i = 0; i < 500; ++i) {
    const Weight a = g.weight(17), b = g.weight(17);
    const Q qa = oracle::to_q(a), qb = oracle::to_q(b);
    CHECK(oracle::same(w_times(a, b), std::max(Q(0), qa + qb - Q(1))));
    CHECK(oracle::same(w_neg(a), Q(1) - qa));
    CHECK(oracle::same(w_min(a, b), std::min(qa, qb)));
    CHECK(oracle::same(w_max(a, b), std::max(qa, qb)));
    CHECK(oracle::same(w_par(a, b), std::min(Q(1), qa + qb)));
  }
}

TEST_CASE("product is commutative, associative, with unit 1") {
  gen::Gen g(13);
  for (int i = 0; i < 300; ++i) {
    const Weight a = g.weight(), b = g.weight(), c = g.weight();
    CHECK(w_times(a, b) == w_times(b, a));
    CHECK(w_times(w_times(a, b), c) == w_times(a, w_times(b, c)));
    CHECK(w_times(a, Weight::one()) == a);
  }
}

TEST_CASE("range is enforced") {
  CHECK_THROWS_AS(Weight(3, 2), WeightRangeError);
  CHECK_THROWS_AS(Weight::parse("1.5"), WeightRangeError);
  CHECK_THROWS_AS(Weight::parse("-0.1"), std::invalid_argument);
  CHECK_THROWS_AS(Weight::parse("0.x"), std::invalid_argument);
  CHECK_THROWS_AS(Weight::parse("1/0"), std::invalid_argument);
}

TEST_CASE("decimal literals are read exactly") {
  CHECK(Weight::parse("0.7") == Weight(7, 10));
  CHECK(Weight::parse("2/4") == Weight(1, 2));
  CHECK(Weight::parse("1") == Weight::one());
  CHECK(Weight::parse(".25") == Weight(1, 4));
  // Leading zeros are decimal digits, not an octal prefix.
  CHECK(Weight::parse("0.08") == Weight(2, 25));
  CHECK(Weight::parse("0.0625") == Weight(1, 16));
  CHECK(Weight::parse("010/100") == Weight(1, 10));
}

TEST_CASE("printing") {
  CHECK(Weight(2, 5).fraction() == "2/5");
  CHECK(Weight(2, 5).decimal() == "0.4");
  CHECK(Weight(1, 3).decimal() == std::nullopt);
  CHECK(Weight(1, 3).str() == "1/3");
  CHECK(Weight(1, 8).str() == "0.125");
  CHECK(Weight::one().str() == "1");
  CHECK(Weight::zero().str() == "0");
  gen::Gen g(14);
  for (int i = 0; i < 300; ++i) {
    const Weight w = g.weight(40);
    CHECK(Weight::parse(w.str()) == w);
    CHECK(Weight::parse(w.fraction()) == w);
  }
}
