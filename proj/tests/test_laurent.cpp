/**
 * @file test_laurent.cpp
 * @brief Ring laws, quantum-integer recurrences, and I/O round-trips for
 *        LaurentPoly.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laurent.hpp"

using kauffman::Integer;
using kauffman::LaurentPoly;
using kauffman::quantum_integer;
using kauffman::q_power_difference;
using kauffman::unknot_value;

namespace {

/// Random sparse polynomial with exponents in [-6, 6] and small coefficients.
LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> exp_dist(-6, 6);
  std::uniform_int_distribution<int> coeff_dist(-9, 9);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p += LaurentPoly::monomial(exp_dist(rng), coeff_dist(rng));
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic on small values") {
  const LaurentPoly q = LaurentPoly::q_power(1);
  const LaurentPoly qi = LaurentPoly::q_power(-1);

  CHECK(q + qi == quantum_integer(2));
  CHECK((q + (-q)).is_zero());
  CHECK(quantum_integer(2) + quantum_integer(2) ==
        LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-1, 2));
  CHECK((q + qi) * (q + qi) ==
        LaurentPoly::q_power(2) + LaurentPoly::constant(2) + LaurentPoly::q_power(-2));
  const LaurentPoly x = LaurentPoly::parse("q^3 - 2q + 5");
  CHECK(x * LaurentPoly::one() == x);
  CHECK((x * LaurentPoly()).is_zero());
  CHECK(x - x == LaurentPoly());
}

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(0).is_zero());
  CHECK(quantum_integer(1) == LaurentPoly::one());
  CHECK(quantum_integer(2) == LaurentPoly::parse("q + q^-1"));
  CHECK(quantum_integer(3) == LaurentPoly::parse("q^2 + 1 + q^-2"));
  CHECK(quantum_integer(-3) == -quantum_integer(3));

  SUBCASE("[a][2] = [a+1] + [a-1]") {
    for (int a = 1; a <= 10; ++a)
      CHECK(quantum_integer(a) * quantum_integer(2) ==
            quantum_integer(a + 1) + quantum_integer(a - 1));
  }
  SUBCASE("(q - q^-1) [m] = q^m - q^-m") {
    const LaurentPoly diff = q_power_difference(1);
    for (int m = -10; m <= 10; ++m)
      CHECK(diff * quantum_integer(m) == q_power_difference(m));
  }
  SUBCASE("[m] is bar-invariant") {
    for (int m = 0; m <= 8; ++m) CHECK(quantum_integer(m).bar() == quantum_integer(m));
  }
}

TEST_CASE("circle value") {
  CHECK(unknot_value(2) == LaurentPoly::parse("q^2 + 2 + q^-2"));
  CHECK(unknot_value(3) == LaurentPoly::parse("q^4 + q^2 + 2 + q^-2 + q^-4"));
  for (int n = 2; n <= 5; ++n) CHECK(unknot_value(n) == quantum_integer(2 * n - 1) + LaurentPoly::one());
}

TEST_CASE("ring laws on random values") {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    const LaurentPoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a.shifted(3).shifted(-3) == a);
    CHECK(a.shifted(2) == a * LaurentPoly::q_power(2));
  }
}

TEST_CASE("pow") {
  const LaurentPoly d = quantum_integer(2);
  CHECK(d.pow(0) == LaurentPoly::one());
  CHECK(d.pow(1) == d);
  CHECK(d.pow(3) == d * d * d);
  CHECK(LaurentPoly().pow(0) == LaurentPoly::one());
  CHECK(LaurentPoly().pow(2).is_zero());
}

TEST_CASE("text rendering") {
  CHECK(LaurentPoly().to_text() == "0");
  CHECK(LaurentPoly::one().to_text() == "1");
  CHECK(LaurentPoly::constant(-7).to_text() == "-7");
  CHECK(LaurentPoly::q_power(1).to_text() == "q");
  CHECK(LaurentPoly::q_power(-1).to_text() == "q^-1");
  CHECK(LaurentPoly::monomial(2, -1).to_text() == "-q^2");
  const LaurentPoly mixed = LaurentPoly::monomial(4) + LaurentPoly::constant(-2) +
                            LaurentPoly::monomial(-2, 3);
  CHECK(mixed.to_text() == "q^4 - 2 + 3q^-2");
  CHECK(unknot_value(2).to_text() == "q^2 + 2 + q^-2");
  CHECK((LaurentPoly::monomial(1, -5) + LaurentPoly::monomial(0, 1)).to_text() == "-5q + 1");
}

TEST_CASE("text parsing") {
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK(LaurentPoly::parse("q^4 - 2 + 3q^-2").to_text() == "q^4 - 2 + 3q^-2");
  CHECK(LaurentPoly::parse("  -q^2+ q^-3 ") ==
        LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-3));
  CHECK(LaurentPoly::parse("2q+2q^-1") == quantum_integer(2) + quantum_integer(2));
  CHECK(LaurentPoly::parse("q + q") == LaurentPoly::monomial(1, 2));
  CHECK(LaurentPoly::parse("q - q").is_zero());
  CHECK_THROWS_AS(LaurentPoly::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("q^"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("q +"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("3 q"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("x^2"), std::invalid_argument);

  SUBCASE("round trip on random values") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      const LaurentPoly a = random_poly(rng);
      CHECK(LaurentPoly::parse(a.to_text()) == a);
    }
  }
}

TEST_CASE("json round trip") {
  const LaurentPoly mixed = LaurentPoly::monomial(4) + LaurentPoly::constant(-2) +
                            LaurentPoly::monomial(-2, 3);
  const nlohmann::json j = mixed.to_json();
  REQUIRE(j.is_array());
  CHECK(j[0][0].get<int>() == 4);     // descending order
  CHECK(j[0][1].get<std::string>() == "1");
  CHECK(j[2][1].get<std::string>() == "3");
  CHECK(LaurentPoly::from_json(j) == mixed);
  CHECK(LaurentPoly::from_json(LaurentPoly().to_json()).is_zero());

  SUBCASE("round trip on random values") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      const LaurentPoly a = random_poly(rng);
      CHECK(LaurentPoly::from_json(a.to_json()) == a);
    }
  }
}

TEST_CASE("huge coefficients survive") {
  // (q + q^-1)^64 has central coefficient C(64,32) ~ 1.8e18; go bigger to be
  // sure we are beyond 64-bit range.
  const LaurentPoly d = quantum_integer(2).pow(128);
  const Integer central = d.coefficient(0);
  CHECK(central > Integer("18446744073709551615"));  // > 2^64 - 1
  CHECK(LaurentPoly::parse(d.to_text()) == d);
  CHECK(LaurentPoly::from_json(d.to_json()) == d);
}
