#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "obav/rational.hpp"
#include "obav/series.hpp"

using namespace obav;

TEST_CASE("Rational normalizes and parses") {
  REQUIRE(Rational(2, 4) == Rational(1, 2));
  REQUIRE(Rational(-2, -4) == Rational(1, 2));
  REQUIRE(Rational(2, -4) == Rational(-1, 2));
  REQUIRE(Rational::parse("13/512") == Rational(13, 512));
  REQUIRE(Rational::parse("-3") == Rational(-3));
  REQUIRE(Rational::parse("13/512").str() == "13/512");
  REQUIRE(Rational(0, 7).str() == "0");
}

TEST_CASE("Rational arithmetic") {
  const Rational a(3, 8), b(1, 6);
  REQUIRE(a + b == Rational(13, 24));
  REQUIRE(a - b == Rational(5, 24));
  REQUIRE(a * b == Rational(1, 16));
  REQUIRE(a / b == Rational(9, 4));
  REQUIRE(Rational(1, 2).pow(10) == Rational(1, 1024));
  REQUIRE(a < Rational(1, 2));
  REQUIRE_THROWS_AS(a / Rational(0), std::domain_error);
  REQUIRE_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational dyadic detection and conversion") {
  REQUIRE(Rational(13, 512).is_dyadic());
  REQUIRE(!Rational(1, 3).is_dyadic());
  REQUIRE(Rational(1, 4).to_double() == 0.25);
  // Huge numerator/denominator pairs convert via 50-digit floats.
  const Rational big(pow2(10001) + 1, pow2(10002));
  REQUIRE(big.to_double() == Catch::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("binomial") {
  REQUIRE(binomial(5, 3) == 10);
  REQUIRE(binomial(10001, 2) == BigInt(10001) * 10000 / 2);
  REQUIRE(binomial(3, 5) == 0);
}

TEST_CASE("geometric reciprocal") {
  // (1 - z/2)^{-1} -> 1, 1/2, 1/4, ...
  RationalSeries denom = RationalSeries::one(16) - RationalSeries::monomial(Rational(1, 2), 1, 16);
  const RationalSeries inv = denom.reciprocal();
  for (int k = 0; k <= 16; ++k) REQUIRE(inv.coeff(k) == Rational(1, 2).pow(k));
}

TEST_CASE("series times its reciprocal is one") {
  RationalSeries s(12);
  s.at(0) = Rational(3, 2);
  s.at(1) = Rational(-1, 3);
  s.at(2) = Rational(5, 7);
  s.at(5) = Rational(2, 11);
  const RationalSeries prod = s * s.reciprocal();
  REQUIRE(prod.coeff(0) == Rational(1));
  for (int k = 1; k <= 12; ++k) REQUIRE(prod.coeff(k) == Rational(0));
}

TEST_CASE("reciprocal requires nonzero constant term") {
  RationalSeries s(4);
  s.at(1) = Rational(1);
  REQUIRE_THROWS_AS(s.reciprocal(), std::domain_error);
}

TEST_CASE("multiplication matches naive convolution on random inputs") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 25; ++trial) {
    RationalSeries a(8), b(8);
    for (int k = 0; k <= 8; ++k) {
      a.at(k) = Rational(num(rng), den(rng));
      b.at(k) = Rational(num(rng), den(rng));
    }
    const RationalSeries prod = a * b;
    for (int k = 0; k <= 8; ++k) {
      Rational conv(0);
      for (int i = 0; i <= k; ++i) conv += a.coeff(i) * b.coeff(k - i);
      REQUIRE(prod.coeff(k) == conv);
    }
  }
}

TEST_CASE("expand_rational_function") {
  // 1/(2-z): coefficients 2^{-(k+1)}.
  const RationalSeries s = expand_rational_function(Rational(1), {Rational(2), Rational(-1)}, 10);
  for (int k = 0; k <= 10; ++k) REQUIRE(s.coeff(k) == Rational(1, 2).pow(k + 1));
  REQUIRE_THROWS_AS(expand_rational_function(Rational(1), {Rational(0), Rational(1)}, 4),
                    std::domain_error);
}

TEST_CASE("series truncation rules") {
  RationalSeries a(10), b(4);
  a.at(10) = Rational(1);
  b.at(4) = Rational(1);
  REQUIRE((a + b).order() == 4);
  REQUIRE((a * b).order() == 4);
  REQUIRE(a.truncated(3).order() == 3);
  REQUIRE(a.coeff(11) == Rational(0));
}
