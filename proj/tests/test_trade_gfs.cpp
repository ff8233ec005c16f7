#include <catch2/catch_amalgamated.hpp>

#include "obav/first_passage.hpp"
#include "obav/tables.hpp"
#include "obav/trade_gfs.hpp"

using namespace obav;

TEST_CASE("t1_pgf reproduces the first-trade pmf table") {
  for (int mu = 1; mu <= 7; ++mu) {
    const RationalSeries t = t1_pgf(mu, 10);
    for (int n = 1; n <= 10; ++n) {
      const Rational expected = Rational::parse(std::string(tables::kFirstTradePmf[mu - 1][n - 1]));
      INFO("mu=" << mu << " n=" << n);
      REQUIRE(t.coeff(n) == expected);
    }
  }
}

TEST_CASE("t1_survival reproduces the survival table") {
  for (int mu = 1; mu <= 7; ++mu) {
    for (int eps = 1; eps <= 9; ++eps) {
      const Rational expected =
          Rational::parse(std::string(tables::kFirstTradeSurvival[mu - 1][eps - 1]));
      INFO("mu=" << mu << " eps=" << eps);
      REQUIRE(t1_survival(mu, eps) == expected);
    }
  }
}

TEST_CASE("t1 coefficients stabilize in mu") {
  // p_n does not change once mu >= ceil(n/2), and for mu >= n it equals the
  // plain first-passage probability phi_{1,n}.
  for (int mu = 2; mu <= 8; ++mu) {
    const RationalSeries lo = t1_pgf(mu, 20);
    const RationalSeries hi = t1_pgf(mu + 1, 20);
    for (int n = 1; n <= std::min(20, 2 * mu - 1); ++n) REQUIRE(lo.coeff(n) == hi.coeff(n));
  }
  const RationalSeries big = t1_pgf(12, 12);
  for (int n = 1; n <= 12; ++n) REQUIRE(big.coeff(n) == first_passage_phi(1, n));
}

TEST_CASE("t1_split adds up and carries the right masses") {
  for (int mu = 1; mu <= 4; ++mu) {
    const auto split = t1_split(mu, 400);
    const RationalSeries total = t1_pgf(mu, 400);
    for (int k = 0; k <= 40; ++k)
      REQUIRE(split.type1.coeff(k) + split.type2.coeff(k) == total.coeff(k));

    const Rational type1_mass = split.type1.partial_sum(400);
    const Rational type2_mass = split.type2.partial_sum(400);
    REQUIRE((Rational(mu, mu + 1) - type1_mass).to_double() < 1e-3);
    REQUIRE(type1_mass <= Rational(mu, mu + 1));
    REQUIRE((Rational(1, mu + 1) - type2_mass).to_double() < 1e-3);
  }
}

TEST_CASE("type II split for mu = 1 is z^2/(4 - 2z)") {
  const auto split = t1_split(1, 30);
  const RationalSeries closed =
      expand_rational_function(Rational(1), {Rational(4), Rational(-2)}, 28);
  REQUIRE(split.type2.coeff(0) == Rational(0));
  REQUIRE(split.type2.coeff(1) == Rational(0));
  for (int k = 2; k <= 30; ++k) REQUIRE(split.type2.coeff(k) == closed.coeff(k - 2));
}

TEST_CASE("D is geometric on the excursion types") {
  const auto s1 = t1_split(1, 50);
  for (int k = 1; k <= 50; ++k) REQUIRE(s1.d_pgf.coeff(k) == Rational(1, 2).pow(k));
  REQUIRE(s1.d_pgf.coeff(1) == Rational(1, 2));
  // Truncated mass approaches 1: D is proper.
  REQUIRE((Rational(1) - s1.d_pgf.partial_sum(50)).to_double() < 1e-12);

  const auto s2 = t1_split(2, 8);
  REQUIRE(s2.d_pgf.coeff(1) == Rational(1, 3));
  REQUIRE(s2.d_pgf.coeff(2) == Rational(2, 9));
}

TEST_CASE("tau_D pgf for mu = 1 is z^2/(2-z)^2") {
  const RationalSeries t = tau_d_pgf(1, 30);
  const RationalSeries closed = expand_rational_function(
      Rational(1), {Rational(4), Rational(-4), Rational(1)}, 28);
  REQUIRE(t.coeff(2) == Rational(1, 4));
  REQUIRE(t.coeff(3) == Rational(1, 4));
  for (int k = 2; k <= 30; ++k) REQUIRE(t.coeff(k) == closed.coeff(k - 2));
}

TEST_CASE("full avalanche pgf matches every printed rational form") {
  for (int mu = 1; mu <= 4; ++mu) {
    for (int eps = 1; eps <= 5; ++eps) {
      const RationalSeries pgf = full_avalanche_pgf(mu, eps, 32);
      const RationalSeries form =
          tables::expand_form(tables::full_avalanche_forms()[mu - 1][eps - 1], 32);
      INFO("mu=" << mu << " eps=" << eps);
      for (int k = 0; k <= 32; ++k) REQUIRE(pgf.coeff(k) == form.coeff(k));
    }
  }
}

TEST_CASE("full avalanche pgf matches the printed pmf cells") {
  for (int mu = 1; mu <= 4; ++mu) {
    const auto& table = tables::avalanche_pmf_table(mu);
    for (int eps = 1; eps <= 5; ++eps) {
      const RationalSeries pgf = full_avalanche_pgf(mu, eps, 8);
      REQUIRE(pgf.coeff(0) == t1_survival(mu, eps));
      for (int k = 1; k <= 8; ++k) {
        INFO("mu=" << mu << " eps=" << eps << " k=" << k);
        REQUIRE(pgf.coeff(k) == Rational::parse(std::string(table[eps - 1][k - 1])));
      }
    }
  }
}

TEST_CASE("avalanche mass is a sub-probability approaching one") {
  for (int mu : {1, 2, 3}) {
    for (int eps : {1, 3, 5}) {
      const RationalSeries pgf = full_avalanche_pgf(mu, eps, 128);
      const Rational mass = pgf.partial_sum(128);
      REQUIRE(mass <= Rational(1));
      REQUIRE((Rational(1) - mass).to_double() < 0.2);
    }
  }
}

TEST_CASE("time-variable pgfs are dyadic") {
  REQUIRE(t1_pgf(3, 40).all_dyadic());
  REQUIRE(full_avalanche_pgf(2, 4, 40).all_dyadic());
  REQUIRE(first_trade_pgf_empty(3, 40).all_dyadic());
  REQUIRE(tau_d_pgf(2, 40).all_dyadic());
  REQUIRE(class_gf(CombClass::C, 4, 40).all_dyadic());
}

TEST_CASE("empty-book first trade pgf") {
  // mu = 1: geometric, P[T1-tilde = n] = 2^{-n}.
  const RationalSeries e1 = first_trade_pgf_empty(1, 40);
  for (int n = 1; n <= 40; ++n) REQUIRE(e1.coeff(n) == Rational(1, 2).pow(n));

  // mu = 2: the four length-2 paths contain exactly one trade (straight up).
  const RationalSeries e2 = first_trade_pgf_empty(2, 60);
  REQUIRE(e2.coeff(1) == Rational(0));
  REQUIRE(e2.coeff(2) == Rational(1, 4));
  REQUIRE(e2.coeff(3) == Rational(1, 8));
  REQUIRE(e2.coeff(4) == Rational(1, 8));

  const Rational mass = e2.partial_sum(60);
  REQUIRE(mass <= Rational(1));
  REQUIRE((Rational(1) - mass).to_double() < 0.15);
}

TEST_CASE("per-level empty-book reading: equal at mu=1, deviates from mu=2 on") {
  // The descent/ascent-per-level composition agrees with the minimum-ladder
  // law for mu = 1 but misses the Type II paths that rise above zero before
  // the drop once mu >= 2 (first at n = 6 for mu = 2).
  const RationalSeries a = first_trade_pgf_empty(1, 30);
  const RationalSeries b = first_trade_pgf_empty_per_level(1, 30);
  for (int n = 0; n <= 30; ++n) REQUIRE(a.coeff(n) == b.coeff(n));

  const RationalSeries c = first_trade_pgf_empty(2, 10);
  const RationalSeries d = first_trade_pgf_empty_per_level(2, 10);
  for (int n = 0; n <= 5; ++n) REQUIRE(c.coeff(n) == d.coeff(n));
  // Missing Type II mass, e.g. the path 0,1,0,-1,-2,-1,0.
  REQUIRE(c.coeff(6) > d.coeff(6));
  REQUIRE(c.coeff(6) == Rational(5, 64));
}
