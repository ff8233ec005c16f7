#include <catch2/catch_amalgamated.hpp>

#include "obav/first_passage.hpp"
#include "obav/oracle.hpp"

using namespace obav;

TEST_CASE("first_passage_phi small values") {
  REQUIRE(first_passage_phi(1, 1) == Rational(1, 2));
  REQUIRE(first_passage_phi(1, 3) == Rational(1, 8));
  REQUIRE(first_passage_phi(1, 2) == Rational(0));
  REQUIRE(first_passage_phi(2, 2) == Rational(1, 4));
  REQUIRE(first_passage_phi(3, 1) == Rational(0));
  REQUIRE_THROWS_AS(first_passage_phi(0, 1), std::invalid_argument);
}

TEST_CASE("phi and path counts against exhaustive enumeration") {
  // Count length-n paths whose first passage through +1 happens at n.
  for (int n = 1; n <= 15; ++n) {
    std::uint64_t count = 0;
    for_each_path(n, [&](const WalkPath& p) {
      if (p.steps[n] != 1) return;
      for (int j = 1; j < n; ++j)
        if (p.steps[j] >= 1) return;
      ++count;
    });
    REQUIRE(count_first_passage_paths(n) == BigInt(count));
    REQUIRE(first_passage_phi(1, n) == Rational(BigInt(count), pow2(n)));
  }
}

TEST_CASE("count_first_passage_paths examples") {
  REQUIRE(count_first_passage_paths(1) == 1);
  REQUIRE(count_first_passage_paths(5) == 2);
  REQUIRE(count_first_passage_paths(4) == 0);
}

TEST_CASE("epsilon_prime") {
  REQUIRE(epsilon_prime(1) == 1);
  REQUIRE(epsilon_prime(2) == 1);
  REQUIRE(epsilon_prime(3) == 3);
  REQUIRE(epsilon_prime(4) == 3);
  REQUIRE(epsilon_prime(9) == 9);
}

TEST_CASE("survival_R closed form") {
  REQUIRE(survival_R(1) == Rational(1, 2));
  REQUIRE(survival_R(2) == Rational(1, 2));
  REQUIRE(survival_R(3) == Rational(3, 8));
}

TEST_CASE("survival_R equals one minus the phi partial sums") {
  for (int eps = 1; eps <= 12; ++eps) {
    Rational sum(0);
    for (int n = 1; n <= eps; ++n) sum += first_passage_phi(1, n);
    REQUIRE(survival_R(eps) == Rational(1) - sum);
    REQUIRE(phi_polynomial(eps).eval(Rational(1)) + survival_R(eps) == Rational(1));
  }
}

TEST_CASE("pgf_R") {
  const RationalSeries r = pgf_R(51);
  REQUIRE(r.coeff(1) == Rational(1, 2));
  REQUIRE(r.coeff(2) == Rational(0));
  REQUIRE(r.coeff(3) == Rational(1, 8));
  Rational prev(0);
  for (int n = 1; n <= 51; n += 2) {
    const Rational s = r.partial_sum(n);
    REQUIRE(s < Rational(1));
    REQUIRE(s > prev);
    prev = s;
  }
}

TEST_CASE("phi_polynomial examples") {
  const RationalSeries p1 = phi_polynomial(1);
  REQUIRE(p1.order() == 1);
  REQUIRE(p1.coeff(1) == Rational(1, 2));
  const RationalSeries p3 = phi_polynomial(3);
  REQUIRE(p3.order() == 3);
  REQUIRE(p3.coeff(1) == Rational(1, 2));
  REQUIRE(p3.coeff(2) == Rational(0));
  REQUIRE(p3.coeff(3) == Rational(1, 8));
}

TEST_CASE("simplified avalanche pgf") {
  // eps = 1: 1/(2 - z).
  const RationalSeries s1 = simplified_avalanche_pgf(1, 200);
  const RationalSeries closed = expand_rational_function(Rational(1), {Rational(2), Rational(-1)}, 200);
  for (int k = 0; k <= 200; ++k) REQUIRE(s1.coeff(k) == closed.coeff(k));

  // Parity of R: eps = 2 gives the same law as eps = 1.
  const RationalSeries s2 = simplified_avalanche_pgf(2, 64);
  for (int k = 0; k <= 64; ++k) REQUIRE(s2.coeff(k) == s1.coeff(k));

  REQUIRE(s1.coeff(0) == survival_R(1));
  for (int eps : {1, 3, 5, 8}) {
    const RationalSeries s = simplified_avalanche_pgf(eps, 200);
    REQUIRE(s.partial_sum(200) <= Rational(1));
    REQUIRE(s.all_dyadic());
  }
}

TEST_CASE("simplified moments: closed form, derivatives, geometric oracle") {
  // eps = 1: lengths follow P[L = k] = 2^{-(k+1)}, so mean 1 and variance 2.
  const auto m1 = simplified_moments(1);
  REQUIRE(m1.mean == Rational(1));
  REQUIRE(m1.variance == Rational(2));

  const auto m3 = simplified_moments(3);
  REQUIRE(m3.mean == Rational(7, 3));

  for (int eps = 1; eps <= 9; ++eps) {
    const auto closed = simplified_moments(eps);
    const auto pgf = simplified_moments_from_pgf(eps);
    REQUIRE(closed.mean == pgf.mean);
    REQUIRE(closed.variance == pgf.variance);
  }
}

TEST_CASE("printed variance form would divide by zero") {
  // The uncorrected middle term reads C(2+e', 3+e'), which vanishes for every
  // e' >= 1; the corrected C(2+e', (3+e')/2) is what the derivative route
  // reproduces.
  for (int eps = 1; eps <= 9; ++eps) {
    const int ep = epsilon_prime(eps);
    REQUIRE(binomial(2 + ep, 3 + ep) == 0);
    REQUIRE(binomial(2 + ep, (3 + ep) / 2) > 0);
  }
}
