#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "obav/limits.hpp"

using namespace obav;

TEST_CASE("closed-form transform sits inside the certified series bounds") {
  // The gamblers-ruin closed form evaluated at z = e^{-s/n} must agree with
  // the truncated exact series up to the certified tail.
  const double s = 1.0;
  for (int n : {16, 25}) {
    const int mu_n = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
    const int order = 26 * n;
    const auto bounds = t1_transform_bounds(mu_n, s / n, order);
    const Float50 z = exp(Float50(-s) / n);
    const double closed = static_cast<double>(obav::detail::t1_transforms_at(mu_n, z).total);
    REQUIRE(closed >= bounds.lower - 1e-12);
    REQUIRE(closed <= bounds.upper + 1e-12);
    // The bracket itself is tight.
    REQUIRE(bounds.upper - bounds.lower < 1e-10);
  }
}

TEST_CASE("studies refuse grids where the scaled spread collapses") {
  REQUIRE_THROWS_AS(convergence_study_t1(0.05, 1.0, {100}), std::invalid_argument);
  REQUIRE_THROWS_AS(convergence_study_simplified(1e-4, 1.0, {100}), std::invalid_argument);
}

TEST_CASE("first-trade transform converges to the tanh coefficient") {
  const auto rep = convergence_study_t1(1.0, 1.0, {100, 1000, 10000});
  const double target = std::sqrt(2.0) * std::tanh(std::sqrt(2.0));
  REQUIRE(rep.target == Catch::Approx(target).margin(1e-12));
  REQUIRE(std::abs(rep.rows.back().discrete_value - target) <= 0.05);
  // Errors shrink monotonically on this grid.
  REQUIRE(std::abs(rep.rows[1].error) < std::abs(rep.rows[0].error));
  REQUIRE(std::abs(rep.rows[2].error) < std::abs(rep.rows[1].error));
  // Square-root rate.
  REQUIRE(rep.fitted_order > 0.35);
  REQUIRE(rep.fitted_order < 0.65);
}

TEST_CASE("error ratio across a 4x grid is near 2") {
  const auto rep = convergence_study_t1(1.0, 1.0, {400, 1600, 6400});
  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    const double ratio = std::abs(rep.rows[i].error / rep.rows[i + 1].error);
    REQUIRE(ratio > 1.6);
    REQUIRE(ratio < 2.6);
  }
}

TEST_CASE("Type II split transform carries the csch coefficient at n^{-1/2}") {
  const auto rep = convergence_study_type2_split(1.0, 1.0, {400, 1600, 6400, 25600});
  const double target = hyperbolic_coefficients(1.0, 1.0).csch_term;
  REQUIRE(std::abs(rep.rows.back().discrete_value - target) < 0.02);
  REQUIRE(std::abs(rep.rows.back().error) < std::abs(rep.rows.front().error));
}

TEST_CASE("tau_D transform limit supports the sech^2(mu sqrt(2s)) reading") {
  const double s = 1.0, mu = 1.0;
  const double x = mu * std::sqrt(2.0 * s);
  const double candidate_single = 1.0 / std::pow(std::cosh(x), 2);
  const double candidate_double = 1.0 / std::pow(std::cosh(2 * x), 2);
  const double v = tau_d_transform_at(mu, s, 25600);
  REQUIRE(std::abs(v - candidate_single) < 0.02);
  REQUIRE(std::abs(v - candidate_single) < 0.2 * std::abs(v - candidate_double));
}

TEST_CASE("simplified transform converges to the Brownian avalanche limit") {
  const auto rep = convergence_study_simplified(1.0, 1.0, {100, 1000, 10000});
  REQUIRE(rep.target == Catch::Approx(0.537192).margin(1e-5));
  const auto& last = rep.rows.back();
  REQUIRE(std::abs(last.discrete_value - rep.target) / rep.target < 0.01);
  // Monotone refinement.
  REQUIRE(std::abs(rep.rows[1].error) < std::abs(rep.rows[0].error));
  REQUIRE(std::abs(rep.rows[2].error) < std::abs(rep.rows[1].error));
  // Vague-convergence diagnostic: sqrt(n) P[R > n] -> sqrt(2/pi).
  REQUIRE(std::abs(last.tail_diagnostic - last.tail_target) / last.tail_target < 0.01);
  REQUIRE(last.tail_target == Catch::Approx(std::sqrt(2.0 / M_PI)).margin(1e-12));
}

TEST_CASE("exact survival agrees with the float route used in the study") {
  // survival_R is exact; the study computes 1 - Phi(1) in 50-digit floats.
  for (int eps : {5, 17, 100, 1001}) {
    const double exact = survival_R(eps).to_double();
    const int ep = epsilon_prime(eps);
    Float50 phi(0.5), total(0);
    for (int m = 1; m <= ep; m += 2) {
      total += phi;
      phi *= Float50(m) / (m + 3);
    }
    REQUIRE(static_cast<double>(Float50(1) - total) == Catch::Approx(exact).epsilon(1e-13));
  }
}
