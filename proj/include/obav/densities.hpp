#pragma once

#include <cmath>
#include <stdexcept>

#include "obav/quadrature.hpp"

namespace obav {

// Excursion-length densities under the Ito measure: g for the free excursion,
// h for the excursion under the depth-mu barrier, plus the window and tail
// integrals the limit transforms are assembled from.

inline constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;

inline double excursion_density_g(double x) {
  if (!(x > 0)) throw std::invalid_argument("excursion_density_g: x must be > 0");
  return std::pow(x, -1.5) / kSqrt2Pi;
}

// Integral of g over (eps, infinity): sqrt(2/(pi eps)).
inline double g_tail(double eps) {
  if (!(eps > 0)) throw std::invalid_argument("g_tail: eps must be > 0");
  return std::sqrt(2.0 / (M_PI * eps));
}

struct SeriesTail {
  int k_max = 0;          // 0: stop when the next term falls below abs_tol
  double abs_tol = 1e-16;
};

namespace detail {

// The reflection series converges fast for x below ~mu^2 and its dual (the
// Poisson resummation) fast above; at the crossover 4 mu^2 / pi both
// exponent families sit at pi k^2 / 2.
inline double h_crossover(double mu) { return 4.0 * mu * mu / M_PI; }

// Reflection form with alternating image weights 2(-1)^k: these are the
// weights under which the series integrates to
// sqrt(2 lambda) tanh(mu sqrt(2 lambda)). (A uniform weight +2 produces the
// coth transform shifted by -1/mu instead; see the verification report.)
inline double h_direct(double x, double mu, const SeriesTail& tail) {
  const double g = excursion_density_g(x);
  const double b = 2.0 * std::sqrt(2.0 / M_PI) * mu * mu * std::pow(x, -2.5);
  double sum = g;
  for (int k = 1; k < 100000; ++k) {
    const double e = std::exp(-2.0 * k * k * mu * mu / x);
    const double w = (k % 2 == 0) ? 2.0 : -2.0;
    sum += w * (g - b * k * k) * e;
    if (tail.k_max > 0 && k >= tail.k_max) break;
    if (tail.k_max == 0 && e < tail.abs_tol) break;
  }
  return sum;
}

// Poisson resummation of the reflection form:
// h(x) = (pi^2/(4 mu^3)) sum over odd j of j^2 exp(-pi^2 j^2 x/(8 mu^2)).
// Positive termwise and stable for large x where the reflection series
// cancels catastrophically.
inline double h_dual(double x, double mu, const SeriesTail& tail) {
  const double alpha = M_PI * M_PI * x / (8.0 * mu * mu);
  const double scale = M_PI * M_PI / (4.0 * mu * mu * mu);
  double sum = 0;
  for (int j = 1; j < 100000; j += 2) {
    const double term = j * static_cast<double>(j) * std::exp(-alpha * j * j);
    sum += term;
    if (tail.k_max > 0 && j >= tail.k_max) break;
    if (tail.k_max == 0 && scale * term < tail.abs_tol && alpha * j >= 1) break;
  }
  return scale * sum;
}

}  // namespace detail

// Barrier excursion-length density. Uses the representation that converges
// on the given side of the crossover; both agree to full precision in the
// overlap (checked in tests).
inline double h_density(double x, double mu, const SeriesTail& tail = {}) {
  if (!(x > 0)) throw std::invalid_argument("h_density: x must be > 0");
  if (!(mu > 0)) throw std::invalid_argument("h_density: mu must be > 0");
  return x <= detail::h_crossover(mu) ? detail::h_direct(x, mu, tail)
                                      : detail::h_dual(x, mu, tail);
}

// Integral of h over (eps, infinity): termwise integration of the dual form,
// (2/mu) sum over odd j of exp(-pi^2 j^2 eps/(8 mu^2)). Positive, decreasing
// in eps, and tends to sqrt(2/(pi eps)) as mu grows.
inline double h_tail(double eps, double mu, const SeriesTail& tail = {}) {
  if (!(eps > 0) || !(mu > 0)) throw std::invalid_argument("h_tail: eps, mu must be > 0");
  const double alpha = M_PI * M_PI * eps / (8.0 * mu * mu);
  double sum = 0;
  for (int j = 1; j < 200000; j += 2) {
    const double term = std::exp(-alpha * j * j);
    sum += term;
    if (tail.k_max > 0 && j >= tail.k_max) break;
    if (tail.k_max == 0 && term < tail.abs_tol) break;
  }
  return 2.0 / mu * sum;
}

// Closed form of int_0^inf (1 - e^{-lambda x}) h(x) dx.
inline double h_hat(double lambda, double mu) {
  if (!(lambda > 0) || !(mu > 0)) throw std::invalid_argument("h_hat: lambda, mu must be > 0");
  return std::sqrt(2.0 * lambda) * std::tanh(mu * std::sqrt(2.0 * lambda));
}

// int_0^eps (1 - e^{-lambda x}) h(x) dx by adaptive quadrature. The x = u^2
// substitution removes the x^{-1/2} endpoint behaviour exactly.
inline QuadResult h_window_integral(double lambda, double eps, double mu,
                                    const SeriesTail& tail = {}, double abs_tol = 1e-9) {
  const double split = std::min(eps, detail::h_crossover(mu));
  auto inner = [&](double u) {
    const double x = u * u;
    return 2.0 * u * (-std::expm1(-lambda * x)) * detail::h_direct(x, mu, tail);
  };
  QuadResult out = integrate(inner, 0.0, std::sqrt(split), abs_tol * 0.5);
  if (eps > split) {
    auto outer = [&](double x) {
      return (-std::expm1(-lambda * x)) * detail::h_dual(x, mu, tail);
    };
    const QuadResult q = integrate(outer, split, eps, abs_tol * 0.5);
    out.value += q.value;
    out.error += q.error;
    out.converged = out.converged && q.converged;
  }
  return out;
}

// Same window integral assembled through the transform identity:
// int_0^eps = h_hat(lambda) - int_eps^inf h + int_eps^inf e^{-lambda x} h dx.
inline QuadResult h_window_via_transform(double lambda, double eps, double mu,
                                         const SeriesTail& tail = {}, double abs_tol = 1e-9) {
  const double cut = eps + 45.0 / lambda;
  auto damped = [&](double x) { return std::exp(-lambda * x) * h_density(x, mu, tail); };
  QuadResult q = integrate(damped, eps, cut, abs_tol * 0.5);
  q.error += std::exp(-lambda * cut) * h_tail(cut, mu, tail);  // remainder bound
  q.value += h_hat(lambda, mu) - h_tail(eps, mu, tail);
  return q;
}

// int_0^eps (1 - e^{-lambda x}) g(x) dx, same substitution.
inline QuadResult g_window_integral(double lambda, double eps, double abs_tol = 1e-9) {
  auto inner = [&](double u) {
    const double x = u * u;
    return 2.0 * u * (-std::expm1(-lambda * x)) * excursion_density_g(x);
  };
  return integrate(inner, 0.0, std::sqrt(eps), abs_tol);
}

// int_0^inf (1 - e^{-lambda x}) g(x) dx = sqrt(2 lambda), assembled as
// window + tail - damped tail with a closed-form cut remainder.
inline QuadResult g_hat_by_quadrature(double lambda, double abs_tol = 1e-9) {
  const double cut = 45.0 / lambda;
  QuadResult out = g_window_integral(lambda, cut, abs_tol * 0.5);
  out.value += g_tail(cut);
  out.error += std::exp(-lambda * cut) * g_tail(cut);
  return out;
}

}  // namespace obav
