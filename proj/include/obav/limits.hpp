#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "obav/densities.hpp"
#include "obav/first_passage.hpp"
#include "obav/rational.hpp"
#include "obav/special.hpp"
#include "obav/trade_gfs.hpp"

namespace obav {

// Brownian-limit transforms of the avalanche laws and the convergence
// studies tying the exact discrete transforms to them.

struct LaplaceArg {
  double lambda;
  double epsilon_c;
  double mu_c;

  LaplaceArg(double l, double e, double m) : lambda(l), epsilon_c(e), mu_c(m) {
    if (!(l > 0) || !(e > 0) || !(m > 0))
      throw std::invalid_argument("LaplaceArg: all fields must be > 0");
  }
};

namespace detail {

// sqrt(u pi) erf(sqrt(u)), continued analytically through u = 0 so the
// moment finite differences can straddle the origin.
inline double sqrt_pi_erf_sqrt(double u) {
  if (u > 1e-2) return std::sqrt(u * M_PI) * erf_eval(std::sqrt(u));
  double term = 2.0 * u;  // 2 u^{k+1} (-1)^k / (k! (2k+1))
  double sum = term;
  for (int k = 1; k < 30; ++k) {
    term *= -u / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-19) break;
  }
  return sum;
}

}  // namespace detail

// Laplace transform of the simplified Brownian avalanche length:
// 1 / (sqrt(lambda eps pi) erf(sqrt(lambda eps)) + e^{-lambda eps}).
// Defined for lambda in a neighbourhood of 0 (value 1 at lambda = 0).
inline double simplified_limit_laplace(double lambda, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("simplified_limit_laplace: eps must be > 0");
  const double u = lambda * eps;
  return 1.0 / (detail::sqrt_pi_erf_sqrt(u) + std::exp(-u));
}

inline double simplified_limit_laplace(const LaplaceArg& arg) {
  return simplified_limit_laplace(arg.lambda, arg.epsilon_c);
}

// Mean and variance of the simplified limit law by central finite
// differences of the transform at lambda = 0.
struct LimitMoments {
  double mean;
  double variance;
};

inline LimitMoments simplified_limit_moments(double eps, double step = 1e-3) {
  const double h = step / eps;  // keep u = lambda*eps increments scale-free
  const double fp = simplified_limit_laplace(h, eps);
  const double fm = simplified_limit_laplace(-h, eps);
  const double mean = (fm - fp) / (2 * h);
  const double second = (fp - 2.0 + fm) / (h * h);
  return {mean, second - mean * mean};
}

// Laplace transform of the scaled full avalanche length:
// int_eps^inf h / (int_0^eps (1 - e^{-lambda x}) h + int_eps^inf h).
inline double full_limit_laplace(const LaplaceArg& arg, const SeriesTail& tail = {},
                                 double quad_tol = 1e-10) {
  const QuadResult w = h_window_integral(arg.lambda, arg.epsilon_c, arg.mu_c, tail, quad_tol);
  if (!w.converged) {
    std::ostringstream os;
    os << "full_limit_laplace: quadrature did not converge (error estimate " << w.error << ")";
    throw std::runtime_error(os.str());
  }
  const double t = h_tail(arg.epsilon_c, arg.mu_c, tail);
  return t / (w.value + t);
}

struct HyperbolicCoefficients {
  double tanh_term;     // sqrt(2s) tanh(mu sqrt(2s)) : T1 transform coefficient
  double coth_term;     // sqrt(2s) coth(mu sqrt(2s)) : Type I part coefficient
  double csch_term;     // 2 sqrt(2s) csch(2 mu sqrt(2s)) : Type II part coefficient
  double sech_sq_term;  // sech(2 mu sqrt(2s))^2 : printed tau_D limit (see tests)
};

// The hyperbolic-table quantities at x = mu sqrt(2s). The identity
// coth(x) - 2 csch(2x) = tanh(x) ties the first three together; it is
// asserted here to 1e-12.
inline HyperbolicCoefficients hyperbolic_coefficients(double s, double mu) {
  if (!(s > 0) || !(mu > 0))
    throw std::invalid_argument("hyperbolic_coefficients: s, mu must be > 0");
  const double r = std::sqrt(2.0 * s);
  const double x = mu * r;
  // Overflow-safe forms via e^{-x}; expm1 keeps 1 - e^{-4x} accurate for
  // small arguments.
  const double em2 = std::exp(-2.0 * x);
  const double tanh_x = std::tanh(x);
  const double coth_x = 1.0 / tanh_x;
  const double csch_2x = 2.0 * em2 / (-std::expm1(-4.0 * x));  // 1/sinh(2x)
  const double sech_2x = 2.0 * em2 / (1.0 + em2 * em2);        // 1/cosh(2x)
  HyperbolicCoefficients out{r * tanh_x, r * coth_x, 2.0 * r * csch_2x, sech_2x * sech_2x};
  const double residual = std::abs(coth_x - 2.0 * csch_2x - tanh_x);
  if (residual > 1e-12 * std::max(1.0, coth_x))
    throw std::logic_error("hyperbolic_coefficients: identity residual above 1e-12");
  return out;
}

// ---- exact discrete transforms evaluated at a point -----------------------

namespace detail {

struct SplitTransforms {
  Float50 type1;  // A_mu(z)
  Float50 type2;  // A_mu(z) C_mu(z) / (1 - A_mu(z))
  Float50 total;  // E[z^{T1}]
};

// Evaluates the first-trade transform and its split at z in (0,1) through
// the gambler's-ruin closed form: with lam = (1+sqrt(1-z^2))/z and
// s_m = lam^m - lam^{-m}, A_m = s_m / s_{m+1}. This is the same function the
// rational series truncates; tests pin the two against each other with a
// certified tail bound.
inline SplitTransforms t1_transforms_at(int mu, const Float50& z) {
  using boost::multiprecision::pow;
  const Float50 one(1);
  const Float50 w = sqrt(one - z * z);
  const Float50 lam = (one + w) / z;
  auto s_of = [&](int m) { return pow(lam, m) - one / pow(lam, m); };
  const Float50 a = s_of(mu) / s_of(mu + 1);
  const Float50 a_prev = mu == 1 ? Float50(0) : Float50(s_of(mu - 1) / s_of(mu));
  const Float50 c = a - a_prev;
  SplitTransforms out;
  out.type1 = a;
  out.type2 = a * c / (one - a);
  out.total = out.type1 + out.type2;
  return out;
}

}  // namespace detail

// Bounds on E[z^{T1}] from the truncated exact series: the partial sum plus
// a certified tail 0 <= tail <= q_N z^{N+1}.
struct TransformBounds {
  double lower;
  double upper;
};

inline TransformBounds t1_transform_bounds(int mu, double s_over_n, int order) {
  const RationalSeries p = t1_pgf(mu, order);
  const Float50 z = exp(Float50(-s_over_n));
  Float50 partial(0), zk(1);
  Rational mass(0);
  for (int k = 1; k <= order; ++k) {
    zk *= z;
    if (!p.coeff(k).is_zero()) {
      partial += p.coeff(k).to_float50() * zk;
      mass += p.coeff(k);
    }
  }
  const Float50 tail_bound = (Rational(1) - mass).to_float50() * zk * z;
  return {static_cast<double>(partial), static_cast<double>(partial + tail_bound)};
}

// ---- convergence studies ---------------------------------------------------

struct ConvergenceRow {
  int n;
  int scaled_param;       // floor(mu sqrt(n)) or floor(n eps)
  double discrete_value;  // the scaled exact transform
  double limit_value;
  double error;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  double target = 0;
  double fitted_order = 0;  // least-squares slope of log|error| vs log n
};

namespace detail {

inline double fit_order(const std::vector<ConvergenceRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& r : rows) {
    if (r.error == 0) continue;
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(std::abs(r.error));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return 0;
  return -(m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace detail

// r_n = sqrt(n) (1 - E[e^{-s T1/n}]) with spread floor(mu sqrt(n)), against
// sqrt(2s) tanh(mu sqrt(2s)).
inline ConvergenceReport convergence_study_t1(double mu_c, double s,
                                              const std::vector<int>& n_grid) {
  if (!(mu_c > 0) || !(s > 0))
    throw std::invalid_argument("convergence_study_t1: mu, s must be > 0");
  ConvergenceReport rep;
  rep.target = std::sqrt(2 * s) * std::tanh(mu_c * std::sqrt(2 * s));
  for (int n : n_grid) {
    const int mu_n = static_cast<int>(std::floor(mu_c * std::sqrt(static_cast<double>(n))));
    if (mu_n < 1)
      throw std::invalid_argument("convergence_study_t1: floor(mu sqrt(n)) must be >= 1");
    const Float50 z = exp(Float50(-s) / n);
    const Float50 total = detail::t1_transforms_at(mu_n, z).total;
    const double r_n =
        static_cast<double>(sqrt(Float50(n)) * (Float50(1) - total));
    rep.rows.push_back({n, mu_n, r_n, rep.target, r_n - rep.target});
  }
  rep.fitted_order = detail::fit_order(rep.rows);
  return rep;
}

// Scaled Type II split transform sqrt(n) E[z^{T1}; S(T1) <= 0] against
// 2 sqrt(2s) csch(2 mu sqrt(2s)) — the reading under which the hyperbolic
// table rows add up.
inline ConvergenceReport convergence_study_type2_split(double mu_c, double s,
                                                       const std::vector<int>& n_grid) {
  ConvergenceReport rep;
  rep.target = hyperbolic_coefficients(s, mu_c).csch_term;
  for (int n : n_grid) {
    const int mu_n = static_cast<int>(std::floor(mu_c * std::sqrt(static_cast<double>(n))));
    if (mu_n < 1)
      throw std::invalid_argument("convergence_study_type2_split: floor(mu sqrt(n)) must be >= 1");
    const Float50 z = exp(Float50(-s) / n);
    const Float50 type2 = detail::t1_transforms_at(mu_n, z).type2;
    const double v = static_cast<double>(sqrt(Float50(n)) * type2);
    rep.rows.push_back({n, mu_n, v, rep.target, v - rep.target});
  }
  rep.fitted_order = detail::fit_order(rep.rows);
  return rep;
}

// E[e^{-s tau_D / n}]: a run of Type I excursions then a Type II one, i.e.
// type2 / (1 - type1) at z = e^{-s/n}. The limit is sech(mu sqrt(2s))^2;
// the verification suite also evaluates the printed 2-mu argument and
// reports which one the data supports.
inline double tau_d_transform_at(double mu_c, double s, int n) {
  const int mu_n = static_cast<int>(std::floor(mu_c * std::sqrt(static_cast<double>(n))));
  if (mu_n < 1) throw std::invalid_argument("tau_d_transform_at: floor(mu sqrt(n)) must be >= 1");
  const Float50 z = exp(Float50(-s) / n);
  const auto tr = detail::t1_transforms_at(mu_n, z);
  return static_cast<double>(tr.type2 / (Float50(1) - tr.type1));
}

// E[e^{-lambda L_{n eps} / n}] via the exact window polynomial
// Phi_{floor(n eps)} evaluated in 50-digit arithmetic (Phi is a polynomial,
// so the evaluation carries no truncation tail), against the simplified
// Brownian limit. Also reports the vague-convergence diagnostic
// sqrt(n) P[R > n eps] -> sqrt(2/(pi eps)).
struct SimplifiedConvergenceRow {
  int n;
  int eps_disc;
  double discrete_value;
  double limit_value;
  double error;
  double tail_diagnostic;  // sqrt(n) P[R > n eps]
  double tail_target;      // sqrt(2/(pi eps))
};

struct SimplifiedConvergenceReport {
  std::vector<SimplifiedConvergenceRow> rows;
  double target = 0;
  double fitted_order = 0;
};

inline SimplifiedConvergenceReport convergence_study_simplified(double eps_c, double lambda,
                                                                const std::vector<int>& n_grid) {
  if (!(eps_c > 0) || !(lambda > 0))
    throw std::invalid_argument("convergence_study_simplified: eps, lambda must be > 0");
  SimplifiedConvergenceReport rep;
  rep.target = simplified_limit_laplace(lambda, eps_c);
  for (int n : n_grid) {
    const int eps_disc = static_cast<int>(std::floor(eps_c * n));
    if (eps_disc < 1)
      throw std::invalid_argument("convergence_study_simplified: floor(n eps) must be >= 1");
    const int ep = epsilon_prime(eps_disc);
    const Float50 z = exp(Float50(-lambda) / n);
    const Float50 z2 = z * z;
    // phi_{1,m} by the ratio recurrence phi_{m+2} = phi_m * m/(m+3).
    Float50 phi(0.5), zm = z, phi_at_z(0), phi_at_1(0);
    for (int m = 1; m <= ep; m += 2) {
      phi_at_z += phi * zm;
      phi_at_1 += phi;
      phi *= Float50(m) / (m + 3);
      zm *= z2;
    }
    const Float50 survival = Float50(1) - phi_at_1;
    const double value = static_cast<double>(survival / (Float50(1) - phi_at_z));
    const double diag =
        static_cast<double>(sqrt(Float50(n)) * survival);
    rep.rows.push_back({n, eps_disc, value, rep.target, value - rep.target, diag,
                        std::sqrt(2.0 / (M_PI * eps_c))});
  }
  std::vector<ConvergenceRow> tmp;
  for (const auto& r : rep.rows) tmp.push_back({r.n, r.eps_disc, r.discrete_value, r.limit_value, r.error});
  rep.fitted_order = detail::fit_order(tmp);
  return rep;
}

}  // namespace obav
