#pragma once

#include <array>
#include <cmath>

namespace obav {

struct QuadResult {
  double value = 0;
  double error = 0;  // accumulated error estimate
  bool converged = true;
};

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1].
struct GK15 {
  static constexpr std::array<double, 8> nodes = {
      0.991455371120812639206854697526329,
      0.949107912342758524526189684047851,
      0.864864423359769072789712788640926,
      0.741531185599394439863864773280788,
      0.586087235467691130294144838258730,
      0.405845151377397166906606412076961,
      0.207784955007898467600689403773245,
      0.000000000000000000000000000000000};
  static constexpr std::array<double, 8> wk = {
      0.022935322010529224963732008058970,
      0.063092092629978553290700663189204,
      0.104790010322250183839876322541518,
      0.140653259715525918745189590510238,
      0.169004726639267902826583426598550,
      0.190350578064785409913256402421014,
      0.204432940075298892414161999234649,
      0.209482141084727828012999174891714};
  static constexpr std::array<double, 4> wg = {
      0.129484966168869693270611432679082,
      0.279705391489276667901467771423780,
      0.381830050505118944950369775488975,
      0.417959183673469387755102040816327};
};

// The G7 nodes are the odd-index Kronrod nodes plus the center.
template <typename F>
inline void gk15(const F& f, double a, double b, double& value, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<double, 8> fv{};
  for (int i = 0; i < 7; ++i) {
    const double x = GK15::nodes[i] * h;
    fv[i] = f(c - x) + f(c + x);
  }
  fv[7] = f(c);
  double resk = 0, resg = 0;
  for (int i = 0; i < 8; ++i) resk += GK15::wk[i] * fv[i];
  for (int i = 1; i < 8; i += 2) resg += GK15::wg[i / 2] * fv[i];
  value = resk * h;
  err = std::abs((resk - resg) * h);
}

template <typename F>
inline void adapt(const F& f, double a, double b, double tol, int depth, QuadResult& out) {
  double v, e;
  gk15(f, a, b, v, e);
  if (e <= tol || depth >= 40) {
    out.value += v;
    out.error += e;
    if (e > tol && depth >= 40) out.converged = false;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth + 1, out);
  adapt(f, m, b, 0.5 * tol, depth + 1, out);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute tolerance.
template <typename F>
inline QuadResult integrate(const F& f, double a, double b, double abs_tol = 1e-9) {
  QuadResult out;
  if (a == b) return out;
  detail::adapt(f, a, b, abs_tol, 0, out);
  return out;
}

}  // namespace obav
