#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "obav/rational.hpp"

namespace obav {

// Truncated power series with exact rational coefficients, the carrier for
// every probability generating function in the library. Arithmetic is exact
// through the truncation order; binary operations truncate to the shorter
// operand.
class RationalSeries {
 public:
  RationalSeries() : coeffs_(1) {}
  explicit RationalSeries(int order) : coeffs_(order + 1) {
    if (order < 0) throw std::invalid_argument("RationalSeries: negative order");
  }
  RationalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back();
  }

  static RationalSeries one(int order) {
    RationalSeries s(order);
    s.coeffs_[0] = Rational(1);
    return s;
  }

  // c * z^power, truncated to `order`.
  static RationalSeries monomial(const Rational& c, int power, int order) {
    RationalSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of z^k; zero beyond the truncation order.
  const Rational& coeff(int k) const {
    static const Rational kZero(0);
    if (k < 0) throw std::out_of_range("RationalSeries: negative power");
    if (k > order()) return kZero;
    return coeffs_[k];
  }

  Rational& at(int k) { return coeffs_.at(k); }

  RationalSeries truncated(int new_order) const {
    RationalSeries s(new_order);
    for (int k = 0; k <= new_order && k <= order(); ++k) s.coeffs_[k] = coeffs_[k];
    return s;
  }

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    const int n = std::min(a.order(), b.order());
    RationalSeries s(n);
    for (int k = 0; k <= n; ++k) s.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return s;
  }
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    const int n = std::min(a.order(), b.order());
    RationalSeries s(n);
    for (int k = 0; k <= n; ++k) s.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return s;
  }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    const int n = std::min(a.order(), b.order());
    RationalSeries s(n);
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return s;
  }

  RationalSeries scaled(const Rational& c) const {
    RationalSeries s(order());
    for (int k = 0; k <= order(); ++k) s.coeffs_[k] = coeffs_[k] * c;
    return s;
  }

  // Multiplicative inverse through the truncation order. Requires a nonzero
  // constant term.
  RationalSeries reciprocal() const {
    if (coeffs_[0].is_zero())
      throw std::domain_error("RationalSeries: reciprocal of series with zero constant term");
    const int n = order();
    RationalSeries s(n);
    s.coeffs_[0] = Rational(1) / coeffs_[0];
    for (int k = 1; k <= n; ++k) {
      Rational acc(0);
      for (int j = 1; j <= k; ++j) {
        if (coeffs_[j].is_zero()) continue;
        acc += coeffs_[j] * s.coeffs_[k - j];
      }
      s.coeffs_[k] = -acc / coeffs_[0];
    }
    return s;
  }

  // Exact polynomial evaluation (treats coefficients beyond order as zero).
  Rational eval(const Rational& z) const {
    Rational acc(0);
    for (int k = order(); k >= 0; --k) acc = acc * z + coeffs_[k];
    return acc;
  }

  Rational partial_sum(int through_order) const {
    Rational acc(0);
    for (int k = 0; k <= std::min(through_order, order()); ++k) acc += coeffs_[k];
    return acc;
  }

  // Sum_k k * c_k (first derivative at z = 1, exact).
  Rational derivative_at_one() const {
    Rational acc(0);
    for (int k = 1; k <= order(); ++k) acc += Rational(k) * coeffs_[k];
    return acc;
  }

  // Sum_k k (k-1) c_k (second derivative at z = 1, exact).
  Rational second_derivative_at_one() const {
    Rational acc(0);
    for (int k = 2; k <= order(); ++k) acc += Rational(static_cast<std::int64_t>(k) * (k - 1)) * coeffs_[k];
    return acc;
  }

  bool all_dyadic() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_dyadic(); });
  }

  // Evaluate at a real point in 50-digit arithmetic (truncated sum; the
  // caller owns any tail bound).
  Float50 eval_float50(const Float50& z) const {
    Float50 acc(0);
    for (int k = order(); k >= 0; --k) acc = acc * z + coeffs_[k].to_float50();
    return acc;
  }

 private:
  std::vector<Rational> coeffs_;
};

// Series expansion of a / (d_0 + d_1 z + ... + d_m z^m), d_0 != 0. Used to
// expand printed closed forms for cross-checks.
inline RationalSeries expand_rational_function(const Rational& numerator,
                                               const std::vector<Rational>& denom,
                                               int order) {
  if (denom.empty() || denom[0].is_zero())
    throw std::domain_error("expand_rational_function: zero constant term in denominator");
  RationalSeries s(order);
  s.at(0) = numerator / denom[0];
  for (int k = 1; k <= order; ++k) {
    Rational acc(0);
    for (int j = 1; j < static_cast<int>(denom.size()) && j <= k; ++j)
      acc += denom[j] * s.coeff(k - j);
    s.at(k) = -acc / denom[0];
  }
  return s;
}

}  // namespace obav
