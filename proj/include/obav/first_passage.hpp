#pragma once

#include <stdexcept>
#include <utility>

#include "obav/rational.hpp"
#include "obav/series.hpp"

namespace obav {

// First-passage law of the simple symmetric walk and everything built on it:
// the ladder-gap law R, its survival probabilities, the window polynomial
// Phi_eps and the simplified avalanche-length PGF with its exact moments.

// P[first passage through level r happens at step n], by reflection:
// (r/n) C(n, (n+r)/2) 2^{-n}; zero off-parity or out of range.
inline Rational first_passage_phi(int r, int n) {
  if (r < 1 || n < 1) throw std::invalid_argument("first_passage_phi: r, n must be >= 1");
  if (n < r || (n - r) % 2 != 0) return Rational(0);
  const unsigned un = static_cast<unsigned>(n);
  return Rational(BigInt(r) * binomial(un, static_cast<unsigned>((n + r) / 2)),
                  BigInt(n) * pow2(un));
}

// Number of length-k paths realizing a first passage through +1:
// (1/k) C(k, (k+1)/2) for odd k, else 0.
inline BigInt count_first_passage_paths(int k) {
  if (k < 1) throw std::invalid_argument("count_first_passage_paths: k must be >= 1");
  if (k % 2 == 0) return 0;
  BigInt b = binomial(static_cast<unsigned>(k), static_cast<unsigned>((k + 1) / 2));
  return b / k;  // divides exactly
}

// eps' = 2 floor((eps-1)/2) + 1: eps rounded down to an odd number.
inline int epsilon_prime(int epsilon) {
  if (epsilon < 1) throw std::invalid_argument("epsilon_prime: epsilon must be >= 1");
  return 2 * ((epsilon - 1) / 2) + 1;
}

// P[R > eps] = ((3+e')/(2+e')) C(2+e', (3+e')/2) / 2^{2+e'}.
inline Rational survival_R(int epsilon) {
  const int ep = epsilon_prime(epsilon);
  const unsigned m = static_cast<unsigned>(2 + ep);
  return Rational(BigInt(3 + ep) * binomial(m, static_cast<unsigned>((3 + ep) / 2)),
                  BigInt(2 + ep) * pow2(m));
}

// Phi_eps(z) = sum_{k=0}^{(e'-1)/2} phi_{1,2k+1} z^{2k+1}, a polynomial of
// degree e'. Satisfies Phi_eps(1) + P[R > eps] = 1.
inline RationalSeries phi_polynomial(int epsilon) {
  const int ep = epsilon_prime(epsilon);
  RationalSeries s(ep);
  for (int m = 1; m <= ep; m += 2) s.at(m) = first_passage_phi(1, m);
  return s;
}

// Truncation of E[z^R]: coefficient of z^{2n+1} is phi_{1,2n+1}.
inline RationalSeries pgf_R(int order) {
  if (order < 1) throw std::invalid_argument("pgf_R: order must be >= 1");
  RationalSeries s(order);
  for (int m = 1; m <= order; m += 2) s.at(m) = first_passage_phi(1, m);
  return s;
}

// E[z^{L_eps}] = P[R > eps] / (1 - Phi_eps(z)). The constant term is
// P[L_eps = 0] = P[R > eps].
inline RationalSeries simplified_avalanche_pgf(int epsilon, int order) {
  if (epsilon < 1) throw std::invalid_argument("simplified_avalanche_pgf: epsilon must be >= 1");
  const RationalSeries phi = phi_polynomial(epsilon).truncated(order);
  RationalSeries denom = RationalSeries::one(order) - phi;
  return denom.reciprocal().scaled(survival_R(epsilon));
}

struct SimplifiedMoments {
  Rational mean;
  Rational variance;
};

// Closed forms for E[L_eps] and Var[L_eps]. The variance uses the binomial
// C(2+e', (3+e')/2) in the middle term; see simplified_moments_from_pgf for
// the independent derivative route both are checked against.
inline SimplifiedMoments simplified_moments(int epsilon) {
  const int ep = epsilon_prime(epsilon);
  const unsigned m = static_cast<unsigned>(2 + ep);
  const Rational binom_inv(pow2(m), binomial(m, static_cast<unsigned>((3 + ep) / 2)));
  const Rational mean =
      Rational(2 + ep) - Rational(2 + ep, 3 + ep) * binom_inv;
  const Rational variance =
      Rational(4, 3) * Rational(2 + 3 * ep + ep * ep) -
      Rational(6 + 7 * ep + 2 * ep * ep, 3 + ep) * binom_inv +
      Rational(BigInt(2 + ep) * (2 + ep), BigInt(3 + ep) * (3 + ep)) * binom_inv * binom_inv;
  return {mean, variance};
}

// Moments from the PGF derivatives at z = 1, computed exactly from the
// rational form P[R>eps] / (1 - Phi(z)):
//   mean       = Phi'(1) / S
//   E[L(L-1)]  = Phi''(1)/S + 2 Phi'(1)^2 / S^2,   S = 1 - Phi(1).
inline SimplifiedMoments simplified_moments_from_pgf(int epsilon) {
  const RationalSeries phi = phi_polynomial(epsilon);
  const Rational S = survival_R(epsilon);
  const Rational d1 = phi.derivative_at_one();
  const Rational d2 = phi.second_derivative_at_one();
  const Rational mean = d1 / S;
  const Rational second_factorial = d2 / S + Rational(2) * d1 * d1 / (S * S);
  return {mean, second_factorial + mean - mean * mean};
}

}  // namespace obav
