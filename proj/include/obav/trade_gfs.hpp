#pragma once

#include <stdexcept>
#include <vector>

#include "obav/lattice.hpp"
#include "obav/rational.hpp"
#include "obav/series.hpp"

namespace obav {

// Generating functions of the trade-time laws: time to the first trade (full
// and empty book), its Type I / Type II split, the index and time of the
// first Type II trade, and the full avalanche length.

// E[z^{T1}] = A_mu + B_mu C_mu / (1 - B_mu). Coefficient of z^n is
// p_n = P[T1 = n].
inline RationalSeries t1_pgf(int mu, int order) {
  const RationalSeries a = class_gf(CombClass::A, mu, order);
  const RationalSeries b = class_gf(CombClass::B, mu, order);
  const RationalSeries c = class_gf(CombClass::C, mu, order);
  return a + b * c * (RationalSeries::one(order) - b).reciprocal();
}

struct T1Split {
  RationalSeries type1;   // E[z^{T1}; S(T1) > 0] = A_mu
  RationalSeries type2;   // E[z^{T1}; S(T1) <= 0] = B_mu C_mu / (1 - B_mu)
  RationalSeries d_pgf;   // PGF of the index D of the first Type II trade
};

// The split of E[z^{T1}] by trade type, plus the law of D. Trade types form
// a Bernoulli sequence over the iid trading excursions with
// P[Type I] = mu/(mu+1), so D is geometric:
// P[D = k] = (mu/(mu+1))^{k-1} / (mu+1).
inline T1Split t1_split(int mu, int order) {
  T1Split out{class_gf(CombClass::A, mu, order), RationalSeries(order), RationalSeries(order)};
  const RationalSeries b = class_gf(CombClass::B, mu, order);
  const RationalSeries c = class_gf(CombClass::C, mu, order);
  out.type2 = b * c * (RationalSeries::one(order) - b).reciprocal();
  const Rational type1_mass(mu, mu + 1);
  const Rational type2_mass(1, mu + 1);
  Rational run = type2_mass;
  for (int k = 1; k <= order; ++k) {
    out.d_pgf.at(k) = run;
    run *= type1_mass;
  }
  return out;
}

// PGF of tau_D, the time of the first Type II trade: a run of Type I
// excursions followed by one Type II excursion.
inline RationalSeries tau_d_pgf(int mu, int order) {
  const T1Split split = t1_split(mu, order);
  return split.type2 * (RationalSeries::one(order) - split.type1).reciprocal();
}

// q_eps = P[T1 > eps] = 1 - sum_{k <= eps} p_k, exact.
inline Rational t1_survival(int mu, int epsilon) {
  if (epsilon < 0) throw std::invalid_argument("t1_survival: negative epsilon");
  return Rational(1) - t1_pgf(mu, epsilon).partial_sum(epsilon);
}

// E[z^{L*_{mu,eps}}] = q_eps / (1 - sum_{k=1}^{eps} p_k z^k). The constant
// term is P[L* = 0] = q_eps.
inline RationalSeries full_avalanche_pgf(int mu, int epsilon, int order) {
  if (epsilon < 1) throw std::invalid_argument("full_avalanche_pgf: epsilon must be >= 1");
  const RationalSeries p = t1_pgf(mu, epsilon);
  const Rational q = Rational(1) - p.partial_sum(epsilon);
  RationalSeries denom = RationalSeries::one(order);
  for (int k = 1; k <= epsilon && k <= order; ++k) denom.at(k) -= p.coeff(k);
  if (denom.coeff(0).is_zero() || denom.coeff(0).sign() <= 0)
    throw std::logic_error("full_avalanche_pgf: denominator constant term not positive");
  return denom.reciprocal().scaled(q);
}

// E[z^{T1-tilde}] for the initially empty book. The first trade happens the
// first time the walk rises exactly mu above its running minimum, so the
// pre-trade path is a ladder of confined one-level descents (one per new
// minimum, cut at each first visit) followed by one confined ascent of mu:
//
//   E[z^{T1-tilde}] = F_mu(z) / (1 - D_mu(z)).
//
// The depth of the final minimum fixes the trade level and with it the
// Type I / Type II classification. Enumeration pins this form down; the
// descent/ascent-per-level reading of the same law (which matches it for
// mu <= 2 but undercounts deeper books) is kept in
// first_trade_pgf_empty_per_level for the verification diff report.
inline RationalSeries first_trade_pgf_empty(int mu, int order) {
  const RationalSeries descent = empty_book_descent_step_gf(mu, order);
  return empty_book_ascent_gf(mu, order) *
         (RationalSeries::one(order) - descent).reciprocal();
}

// The per-level composition: trade at level k realized as a level-k descent
// class followed by the ascent class, plus the full-book Type II part. Kept
// only as the documented alternative reading; not equal to the enumeration
// for mu >= 2.
inline RationalSeries first_trade_pgf_empty_per_level(int mu, int order) {
  RationalSeries type1(order);
  const RationalSeries ascent = empty_book_ascent_gf(mu, order);
  for (int k = 1; k <= mu; ++k)
    type1 = type1 + empty_book_descent_gf(mu, k, order) * ascent;
  const RationalSeries b = class_gf(CombClass::B, mu, order);
  const RationalSeries c = class_gf(CombClass::C, mu, order);
  return type1 + b * c * (RationalSeries::one(order) - b).reciprocal();
}

}  // namespace obav
