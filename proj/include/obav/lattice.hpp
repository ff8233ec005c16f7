#pragma once

#include <stdexcept>
#include <vector>

#include "obav/rational.hpp"
#include "obav/series.hpp"

namespace obav {

// Exact generating functions of the constrained path classes via lattice
// dynamic programming on the confinement strip. Paths are counted with
// arbitrary-precision integers and divided by 2^n at the end; no radical
// arithmetic is involved.

namespace detail {

// Paths from `start` that first step onto `absorb` at time n while every
// intermediate position v satisfies lo < v < hi. `absorb` must be lo or hi.
// If start == absorb the path class is the empty path (generating function 1).
inline std::vector<BigInt> first_passage_counts(int start, int absorb, int lo, int hi,
                                                int max_len) {
  std::vector<BigInt> counts(max_len + 1);
  if (start == absorb) {
    counts[0] = 1;
    return counts;
  }
  if (!(lo < start && start < hi))
    throw std::invalid_argument("first_passage_counts: start outside open strip");
  const int width = hi - lo - 1;  // live states lo+1 .. hi-1
  std::vector<BigInt> f(width), next(width);
  f[start - lo - 1] = 1;
  for (int n = 1; n <= max_len; ++n) {
    for (auto& x : next) x = 0;
    for (int i = 0; i < width; ++i) {
      if (f[i] == 0) continue;
      const int v = lo + 1 + i;
      for (int d : {-1, +1}) {
        const int w = v + d;
        if (w == absorb) {
          counts[n] += f[i];
        } else if (lo < w && w < hi) {
          next[w - lo - 1] += f[i];
        }
      }
    }
    f.swap(next);
  }
  return counts;
}

// Paths from `start` to `end` of length n whose positions at steps 1..n all
// satisfy lo < v < hi. Requires lo < start < hi.
inline std::vector<BigInt> confined_counts(int start, int end, int lo, int hi, int max_len) {
  if (!(lo < start && start < hi))
    throw std::invalid_argument("confined_counts: start outside open strip");
  std::vector<BigInt> counts(max_len + 1);
  if (start == end) counts[0] = 1;
  const int width = hi - lo - 1;
  if (end <= lo || end >= hi) return counts;
  std::vector<BigInt> cur(width), next(width);
  cur[start - lo - 1] = 1;
  for (int n = 1; n <= max_len; ++n) {
    for (auto& x : next) x = 0;
    for (int i = 0; i < width; ++i) {
      if (cur[i] == 0) continue;
      const int v = lo + 1 + i;
      for (int d : {-1, +1}) {
        const int w = v + d;
        if (lo < w && w < hi) next[w - lo - 1] += cur[i];
      }
    }
    cur.swap(next);
    counts[n] = cur[end - lo - 1];
  }
  return counts;
}

inline RationalSeries counts_to_pgf(const std::vector<BigInt>& counts) {
  RationalSeries s(static_cast<int>(counts.size()) - 1);
  for (int n = 0; n < static_cast<int>(counts.size()); ++n)
    if (counts[n] != 0) s.at(n) = Rational(counts[n], pow2(static_cast<unsigned>(n)));
  return s;
}

}  // namespace detail

enum class CombClass { A, B, C };

// Probability generating functions of the trading-excursion path classes.
//
//   A_mu : paths confined to (-mu, 0] that end with a first step to +1
//          (a Type I trading excursion).
//   B_mu : paths confined to (-mu, 0] that return to 0 and step down to -1.
//   C_mu : A_mu paths whose pre-final minimum is exactly -mu+1.
//
// Each class is counted by its own dynamic program; the identities
// B_mu = A_mu and C_mu = A_mu - A_{mu-1} are checked in tests rather than
// assumed here.
inline RationalSeries class_gf(CombClass cls, int mu, int order) {
  if (mu < 1) throw std::invalid_argument("class_gf: mu must be >= 1");
  if (order < 0) throw std::invalid_argument("class_gf: negative order");
  switch (cls) {
    case CombClass::A:
      return detail::counts_to_pgf(detail::first_passage_counts(0, +1, -mu, +1, order));
    case CombClass::B: {
      // Prefix 0 -> 0 confined to (-mu, 0], then one down-step.
      const auto prefix = detail::confined_counts(0, 0, -mu, +1, order > 0 ? order - 1 : 0);
      std::vector<BigInt> counts(order + 1);
      for (int n = 1; n <= order; ++n) counts[n] = prefix[n - 1];
      return detail::counts_to_pgf(counts);
    }
    case CombClass::C: {
      // A_mu restricted to paths touching -mu+1: track a touched flag.
      const int lo = -mu, hi = +1;
      const int width = hi - lo - 1;
      std::vector<BigInt> plain(width), touched(width);
      std::vector<BigInt> plain_next(width), touched_next(width);
      const int mark = -mu + 1;
      if (0 == mark)
        touched[0 - lo - 1] = 1;
      else
        plain[0 - lo - 1] = 1;
      std::vector<BigInt> counts(order + 1);
      for (int n = 1; n <= order; ++n) {
        for (auto& x : plain_next) x = 0;
        for (auto& x : touched_next) x = 0;
        for (int i = 0; i < width; ++i) {
          const int v = lo + 1 + i;
          for (int d : {-1, +1}) {
            const int w = v + d;
            if (w == hi) {
              if (touched[i] != 0) counts[n] += touched[i];
            } else if (lo < w && w < hi) {
              const int j = w - lo - 1;
              if (w == mark) {
                touched_next[j] += plain[i] + touched[i];
              } else {
                plain_next[j] += plain[i];
                touched_next[j] += touched[i];
              }
            }
          }
        }
        plain.swap(plain_next);
        touched.swap(touched_next);
      }
      return detail::counts_to_pgf(counts);
    }
  }
  throw std::logic_error("class_gf: unreachable");
}

// Empty-book descent class: first passage from 0 down to k-mu while staying
// strictly below mu, for a first Type I trade at level k in {1..mu}. At
// k == mu the start already sits at the target and the class is the empty
// path (generating function 1).
inline RationalSeries empty_book_descent_gf(int mu, int k, int order) {
  if (mu < 1 || k < 1 || k > mu)
    throw std::invalid_argument("empty_book_descent_gf: need 1 <= k <= mu");
  return detail::counts_to_pgf(detail::first_passage_counts(0, k - mu, k - mu, mu, order));
}

// Empty-book ascent class: first passage upward by mu while never stepping
// below the starting level (start at k-mu, absorb at k, level k-mu-1
// forbidden). Does not depend on k.
inline RationalSeries empty_book_ascent_gf(int mu, int order) {
  if (mu < 1) throw std::invalid_argument("empty_book_ascent_gf: mu must be >= 1");
  return detail::counts_to_pgf(detail::first_passage_counts(0, mu, -1, mu, order));
}

// One rung of the empty-book minimum ladder: first passage from the running
// minimum to one tick below it while staying less than mu above it (a higher
// rise would already be a trade). Reflection maps this class onto the
// trading class A_mu, an identity the tests pin down.
inline RationalSeries empty_book_descent_step_gf(int mu, int order) {
  if (mu < 1) throw std::invalid_argument("empty_book_descent_step_gf: mu must be >= 1");
  return detail::counts_to_pgf(detail::first_passage_counts(0, -1, -1, mu, order));
}

}  // namespace obav
