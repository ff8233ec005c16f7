#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "obav/book.hpp"
#include "obav/rational.hpp"
#include "obav/walk.hpp"

namespace obav {

// Exhaustive path-space oracles: every result here is obtained by replaying
// the book dynamics over all 2^n paths (with early stopping), never through
// generating functions. They are the ground truth the series module is
// checked against.

constexpr int kMaxOracleLength = 26;  // cost grows like 2^n * n

// Visits every +-1 path of the given length as a WalkPath.
template <typename Fn>
inline void for_each_path(int length, Fn&& fn) {
  if (length < 0 || length > kMaxOracleLength)
    throw std::invalid_argument("for_each_path: length out of range");
  WalkPath path;
  path.steps.resize(length + 1);
  path.steps[0] = 0;
  const std::uint64_t total = 1ULL << length;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int j = 0; j < length; ++j)
      path.steps[j + 1] = path.steps[j] + (((bits >> j) & 1U) != 0 ? 1 : -1);
    fn(const_cast<const WalkPath&>(path));
  }
}

namespace detail {

// Incremental book replay with O(1) undo, shared by the DFS oracles.
// FullBook mode tracks (price, alpha) only; EmptyBook mode keeps the sparse
// volume map with an undo journal.
class OracleBook {
 public:
  OracleBook(InitMode mode, int mu) : mode_(mode), mu_(mu) {}

  bool initial_trade() const { return mode_ == InitMode::FullBook; }

  struct Frame {
    int price;
    int alpha;
    std::size_t journal_mark;
  };

  Frame save() const { return {price_, alpha_, journal_.size()}; }

  void restore(const Frame& f) {
    while (journal_.size() > f.journal_mark) {
      const auto& [level, old] = journal_.back();
      if (old == 0)
        volume_.erase(level);
      else
        volume_[level] = old;
      journal_.pop_back();
    }
    price_ = f.price;
    alpha_ = f.alpha;
  }

  bool step(int d) {
    const int prev = price_;
    price_ += d;
    if (mode_ == InitMode::FullBook) {
      if (alpha_ == prev)
        ++alpha_;
      else if (alpha_ == prev + mu_ + 1)
        --alpha_;
      return alpha_ == price_;
    }
    set(prev, 0);
    set(prev + mu_, get(prev + mu_) + 1);
    return get(price_) > 0;
  }

  int price() const { return price_; }

 private:
  int get(int level) const {
    auto it = volume_.find(level);
    return it == volume_.end() ? 0 : it->second;
  }
  void set(int level, int v) {
    auto it = volume_.find(level);
    const int old = it == volume_.end() ? 0 : it->second;
    journal_.emplace_back(level, old);
    if (it == volume_.end())
      volume_.emplace(level, v);
    else
      it->second = v;
  }

  InitMode mode_;
  int mu_;
  int price_ = 0;
  int alpha_ = 0;
  std::map<int, int> volume_;
  std::vector<std::pair<int, int>> journal_;
};

}  // namespace detail

// Exact P[T1 = n] (or T1-tilde in EmptyBook mode) for n = 1..max_len by
// depth-first enumeration with early stopping at the first trade.
inline std::vector<Rational> brute_force_first_trade(int mu, InitMode mode, int max_len) {
  if (mu < 1) throw std::invalid_argument("brute_force_first_trade: mu must be >= 1");
  if (max_len < 1 || max_len > kMaxOracleLength)
    throw std::invalid_argument("brute_force_first_trade: max_len must be in [1, 26]");

  std::vector<std::uint64_t> counts(max_len + 1, 0);
  detail::OracleBook book(mode, mu);

  std::function<void(int)> dfs = [&](int depth) {
    if (depth == max_len) return;
    for (int d : {-1, +1}) {
      const auto frame = book.save();
      const bool trade = book.step(d);
      if (trade)
        ++counts[depth + 1];
      else
        dfs(depth + 1);
      book.restore(frame);
    }
  };
  dfs(0);

  std::vector<Rational> pmf(max_len + 1);
  for (int n = 1; n <= max_len; ++n)
    pmf[n] = Rational(BigInt(counts[n]), pow2(static_cast<unsigned>(n)));
  return pmf;
}

struct AvalancheOracleResult {
  std::map<std::int64_t, Rational> pmf;  // P[L* = k] for every resolved k
  Rational unresolved;                   // mass whose avalanche outlives max_len
};

// Exact full-avalanche length law by enumeration: branches stop as soon as
// the terminating gap is certified; mass still alive at max_len is reported
// as unresolved, never dropped.
inline AvalancheOracleResult brute_force_avalanche(int mu, int epsilon, int max_len,
                                                   InitMode mode = InitMode::FullBook) {
  if (mu < 1 || epsilon < 1)
    throw std::invalid_argument("brute_force_avalanche: mu, epsilon must be >= 1");
  if (max_len < 1 || max_len > kMaxOracleLength)
    throw std::invalid_argument("brute_force_avalanche: max_len must be in [1, 26]");

  std::map<std::int64_t, BigInt> weights;
  BigInt unresolved = 0;
  detail::OracleBook book(mode, mu);
  const BigInt unit = pow2(static_cast<unsigned>(max_len));

  // State: time t, time of last counted trade, accumulated length; anchored
  // becomes true at the anchor trade (immediately in FullBook mode).
  std::function<void(int, bool, std::int64_t, std::int64_t)> dfs =
      [&](int t, bool anchored, std::int64_t last, std::int64_t len) {
        if (anchored && t - last >= epsilon) {
          weights[len] += unit >> static_cast<unsigned>(t);
          return;
        }
        if (t == max_len) {
          unresolved += unit >> static_cast<unsigned>(t);
          return;
        }
        for (int d : {-1, +1}) {
          const auto frame = book.save();
          const bool trade = book.step(d);
          if (!anchored) {
            dfs(t + 1, trade, trade ? t + 1 : 0, 0);
          } else if (trade) {
            dfs(t + 1, true, t + 1, len + (t + 1 - last));
          } else {
            dfs(t + 1, true, last, len);
          }
          book.restore(frame);
        }
      };
  dfs(0, book.initial_trade(), 0, 0);

  AvalancheOracleResult out;
  for (const auto& [k, w] : weights) out.pmf[k] = Rational(w, unit);
  out.unresolved = Rational(unresolved, unit);
  return out;
}

}  // namespace obav
