#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "obav/walk.hpp"

namespace obav {

struct SpreadParam {
  int mu;
  explicit SpreadParam(int m) : mu(m) {
    if (m < 1) throw std::invalid_argument("SpreadParam: mu must be >= 1");
  }
};

enum class InitMode { FullBook, EmptyBook };
enum class TradeKind { TypeI, TypeII };

struct TradeEvent {
  std::int64_t time = 0;
  std::int32_t level = 0;
  TradeKind kind = TradeKind::TypeII;
  std::int64_t intertrade_gap = 0;  // T_i; zero for the anchoring trade at n = 0
  bool flash_crash = false;
};

// Order-book state under the removal/placement dynamics: at each step the
// level the price just left is cleared and one order appears mu ticks above
// it; a trade fires when the price lands on a stocked level. FullBook mode
// additionally runs the best-ask recursion and cross-checks it against the
// volume rule on every step.
class BookState {
 public:
  BookState(InitMode mode, SpreadParam mu) : mode_(mode), mu_(mu.mu) {}

  InitMode init_mode() const { return mode_; }
  int mu() const { return mu_; }
  std::int64_t time() const { return time_; }
  std::int32_t best_ask() const { return best_ask_; }
  std::int32_t last_trade_level() const { return last_trade_level_; }

  // Order presence at a level: explicit overrides on top of the initial
  // condition (full book stocks every level >= 0, empty book none).
  std::int32_t volume(std::int32_t level) const {
    auto it = overrides_.find(level);
    if (it != overrides_.end()) return it->second;
    return (mode_ == InitMode::FullBook && level >= 0) ? 1 : 0;
  }

  friend std::optional<TradeEvent> step_book(BookState& state, std::int32_t prev_price,
                                             std::int32_t new_price);

 private:
  void set_volume(std::int32_t level, std::int32_t v) { overrides_[level] = v; }

  [[noreturn]] void violation(const char* what, std::int32_t price) const {
    std::ostringstream os;
    os << "book invariant violated: " << what << " at n=" << time_ << " S=" << price
       << " alpha=" << best_ask_ << " mu=" << mu_;
    throw std::logic_error(os.str());
  }

  InitMode mode_;
  int mu_;
  std::int64_t time_ = 0;
  bool started_ = false;
  std::int32_t best_ask_ = 0;
  std::int32_t last_trade_level_ = 0;  // S(tau_0) = 0 anchors trade typing
  std::int64_t last_trade_time_ = 0;
  std::unordered_map<std::int32_t, std::int32_t> overrides_;
};

// One step of the book dynamics. The first call must be the initial check at
// n = 0 with prev_price == new_price == 0; every later call advances time by
// one with |new_price - prev_price| = 1.
inline std::optional<TradeEvent> step_book(BookState& state, std::int32_t prev_price,
                                           std::int32_t new_price) {
  if (!state.started_) {
    if (prev_price != 0 || new_price != 0)
      throw std::invalid_argument("step_book: initial check must be at price 0");
    state.started_ = true;
    if (state.volume(0) > 0) {
      // The n = 0 trade: Type II by convention, anchors tau_0. The executed
      // order leaves the book with the removal in the first transition.
      return TradeEvent{0, 0, TradeKind::TypeII, 0, false};
    }
    return std::nullopt;
  }

  if (std::abs(new_price - prev_price) != 1)
    throw std::invalid_argument("step_book: price increment must be +-1");

  // Removal at the level just left, placement mu above it.
  state.set_volume(prev_price, 0);
  state.set_volume(prev_price + state.mu_, state.volume(prev_price + state.mu_) + 1);

  if (state.mode_ == InitMode::FullBook) {
    // alpha_{n+1} = alpha_n + I{alpha_n = S_n} - I{alpha_n = S_n + mu + 1}
    if (state.best_ask_ == prev_price)
      ++state.best_ask_;
    else if (state.best_ask_ == prev_price + state.mu_ + 1)
      --state.best_ask_;
  }

  ++state.time_;

  const bool volume_trade = state.volume(new_price) > 0;
  if (state.mode_ == InitMode::FullBook) {
    const bool ask_trade = state.best_ask_ == new_price;
    if (volume_trade != ask_trade) state.violation("volume rule disagrees with best-ask rule", new_price);
    if (!(new_price <= state.best_ask_ && state.best_ask_ <= new_price + state.mu_ + 1))
      state.violation("best ask out of bounds", new_price);
  }

  if (!volume_trade) return std::nullopt;

  TradeEvent ev;
  ev.time = state.time_;
  ev.level = new_price;
  ev.kind = new_price > state.last_trade_level_ ? TradeKind::TypeI : TradeKind::TypeII;
  ev.intertrade_gap = state.time_ - state.last_trade_time_;
  state.last_trade_level_ = new_price;
  state.last_trade_time_ = state.time_;
  // The executed order is removed when the price steps away (next removal),
  // so the map is left untouched here.
  return ev;
}

// Full chronological trade list for a path, with Type classification and
// flash-crash flags (Type II trades arriving within epsilon of the previous
// trade). In FullBook mode the n = 0 trade is included.
inline std::vector<TradeEvent> detect_trades(const WalkPath& path, SpreadParam mu,
                                             InitMode mode, int epsilon) {
  if (!path.valid()) throw std::invalid_argument("detect_trades: invalid path");
  if (epsilon < 1) throw std::invalid_argument("detect_trades: epsilon must be >= 1");
  BookState state(mode, mu);
  std::vector<TradeEvent> events;
  if (auto ev = step_book(state, 0, 0)) events.push_back(*ev);
  for (int n = 1; n <= path.length(); ++n) {
    if (auto ev = step_book(state, path.steps[n - 1], path.steps[n])) {
      ev->flash_crash = ev->kind == TradeKind::TypeII && ev->time > 0 && ev->intertrade_gap <= epsilon;
      events.push_back(*ev);
    }
  }
  return events;
}

// --- path-class membership predicates (Type II excursion decomposition) ---

inline bool in_class_A(const WalkPath& p, int mu) {
  const int n = p.length();
  if (n < 1 || p.steps[0] != 0 || p.steps[n] != 1) return false;
  for (int k = 1; k <= n - 1; ++k)
    if (!(-mu < p.steps[k] && p.steps[k] <= 0)) return false;
  return true;
}

inline bool in_class_B(const WalkPath& p, int mu) {
  const int n = p.length();
  if (n < 1 || p.steps[0] != 0 || p.steps[n] != -1 || p.steps[n - 1] != 0) return false;
  for (int k = 1; k < n - 1; ++k)
    if (!(-mu < p.steps[k] && p.steps[k] <= 0)) return false;
  return true;
}

inline bool in_class_C(const WalkPath& p, int mu) {
  if (!in_class_A(p, mu)) return false;
  const int n = p.length();
  std::int32_t lo = 0;
  for (int k = 0; k <= n - 1; ++k) lo = std::min(lo, p.steps[k]);
  return lo == -mu + 1;
}

struct Type2Decomposition {
  int K = 0;
  std::vector<WalkPath> segments;  // K paths, each in class B after rebasing
  WalkPath tail;                   // one path in class C after rebasing
};

namespace detail {
inline WalkPath rebase(const WalkPath& p, int from, int to) {
  WalkPath out;
  out.steps.reserve(to - from + 1);
  for (int i = from; i <= to; ++i) out.steps.push_back(p.steps[i] - p.steps[from]);
  return out;
}
}  // namespace detail

// Splits a Type II trading excursion into K class-B segments and a class-C
// tail, K = -S(T1 - 1). Cut j ends at one past the last visit to level
// -(j-1) among times 0..T1-2. Rejects paths that are not Type II trading
// excursions (verified by replaying the book dynamics).
inline Type2Decomposition decompose_type2_excursion(const WalkPath& excursion, SpreadParam mu) {
  if (!excursion.valid())
    throw std::invalid_argument("decompose_type2_excursion: invalid path");
  const int T = excursion.length();
  const auto events = detect_trades(excursion, mu, InitMode::FullBook, 1);
  // events[0] is the n = 0 anchor; the excursion must end at its first trade.
  if (events.size() != 2 || events[1].time != T || events[1].kind != TradeKind::TypeII)
    throw std::invalid_argument(
        "decompose_type2_excursion: path is not a Type II-terminal trading excursion");

  Type2Decomposition out;
  out.K = -excursion.steps[T - 1];
  std::vector<int> cuts(out.K + 1, 0);
  for (int j = 1; j <= out.K; ++j) {
    int last = -1;
    for (int n = 0; n <= T - 2; ++n)
      if (excursion.steps[n] == -(j - 1)) last = n;
    if (last < 0) throw std::logic_error("decompose_type2_excursion: missing level visit");
    cuts[j] = last + 1;
  }
  for (int j = 1; j <= out.K; ++j)
    out.segments.push_back(detail::rebase(excursion, cuts[j - 1], cuts[j]));
  out.tail = detail::rebase(excursion, cuts[out.K], T);
  return out;
}

// Glues rebased segments back together; inverse of the decomposition.
inline WalkPath concatenate_excursion(const Type2Decomposition& d) {
  WalkPath out;
  out.steps.push_back(0);
  auto append = [&out](const WalkPath& p) {
    const std::int32_t base = out.steps.back();
    for (std::size_t i = 1; i < p.steps.size(); ++i) out.steps.push_back(base + p.steps[i]);
  };
  for (const auto& seg : d.segments) append(seg);
  append(d.tail);
  return out;
}

}  // namespace obav
