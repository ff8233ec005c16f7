#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "obav/book.hpp"
#include "obav/walk.hpp"

namespace obav {

enum class AvalancheMode { Simplified, Full };

struct AvalancheRecord {
  std::int64_t length = 0;  // L_eps or L*_{mu,eps}
  int trade_count = 0;      // k, the number of gaps summed
  AvalancheMode mode = AvalancheMode::Simplified;
  bool contains_flash_crash = false;
};

// First simplified avalanche of the path: ladder gaps R_i <= epsilon summed
// until the first gap > epsilon. The terminating gap counts as certified
// once a later ladder time shows it, or once the path covers epsilon further
// steps with no new maximum. nullopt = censored (path ends first).
inline std::optional<AvalancheRecord> simplified_avalanche_length(const WalkPath& path,
                                                                  int epsilon) {
  if (!path.valid()) throw std::invalid_argument("simplified_avalanche_length: invalid path");
  if (epsilon < 1) throw std::invalid_argument("simplified_avalanche_length: epsilon must be >= 1");
  AvalancheRecord rec{0, 0, AvalancheMode::Simplified, false};
  std::int64_t last = 0;
  for (int t : simplified_trading_times(path)) {
    const std::int64_t gap = t - last;
    if (gap > epsilon) return rec;
    rec.length += gap;
    ++rec.trade_count;
    last = t;
  }
  if (path.length() - last >= epsilon) return rec;
  return std::nullopt;
}

// First full avalanche: all-trade gaps T_i, Type I and Type II alike. In
// FullBook mode the window is anchored at the n = 0 trade; in EmptyBook mode
// at the first trade (after which the book behaves like a full one).
inline std::optional<AvalancheRecord> full_avalanche_length(const WalkPath& path, SpreadParam mu,
                                                            int epsilon, InitMode mode) {
  const auto events = detect_trades(path, mu, mode, epsilon);
  std::size_t first = 1;
  std::int64_t last = 0;
  if (mode == InitMode::EmptyBook) {
    if (events.empty()) return std::nullopt;  // anchor trade not observed yet
    last = events[0].time;
  }

  AvalancheRecord rec{0, 0, AvalancheMode::Full, false};
  for (std::size_t i = first; i < events.size(); ++i) {
    const auto& ev = events[i];
    const std::int64_t gap = ev.time - last;
    if (gap > epsilon) return rec;
    rec.length += gap;
    ++rec.trade_count;
    if (ev.kind == TradeKind::TypeII) rec.contains_flash_crash = true;
    last = ev.time;
  }
  if (path.length() - last >= epsilon) return rec;
  return std::nullopt;
}

}  // namespace obav
