#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "obav/rng.hpp"

namespace obav {

// A finite mid-price trajectory S_0..S_n: starts at 0, unit increments.
struct WalkPath {
  std::vector<std::int32_t> steps;

  int length() const { return static_cast<int>(steps.size()) - 1; }

  bool valid() const {
    if (steps.empty() || steps[0] != 0) return false;
    for (std::size_t j = 1; j < steps.size(); ++j) {
      const int d = steps[j] - steps[j - 1];
      if (d != 1 && d != -1) return false;
    }
    return true;
  }
};

inline WalkPath generate_walk(RngStream rng, int horizon) {
  if (horizon < 0) throw std::invalid_argument("generate_walk: negative horizon");
  WalkPath path;
  path.steps.resize(horizon + 1);
  path.steps[0] = 0;
  for (int j = 1; j <= horizon; ++j) path.steps[j] = path.steps[j - 1] + rng.next_step();
  return path;
}

// Strict ascending ladder times: each time the walk exceeds its running
// maximum (which starts at S_0 = 0).
inline std::vector<int> simplified_trading_times(const WalkPath& path) {
  std::vector<int> times;
  std::int32_t running_max = path.steps.empty() ? 0 : path.steps[0];
  for (std::size_t n = 1; n < path.steps.size(); ++n) {
    if (path.steps[n] > running_max) {
      running_max = path.steps[n];
      times.push_back(static_cast<int>(n));
    }
  }
  return times;
}

}  // namespace obav
