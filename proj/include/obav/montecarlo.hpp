#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "obav/book.hpp"
#include "obav/empirical.hpp"
#include "obav/rng.hpp"

namespace obav {

enum class Quantity {
  SimplifiedLength,   // L_eps
  FullLength,         // L*_{mu,eps}
  FirstTradeTime,     // T1 (or T1-tilde for the empty book)
  FirstTypeIIIndex,   // D
  TimeToFirstTypeII,  // tau_D
};

struct AvalancheConfig {
  int mu = 1;
  int epsilon = 1;
  int horizon = 0;  // 0: default 64*eps + 64*mu^2
  std::uint64_t n_paths = 1;
  InitMode init_mode = InitMode::FullBook;
  std::uint64_t master_seed = 0;

  int effective_horizon() const { return horizon > 0 ? horizon : 64 * epsilon + 64 * mu * mu; }

  void validate() const {
    if (mu < 1) throw std::invalid_argument("AvalancheConfig: mu must be >= 1");
    if (epsilon < 1) throw std::invalid_argument("AvalancheConfig: epsilon must be >= 1");
    if (n_paths < 1) throw std::invalid_argument("AvalancheConfig: n_paths must be >= 1");
    if (horizon < 0) throw std::invalid_argument("AvalancheConfig: negative horizon");
  }
};

namespace detail {

// Minimal book stepper for the Monte Carlo hot loop. FullBook mode runs on
// the best-ask recursion alone (trade iff alpha == S, equivalent to the
// volume rule); EmptyBook mode keeps the explicit sparse volume map. The
// equivalence of the two routes is enforced by BookState and the exhaustive
// suites, so no cross-check runs here.
class LeanBook {
 public:
  LeanBook(InitMode mode, int mu) : mode_(mode), mu_(mu) { map_.reserve(64); }

  void reset() {
    price_ = 0;
    alpha_ = 0;
    map_.clear();
  }

  bool initial_trade() const { return mode_ == InitMode::FullBook; }

  // Advances one step with increment d; returns whether a trade fires.
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
    map_[prev] = 0;
    ++map_[prev + mu_];
    const auto it = map_.find(price_);
    return it != map_.end() && it->second > 0;
  }

  int price() const { return price_; }

 private:
  InitMode mode_;
  int mu_;
  int price_ = 0;
  int alpha_ = 0;
  std::unordered_map<int, int> map_;
};

// Runs one path and measures `quantity`; nullopt = censored at the horizon.
inline std::optional<std::int64_t> measure_path(RngStream rng, const AvalancheConfig& cfg,
                                                Quantity quantity, LeanBook& book) {
  const int H = cfg.effective_horizon();
  const int eps = cfg.epsilon;
  book.reset();

  switch (quantity) {
    case Quantity::SimplifiedLength: {
      int s = 0, running_max = 0;
      std::int64_t last = 0, len = 0;
      for (int t = 1; t <= H; ++t) {
        s += rng.next_step();
        if (s > running_max) {
          running_max = s;
          const std::int64_t gap = t - last;
          if (gap > eps) return len;
          len += gap;
          last = t;
        } else if (t - last >= eps) {
          return len;
        }
      }
      return std::nullopt;
    }

    case Quantity::FullLength: {
      bool anchored = book.initial_trade();
      std::int64_t last = 0, len = 0;
      for (int t = 1; t <= H; ++t) {
        const bool trade = book.step(rng.next_step());
        if (!anchored) {
          if (trade) {
            anchored = true;
            last = t;
          }
          continue;
        }
        if (trade) {
          const std::int64_t gap = t - last;
          if (gap > eps) return len;
          len += gap;
          last = t;
        } else if (t - last >= eps) {
          return len;
        }
      }
      return std::nullopt;
    }

    case Quantity::FirstTradeTime: {
      for (int t = 1; t <= H; ++t)
        if (book.step(rng.next_step())) return t;
      return std::nullopt;
    }

    case Quantity::FirstTypeIIIndex:
    case Quantity::TimeToFirstTypeII: {
      int last_trade_level = 0;  // S(tau_0) = 0 anchors the typing
      std::int64_t index = 0;
      for (int t = 1; t <= H; ++t) {
        if (!book.step(rng.next_step())) continue;
        ++index;
        if (book.price() <= last_trade_level)
          return quantity == Quantity::FirstTypeIIIndex ? index : t;
        last_trade_level = book.price();
      }
      return std::nullopt;
    }
  }
  throw std::logic_error("measure_path: unreachable");
}

}  // namespace detail

// Seeded Monte Carlo estimate of a trade/avalanche quantity. One RngStream
// per path index; chunked tallies merge commutatively, so the result is
// identical for every thread count.
inline EmpiricalDistribution estimate_distribution(const AvalancheConfig& config,
                                                   Quantity quantity, int threads = 1) {
  config.validate();
  if (threads < 1) threads = 1;
  constexpr std::uint64_t kChunk = 1 << 14;
  const std::uint64_t n_chunks = (config.n_paths + kChunk - 1) / kChunk;

  auto run_chunk = [&](std::uint64_t chunk, EmpiricalDistribution& tally,
                       detail::LeanBook& book) {
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t end = std::min(begin + kChunk, config.n_paths);
    for (std::uint64_t i = begin; i < end; ++i) {
      auto v = detail::measure_path(RngStream(config.master_seed, i), config, quantity, book);
      if (v)
        tally.add(*v);
      else
        tally.add_censored();
    }
  };

  EmpiricalDistribution total;
  total.master_seed = config.master_seed;
  if (threads == 1 || n_chunks == 1) {
    detail::LeanBook book(config.init_mode, config.mu);
    for (std::uint64_t c = 0; c < n_chunks; ++c) run_chunk(c, total, book);
    return total;
  }

  std::atomic<std::uint64_t> next_chunk{0};
  std::vector<EmpiricalDistribution> partial(static_cast<std::size_t>(threads));
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      detail::LeanBook book(config.init_mode, config.mu);
      for (;;) {
        const std::uint64_t c = next_chunk.fetch_add(1);
        if (c >= n_chunks) break;
        run_chunk(c, partial[w], book);
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace obav
