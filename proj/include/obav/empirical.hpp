#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

namespace obav {

struct SampleMoments {
  double mean = 0;
  double variance = 0;
  double se_mean = 0;
  double se_variance = 0;
};

// Monte Carlo tally of a discrete random variable. Tallies merge
// commutatively, so aggregation order (and hence worker count) cannot change
// the result. Censored runs are counted separately, never mixed into the pmf.
struct EmpiricalDistribution {
  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t n_samples = 0;  // uncensored samples
  std::uint64_t censored = 0;
  std::uint64_t master_seed = 0;

  void add(std::int64_t value) {
    ++counts[value];
    ++n_samples;
  }
  void add_censored() { ++censored; }

  void merge(const EmpiricalDistribution& other) {
    for (const auto& [v, c] : other.counts) counts[v] += c;
    n_samples += other.n_samples;
    censored += other.censored;
  }

  std::uint64_t total_runs() const { return n_samples + censored; }

  // Probability estimate against all runs; values whose avalanche resolves
  // within the horizon are tallied exactly, so censoring does not bias
  // small-value cells.
  double p_hat(std::int64_t value) const {
    auto it = counts.find(value);
    const double c = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    return c / static_cast<double>(total_runs());
  }

  // Normal-approximation half width z * sqrt(p(1-p)/n).
  double ci_half_width(std::int64_t value, double z = 4.0) const {
    const double p = p_hat(value);
    const double n = static_cast<double>(total_runs());
    return z * std::sqrt(p * (1.0 - p) / n);
  }

  std::optional<SampleMoments> moments() const {
    if (n_samples < 2) return std::nullopt;
    const double n = static_cast<double>(n_samples);
    double s1 = 0, s2 = 0;
    for (const auto& [v, c] : counts) {
      s1 += static_cast<double>(v) * static_cast<double>(c);
      s2 += static_cast<double>(v) * static_cast<double>(v) * static_cast<double>(c);
    }
    const double mean = s1 / n;
    const double variance = (s2 - n * mean * mean) / (n - 1.0);
    double m4 = 0;
    for (const auto& [v, c] : counts) {
      const double d = static_cast<double>(v) - mean;
      m4 += d * d * d * d * static_cast<double>(c);
    }
    m4 /= n;
    SampleMoments out;
    out.mean = mean;
    out.variance = variance;
    out.se_mean = std::sqrt(variance / n);
    const double var_of_var = (m4 - variance * variance * (n - 3.0) / (n - 1.0)) / n;
    out.se_variance = std::sqrt(std::max(var_of_var, 0.0));
    return out;
  }
};

inline SampleMoments sample_moments(const EmpiricalDistribution& dist) {
  auto m = dist.moments();
  if (!m) throw std::domain_error("sample_moments: need at least two uncensored samples");
  return *m;
}

}  // namespace obav
