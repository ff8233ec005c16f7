#pragma once

#include <cstdint>

namespace obav {

// Counter-seeded splitmix64 stream. One stream per simulated path: identical
// (master_seed, stream_index) always reproduces the same draws, independent
// of scheduling or worker count.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : state_(mix(mix(master_seed ^ 0x9E3779B97F4A7C15ULL) ^
                   mix(stream_index + 0xBF58476D1CE4E5B9ULL))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // One fair +1/-1 increment. Draws 64 bits at a time and spends them one by
  // one, so a path of length n costs about n/64 mixes.
  int next_step() {
    if (bits_left_ == 0) {
      buffer_ = next_u64();
      bits_left_ = 64;
    }
    const int bit = static_cast<int>(buffer_ & 1U);
    buffer_ >>= 1U;
    --bits_left_;
    return bit != 0 ? +1 : -1;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  std::uint64_t buffer_ = 0;
  int bits_left_ = 0;
};

}  // namespace obav
