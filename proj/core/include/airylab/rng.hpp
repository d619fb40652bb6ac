#pragma once

#include <cstdint>

namespace airylab {

// Counter-based stream: draw k is splitmix64(seed + k * golden). Any draw can
// be reproduced from (seed, counter) alone.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Standard normal via Box-Muller, no cached second value.
  double normal();

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::uint64_t counter() const { return counter_; }

  // Independent child stream, derived deterministically from the seed.
  [[nodiscard]] CounterRng substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace airylab
