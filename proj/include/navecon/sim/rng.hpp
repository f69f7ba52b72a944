#pragma once

#include <cstdint>

namespace navecon::sim {

// splitmix64 finalizer (Steele/Lea/Flood constants). All simulation
// randomness derives from it, so logs reproduce bit-for-bit on any platform
// with 64-bit integers.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Episode seed is a pure function of (master_seed, episode_index); episodes
// can run in any order or thread and still produce identical records.
constexpr std::uint64_t episode_seed(std::uint64_t master_seed, std::uint64_t episode_index) {
  return mix64(mix64(master_seed) ^ episode_index);
}

// Deterministic PRNG over the splitmix64 sequence. Not cryptographic.
class SplitMix64 {
 public:
  constexpr explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random bits
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_range(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // standard normal via Box-Muller; caches the second value
  double next_gaussian();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace navecon::sim
