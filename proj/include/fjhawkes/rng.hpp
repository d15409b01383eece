#pragma once

#include <cstdint>

namespace fjhawkes {

// Substream identifiers. Matrices drawn for the same (seed, stream) pair are
// identical no matter which other quantities were sampled first, so two
// topologies built from one seed share their A, B and trust draws.
enum class StreamId : std::uint64_t {
  influence = 1,      // W
  susceptibility = 2, // A
  reactivity = 3,     // B
  trust0 = 4,         // T0
  trust1 = 5,         // T1
};

// splitmix64 counter generator. Fixed algorithm, fixed bit-to-double mapping:
// results are reproducible across platforms for a given (seed, stream).
class RngStream {
 public:
  RngStream(std::uint64_t seed, StreamId stream)
      : state_(mix(seed + kGamma * (static_cast<std::uint64_t>(stream) + 1))) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform in [0, 1): top 53 bits scaled by 2^-53.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  static constexpr const char* algorithm() { return "splitmix64"; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace fjhawkes
