#pragma once

#include <cstdint>

namespace gsgen {

/// Counter-based splittable generator (splitmix64). A stream is fully
/// determined by its seed, so per-trial substreams derived with mix_seed
/// give bit-identical results regardless of scheduling.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  int bit() { return static_cast<int>(next() >> 63); }

  bool bernoulli(double p) { return uniform() < p; }
};

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  SplitMix64 s(a ^ (0x9E3779B97F4A7C15ull * (b + 1)));
  s.next();
  return s.next();
}

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

}  // namespace gsgen
