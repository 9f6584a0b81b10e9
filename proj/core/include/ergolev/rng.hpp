#pragma once

#include <cstdint>

namespace ergolev {

/// Counter-based random stream built on the SplitMix64 finalizer.
///
/// Each stream is a pure function of (key, counter), so independent
/// substreams can be derived for parallel workers without any shared state:
/// substream(seed, i) and substream(seed, j) are decorrelated for i != j.
/// Consumption order is fixed by the callers (documented per use site), so
/// the same (seed, index) always reproduces the same draws.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0)
      : key_(key), counter_(counter) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Derive the stream for worker/path `index` of a run seeded with `seed`.
  static CounterRng substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t key = mix(seed + 0x9E3779B97F4A7C15ULL);
    key = mix(key ^ mix(index * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL));
    return CounterRng(key);
  }

  std::uint64_t next_u64() {
    counter_ += 0x9E3779B97F4A7C15ULL;
    return mix(key_ + counter_);
  }

  /// Uniform on [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe to take logarithms of.
  double next_unit_pos() { return 1.0 - next_unit(); }

  double next_exponential();

  /// Standard normal (two uniforms per call, no cached spare).
  double next_normal();

  /// Poisson(mean); exact inversion/product method for small means,
  /// Hormann's PTRS transformed rejection for large ones.
  std::uint64_t next_poisson(double mean);

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace ergolev
