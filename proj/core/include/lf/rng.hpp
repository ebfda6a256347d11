#pragma once

#include <cstdint>
#include <random>

namespace lf {

/// Seeded RNG wrapper. Uses mt19937_64 but converts to doubles explicitly,
/// so streams are identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] via rejection-free modulo (bias is
  /// negligible for the small ranges used here and fully deterministic).
  std::uint64_t uniform_index(std::uint64_t lo, std::uint64_t hi) {
    return lo + engine_() % (hi - lo + 1);
  }

  /// Derive an independent stream for substream `k` of the given seed.
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t k) {
    // splitmix64 finalizer over (seed, k)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lf
