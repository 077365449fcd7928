// Seeded random source with explicit draw algorithms.
//
// std::mt19937_64 has a standardized bit stream, but the standard
// distributions do not, so every bounded/unit draw is implemented here.
// Two Rng instances built from the same seed produce identical draw
// sequences on every platform.

#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace prosa {

// splitmix64 step; used for seed derivation.
inline std::uint64_t mix_seed(std::uint64_t value) {
  value += 0x9E3779B97F4A7C15ull;
  value = (value ^ (value >> 30)) * 0xBF58476D1CE4E5B9ull;
  value = (value ^ (value >> 27)) * 0x94D049BB133111EBull;
  return value ^ (value >> 31);
}

// Deterministic per-(seed, salt) stream id, e.g. one per sweep size.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return mix_seed(seed ^ mix_seed(salt));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = next_u64();
    while (draw >= limit) draw = next_u64();
    return draw % bound;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1).
  double symmetric_unit() { return 2.0 * unit() - 1.0; }

  // First k entries of pool become a uniform sample without replacement.
  template <typename T>
  void partial_shuffle(std::vector<T>& pool, std::size_t k) {
    const std::size_t n = pool.size();
    if (k > n) k = n;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(below(n - i));
      std::swap(pool[i], pool[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace prosa
