// Portable seeded randomness.
//
// std::mt19937_64's output sequence is fixed by the standard, but the
// <random> distributions are not, so every draw below is derived from raw
// engine output. Identical seeds give identical streams on every platform.
#pragma once

#include <cstdint>
#include <random>

namespace natgt {

/// splitmix64 finalizer; used to derive independent sub-stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for sub-stream `index` of `seed` (e.g. one per Monte Carlo trial).
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// p = 0 never fires, p = 1 always fires.
  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, bound), bound >= 1; unbiased by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace natgt
