#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <random>
#include <string_view>

namespace mega {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives a child seed from a base seed and a path of stream identifiers.
/// Distinct paths give statistically independent streams.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = mix64(base);
  for (std::uint64_t p : path) h = mix64(h ^ mix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

/// 64-bit FNV-1a, used for stable string hashing (algorithm names, configs).
constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seedable generator with platform-independent draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are not, so the conversions to
/// doubles and bounded integers are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via Box-Muller.
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Independent generator for a sub-stream; does not advance *this.
  Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_hint(), {stream})); }

 private:
  std::uint64_t seed_hint() const {
    std::mt19937_64 copy = engine_;
    return copy();
  }

  std::mt19937_64 engine_;
};

}  // namespace mega
