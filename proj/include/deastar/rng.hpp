#pragma once

// Portable seeded randomness. Everything stochastic in the library draws from
// SplitMix64 so that a seed produces the same stream on every platform and
// standard library (std::mt19937 is portable, but the std distributions are
// not).

#include <cstdint>
#include <initializer_list>

namespace deastar {

/// SplitMix64 output function (Steele, Lea & Flood 2014). Bijective on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 bits of resolution.
  constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be > 0. Rejection sampling, no modulo bias.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// Stream split: derives an independent child seed from a parent seed and a
/// sequence of indices. Each index is folded as
///   s <- mix64(s + gamma * (index + 1))
/// starting from s = mix64(parent). The derivation depends only on the values,
/// never on execution order, so parallel workers reproduce serial seeds.
constexpr std::uint64_t split_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> indices) noexcept {
  std::uint64_t s = mix64(parent);
  for (const std::uint64_t index : indices) s = mix64(s + kGoldenGamma * (index + 1));
  return s;
}

}  // namespace deastar
