#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace braidq {

using Rng = std::mt19937_64;

// Unbiased draw from [0, n). Hand-rolled so seeded runs reproduce
// byte-for-byte regardless of the standard library's distribution internals.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::size_t>(x % span);
}

// Uniform double in [0, 1), 53 random bits.
inline double uniform_real(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace braidq
