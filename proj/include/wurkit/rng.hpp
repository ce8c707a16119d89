#pragma once

#include <cstdint>
#include <random>

#include "wurkit/bits.hpp"

namespace wurkit {

using Rng = std::mt19937_64;

// Derives an independent engine for sub-stream `index` of `seed`, so that
// per-trial draws do not depend on execution order.
inline Rng derived_rng(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined key
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

// Distribution helpers with a fixed algorithm so streams are identical
// across standard library implementations.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline Bit random_bit(Rng& rng) { return static_cast<Bit>(rng() >> 63); }
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) { return bound ? rng() % bound : 0; }

inline BitStream random_bits(Rng& rng, std::size_t count) {
  BitStream bits(count);
  for (auto& b : bits) b = random_bit(rng);
  return bits;
}

}  // namespace wurkit
