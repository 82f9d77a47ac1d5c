#pragma once

#include <cstdint>
#include <random>

namespace smd::rng {

// All randomness in the artifact flows through mt19937_64 plus the two
// draw helpers below, so seeded streams are reproducible across builds.
// Bit-equality across standard library implementations is guaranteed for
// the engine itself; the helpers avoid std distributions, whose output is
// implementation-defined.

/// Uniform integer in [0, bound), unbiased via rejection. bound must be > 0.
inline std::uint64_t below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t r;
  do {
    r = engine();
  } while (r >= limit);
  return r % bound;
}

/// Uniform integer in [lo, hi] inclusive.
inline int between(std::mt19937_64& engine, int lo, int hi) {
  return lo + static_cast<int>(below(engine, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Uniform real in [0, 1) with 53 random mantissa bits.
inline double unit(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Derives an independent stream seed (splitmix64 finalizer over seed+index).
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace smd::rng
