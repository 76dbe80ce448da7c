#pragma once

#include <cstdint>
#include <random>

namespace qosr {

// Every seeded stream in the project is std::mt19937_64. Draws go through
// uniform_below rather than std::uniform_int_distribution, whose output is
// implementation-defined, so files generated by one toolchain match another.
using Rng = std::mt19937_64;

inline constexpr const char* kRngAlgorithm = "mt19937_64";

// Uniform integer in [0, n). n must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Uniform integer in [lo, hi].
inline std::int64_t uniform_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace qosr
