#pragma once

#include <cstdint>
#include <random>

namespace grdlog {

// All randomized subroutines take an explicit seed or engine; there is no
// global randomness anywhere in the library.
using Rng = std::mt19937_64;

// Unbiased draw from [0, n). Rejection sampling on the raw engine output so
// results are identical across standard library implementations
// (std::uniform_int_distribution is not portable).
inline uint64_t uniform_below(Rng& rng, uint64_t n) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace grdlog
