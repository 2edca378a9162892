#pragma once

#include <cstddef>
#include <cstdint>

namespace grdlog {

inline constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

inline uint64_t fnv1a64_step(uint64_t h, uint8_t byte) {
  return (h ^ byte) * kFnvPrime;
}

inline uint64_t fnv1a64(const uint8_t* data, size_t len, uint64_t h = kFnvOffset) {
  for (size_t i = 0; i < len; ++i) h = fnv1a64_step(h, data[i]);
  return h;
}

}  // namespace grdlog
