#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace grdlog {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);

/// Deterministic Miller-Rabin; the fixed witness set is valid for all
/// n < 3.3e24, far beyond the 7^18 - 1 this artifact needs.
bool is_prime_u64(uint64_t n);

/// Prime factorization, sorted by prime: trial division to 1e6, then Pollard
/// rho with Brent cycle detection on what remains. n = 1 gives the empty list.
std::vector<std::pair<uint64_t, int>> int_factor(uint64_t n);

}  // namespace grdlog
