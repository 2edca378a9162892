#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grdlog/bigint.hpp"
#include "grdlog/fq.hpp"

namespace grdlog {

/// Partial knowledge of an exponent: residue modulo modulus.
/// Moduli get multiplied together under CRT, so both sides are big integers.
struct CrtConstraint {
  BigInt residue;  // 0 <= residue < modulus
  BigInt modulus;  // >= 1
  bool operator==(const CrtConstraint&) const = default;
};

/// Exact multiplicative order of a nonzero element, computed by dividing
/// prime factors out of the group order.
uint64_t element_order(const FqField& K, const FqElem& a);

struct DlogParams {
  // Baby-step table cap; above this the per-prime solver falls back to
  // Pollard rho. 7^d - 1 for d <= 18 never gets near it.
  uint64_t bsgs_table_cap = uint64_t{1} << 26;
  uint64_t rho_seed = 0x9e3779b97f4a7c15ULL;
  int rho_max_retries = 64;
};

/// Pohlig-Hellman over the prime-power factors of ord(base), baby-step
/// giant-step inside each prime subgroup. Returns (r, ord(base)) with
/// base^r = target. Throws NotInSubgroupError if target is not a power of
/// base, std::domain_error if base is zero.
CrtConstraint discrete_log(const FqField& K, const FqElem& base, const FqElem& target,
                           const DlogParams& params = {});

/// Combine congruences x = r_i (mod m_i) into x = r (mod lcm m_i). Moduli may
/// share factors; disagreement on a shared factor throws
/// InconsistentSystemError. Empty input is invalid.
CrtConstraint crt_combine(std::span<const CrtConstraint> constraints);

}  // namespace grdlog
