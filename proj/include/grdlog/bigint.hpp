#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace grdlog {

// Exponents and combined CRT moduli outgrow 64 bits (the lcm of eigenvalue
// orders across blocks can pass 2^64), so all exponent bookkeeping in the
// attack uses arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

inline unsigned bit_length(const BigInt& v) { return v == 0 ? 0 : boost::multiprecision::msb(v) + 1; }
inline bool test_bit(const BigInt& v, unsigned i) { return boost::multiprecision::bit_test(v, i); }
inline unsigned bit_length(uint64_t v) {
  unsigned n = 0;
  while (v) {
    ++n;
    v >>= 1;
  }
  return n;
}
inline bool test_bit(uint64_t v, unsigned i) { return (v >> i) & 1; }

}  // namespace grdlog
