#pragma once

#include <cstdint>
#include <stdexcept>

#include "grdlog/rng.hpp"

namespace grdlog {

/// Residue mod 7. Always stored reduced.
class F7 {
 public:
  constexpr F7() : v_(0) {}
  constexpr explicit F7(int64_t x) : v_(static_cast<uint8_t>(((x % 7) + 7) % 7)) {}

  constexpr uint8_t val() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr F7 operator+(F7 a, F7 b) { return from_raw(static_cast<uint8_t>((a.v_ + b.v_) % 7)); }
  friend constexpr F7 operator-(F7 a, F7 b) { return from_raw(static_cast<uint8_t>((a.v_ + 7 - b.v_) % 7)); }
  friend constexpr F7 operator*(F7 a, F7 b) { return from_raw(static_cast<uint8_t>(a.v_ * b.v_ % 7)); }
  constexpr F7 operator-() const { return from_raw(v_ == 0 ? 0 : static_cast<uint8_t>(7 - v_)); }

  F7& operator+=(F7 o) { return *this = *this + o; }
  F7& operator-=(F7 o) { return *this = *this - o; }
  F7& operator*=(F7 o) { return *this = *this * o; }

  constexpr bool operator==(const F7&) const = default;

  /// Multiplicative inverse; zero has none.
  F7 inv() const {
    if (v_ == 0) throw std::domain_error("F7: inverse of zero");
    return from_raw(kInv[v_]);
  }

  static constexpr F7 from_raw(uint8_t r) {
    F7 f;
    f.v_ = r;
    return f;
  }

 private:
  static constexpr uint8_t kInv[7] = {0, 1, 4, 5, 2, 3, 6};

  uint8_t v_;
};

inline F7 f7_pow(F7 a, uint64_t e) {
  F7 r(1);
  while (e) {
    if (e & 1) r *= a;
    a *= a;
    e >>= 1;
  }
  return r;
}

inline F7 random_f7(Rng& rng) { return F7::from_raw(static_cast<uint8_t>(uniform_below(rng, 7))); }

/// Stateless field context for F7 so generic linear algebra can treat the
/// base field and its extensions uniformly.
struct F7Field {
  using Elem = F7;

  F7 zero() const { return F7(); }
  F7 one() const { return F7(1); }
  F7 add(F7 a, F7 b) const { return a + b; }
  F7 sub(F7 a, F7 b) const { return a - b; }
  F7 mul(F7 a, F7 b) const { return a * b; }
  F7 neg(F7 a) const { return -a; }
  F7 inv(F7 a) const { return a.inv(); }
  bool is_zero(F7 a) const { return a.is_zero(); }
  bool eq(F7 a, F7 b) const { return a == b; }
  F7 random_elem(Rng& rng) const { return random_f7(rng); }
};

}  // namespace grdlog
