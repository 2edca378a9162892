#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "grdlog/f7.hpp"

namespace grdlog {

/// Dense univariate polynomial over F7, coefficients lowest degree first.
/// Canonical form: no trailing zero coefficients (the zero polynomial is the
/// empty coefficient list, degree -1).
class PolyF7 {
 public:
  PolyF7() = default;
  explicit PolyF7(std::vector<F7> coeffs) : c_(std::move(coeffs)) { trim(); }

  static PolyF7 constant(F7 v);
  static PolyF7 x();
  static PolyF7 monomial(int deg, F7 lead);
  /// Convenience: coefficients as plain ints, lowest degree first.
  static PolyF7 from_ints(std::initializer_list<int> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == F7(1); }
  bool is_monic() const { return !c_.empty() && c_.back() == F7(1); }
  F7 coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F7(); }
  F7 leading() const { return c_.empty() ? F7() : c_.back(); }
  const std::vector<F7>& coeffs() const { return c_; }

  F7 eval(F7 at) const;
  PolyF7 derivative() const;
  PolyF7 monic() const;

  friend PolyF7 operator+(const PolyF7& a, const PolyF7& b);
  friend PolyF7 operator-(const PolyF7& a, const PolyF7& b);
  friend PolyF7 operator*(const PolyF7& a, const PolyF7& b);
  PolyF7 operator-() const;
  bool operator==(const PolyF7&) const = default;

  /// Euclidean division; divisor must be nonzero. Returns (quotient, remainder).
  static std::pair<PolyF7, PolyF7> divmod(const PolyF7& a, const PolyF7& b);

  /// Total order used wherever factor lists need a canonical ordering:
  /// by degree, then coefficient lists high-to-low.
  static bool less(const PolyF7& a, const PolyF7& b);

  uint64_t content_hash() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F7> c_;
};

inline PolyF7 operator%(const PolyF7& a, const PolyF7& b) { return PolyF7::divmod(a, b).second; }
inline PolyF7 operator/(const PolyF7& a, const PolyF7& b) { return PolyF7::divmod(a, b).first; }

PolyF7 poly_gcd(PolyF7 a, PolyF7 b);  // monic gcd, gcd(0,0) = 0
PolyF7 poly_powmod(const PolyF7& base, uint64_t e, const PolyF7& mod);

/// Rabin irreducibility test. Degree-0 polynomials are not irreducible.
bool poly_is_irreducible(const PolyF7& f);

/// First monic irreducible of degree d when monic polynomials are enumerated
/// in lexicographic coefficient order (constant coefficient varying fastest).
/// Deterministic, so serialized extension-field elements are portable.
PolyF7 find_irreducible(int d);

/// Complete factorization into monic irreducibles with multiplicities, sorted
/// canonically. Squarefree decomposition, then distinct-degree splitting, then
/// Cantor-Zassenhaus equal-degree splitting with a deterministic seeded stream.
/// The leading unit is dropped: the product of the factors equals monic(p).
std::vector<std::pair<PolyF7, int>> poly_factor(const PolyF7& p);

}  // namespace grdlog
