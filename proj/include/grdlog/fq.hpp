#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "grdlog/poly.hpp"
#include "grdlog/rng.hpp"

namespace grdlog {

/// Element of F_{7^d}: the reduced representative's coefficients, lowest
/// degree first, always exactly d entries. Meaningful only together with the
/// FqField that produced it.
struct FqElem {
  std::vector<uint8_t> c;
  bool operator==(const FqElem&) const = default;
};

/// The field F_{7^d} = F7[x]/(modulus). Immutable after construction and
/// safely shareable across threads; every operation is a pure function.
///
/// Construction verifies that the modulus is irreducible and factors the
/// multiplicative group order 7^d - 1 (needed by element orders and
/// Pohlig-Hellman). Any monic irreducible works as the modulus; fields used
/// for serialization are the canonical ones from find_irreducible.
class FqField {
 public:
  using Elem = FqElem;

  explicit FqField(PolyF7 modulus);

  /// Shared instance over find_irreducible(degree). Cached per degree.
  static const FqField& canonical(int degree);

  int degree() const { return d_; }
  const PolyF7& modulus() const { return modulus_; }
  uint64_t group_order() const { return group_order_; }  // 7^d - 1
  const std::vector<std::pair<uint64_t, int>>& group_order_factorization() const {
    return order_factorization_;
  }

  FqElem zero() const { return FqElem{std::vector<uint8_t>(static_cast<size_t>(d_), 0)}; }
  FqElem one() const { return from_f7(F7(1)); }
  /// The residue class of the variable: the canonical root of the modulus.
  FqElem gen() const;
  FqElem from_f7(F7 v) const;
  FqElem from_poly(const PolyF7& p) const;  // reduces mod the modulus
  PolyF7 to_poly(const FqElem& a) const;

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem inv(const FqElem& a) const;  // domain error on zero
  FqElem pow(const FqElem& a, uint64_t e) const;
  FqElem scale(F7 s, const FqElem& a) const;

  bool is_zero(const FqElem& a) const;
  bool eq(const FqElem& a, const FqElem& b) const { return a == b; }

  FqElem random_elem(Rng& rng) const;
  FqElem random_nonzero(Rng& rng) const;

  uint64_t elem_hash(const FqElem& a) const;

 private:
  int d_;
  PolyF7 modulus_;
  uint64_t group_order_;
  std::vector<std::pair<uint64_t, int>> order_factorization_;
  // reduction_[i] = coefficients of x^(d+i) mod modulus, for i in [0, d-1).
  std::vector<std::vector<uint8_t>> reduction_;
};

}  // namespace grdlog
