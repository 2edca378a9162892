#pragma once

#include <array>
#include <cstdint>

#include "grdlog/bigint.hpp"
#include "grdlog/f7.hpp"
#include "grdlog/perm.hpp"
#include "grdlog/rng.hpp"

namespace grdlog {

/// Element of the group ring F7[S5]: one coefficient per group element,
/// indexed by the canonical S5 enumeration.
struct GRElem {
  std::array<uint8_t, S5::kOrder> a{};

  static GRElem zero() { return GRElem{}; }
  /// The basis element for one permutation.
  static GRElem delta(int group_index) {
    GRElem e;
    e.a[static_cast<size_t>(group_index)] = 1;
    return e;
  }
  /// Multiplicative identity: the basis element at the identity permutation.
  static GRElem identity() { return delta(S5::instance().identity_index()); }

  bool is_zero() const {
    for (uint8_t v : a)
      if (v) return false;
    return true;
  }
  bool operator==(const GRElem&) const = default;
};

GRElem gr_add(const GRElem& x, const GRElem& y);
GRElem gr_sub(const GRElem& x, const GRElem& y);
GRElem gr_neg(const GRElem& x);
GRElem gr_scale(F7 s, const GRElem& x);
/// Convolution product: (x*y)[g] = sum over h*k = g of x[h]*y[k].
GRElem gr_mul(const GRElem& x, const GRElem& y);
GRElem random_grelem(Rng& rng);

/// 3x3 matrix over the group ring: the protocol's public object.
struct GRMat3 {
  std::array<GRElem, 9> e;

  GRElem& at(int r, int c) { return e[static_cast<size_t>(3 * r + c)]; }
  const GRElem& at(int r, int c) const { return e[static_cast<size_t>(3 * r + c)]; }

  static GRMat3 zero() { return GRMat3{}; }
  static GRMat3 identity();

  bool operator==(const GRMat3&) const = default;
};

GRMat3 grmat_add(const GRMat3& x, const GRMat3& y);
/// Row-by-column product; entry products keep the left factor from x
/// (entries do not commute).
GRMat3 grmat_mul(const GRMat3& x, const GRMat3& y);
GRMat3 grmat_pow(const GRMat3& x, uint64_t n);
GRMat3 grmat_pow(const GRMat3& x, const BigInt& n);

enum class GRSampleMode {
  kAny,                  // uniform i.i.d. coefficients
  kAllBlocksInvertible,  // resample until every lifted block is invertible
  kSomeSingularBlock,    // resample until at least one lifted block is singular
};

/// Uniform random matrix, optionally filtered through the block lift
/// (invertibility of a group-ring matrix is decided by its lifted blocks).
/// Throws after 1000 rejected samples.
GRMat3 random_grmat(Rng& rng, GRSampleMode mode);
GRMat3 random_grmat(uint64_t seed, GRSampleMode mode);
/// Hint flag form: true filters for an all-blocks-invertible sample.
GRMat3 random_grmat(uint64_t seed, bool invertible_hint);

}  // namespace grdlog
