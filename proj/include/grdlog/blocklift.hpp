#pragma once

#include <array>
#include <string>
#include <vector>

#include "grdlog/groupring.hpp"
#include "grdlog/irreps.hpp"

namespace grdlog {

/// Image of a 3x3 group-ring matrix under the block lift: seven square
/// matrices over F7, one per representation component, of three times the
/// component dimension.
struct BlockMat {
  static constexpr std::array<int, 7> kSizes = {3, 3, 12, 12, 15, 15, 18};

  std::array<FMat, 7> blocks;

  static BlockMat identity();
  bool operator==(const BlockMat&) const = default;
};

/// F7-linear extension of the representation map: componentwise sum of
/// coefficient-scaled representation matrices. Linear and multiplicative,
/// and injective (the seven components together span all 120 dimensions).
DSum7 wedderburn_f(const IrrepTable& table, const GRElem& x);

/// The induced map on 3x3 group-ring matrices: block c is the 3d x 3d matrix
/// whose (i,j) sub-block of size d is component c of f applied to entry
/// (i,j). Sub-blocks sit at rows [i*d, (i+1)*d), columns [j*d, (j+1)*d).
BlockMat lift_phi(const IrrepTable& table, const GRMat3& x);

BlockMat block_mul(const BlockMat& a, const BlockMat& b);
BlockMat block_pow(const BlockMat& a, uint64_t e);
BlockMat block_pow(const BlockMat& a, const BigInt& e);

bool all_blocks_invertible(const BlockMat& m);

/// Rank of the linear map behind wedderburn_f, assembled as a 120x120 matrix
/// over F7 (basis image per column). Full rank 120 makes it an isomorphism.
int wedderburn_rank(const IrrepTable& table);

struct IsoReport {
  bool f_multiplicative = false;    // f(x y) = f(x) f(y) on random pairs
  bool phi_multiplicative = false;  // lift(X Y) = lift(X) lift(Y) on random pairs
  bool dimension_identity = false;  // 1+1+16+16+25+25+36 = 120
  int rank = 0;
  bool full_rank = false;
  std::vector<std::string> failures;
  bool all_ok() const { return f_multiplicative && phi_multiplicative && dimension_identity && full_rank; }
};

/// Seeded spot-check that the lift really is an algebra isomorphism:
/// multiplicativity of f (500 pairs) and of the block lift (100 pairs), the
/// dimension identity, and the rank-120 kernel probe.
IsoReport verify_iso(const IrrepTable& table, uint64_t seed);

}  // namespace grdlog
