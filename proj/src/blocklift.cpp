#include "grdlog/blocklift.hpp"

#include "grdlog/matlin.hpp"

namespace grdlog {

BlockMat BlockMat::identity() {
  const F7Field k;
  BlockMat m;
  for (int c = 0; c < 7; ++c) m.blocks[static_cast<size_t>(c)] = FMat::identity(k, kSizes[static_cast<size_t>(c)]);
  return m;
}

DSum7 wedderburn_f(const IrrepTable& table, const GRElem& x) {
  const F7Field k;
  DSum7 acc;
  for (int c = 0; c < 7; ++c)
    acc[static_cast<size_t>(c)] = FMat::zeros(k, kIrrepDims[static_cast<size_t>(c)], kIrrepDims[static_cast<size_t>(c)]);
  for (int g = 0; g < S5::kOrder; ++g) {
    const uint8_t coeff = x.a[static_cast<size_t>(g)];
    if (!coeff) continue;
    const F7 s = F7::from_raw(coeff);
    const DSum7& img = table.at(g);
    for (int c = 0; c < 7; ++c) {
      FMat& dst = acc[static_cast<size_t>(c)];
      const FMat& src = img[static_cast<size_t>(c)];
      for (int i = 0; i < dst.rows(); ++i)
        for (int j = 0; j < dst.cols(); ++j) dst.at(i, j) += s * src.at(i, j);
    }
  }
  return acc;
}

BlockMat lift_phi(const IrrepTable& table, const GRMat3& x) {
  const F7Field k;
  BlockMat out;
  for (int c = 0; c < 7; ++c)
    out.blocks[static_cast<size_t>(c)] =
        FMat::zeros(k, BlockMat::kSizes[static_cast<size_t>(c)], BlockMat::kSizes[static_cast<size_t>(c)]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const DSum7 f = wedderburn_f(table, x.at(i, j));
      for (int c = 0; c < 7; ++c) {
        const int d = kIrrepDims[static_cast<size_t>(c)];
        FMat& dst = out.blocks[static_cast<size_t>(c)];
        for (int r = 0; r < d; ++r)
          for (int col = 0; col < d; ++col) dst.at(i * d + r, j * d + col) = f[static_cast<size_t>(c)].at(r, col);
      }
    }
  return out;
}

BlockMat block_mul(const BlockMat& a, const BlockMat& b) {
  const F7Field k;
  BlockMat r;
  for (int c = 0; c < 7; ++c)
    r.blocks[static_cast<size_t>(c)] = mat_mul(k, a.blocks[static_cast<size_t>(c)], b.blocks[static_cast<size_t>(c)]);
  return r;
}

namespace {

template <class Int>
BlockMat block_pow_impl(const BlockMat& a, const Int& e) {
  const F7Field k;
  BlockMat r;
  for (int c = 0; c < 7; ++c)
    r.blocks[static_cast<size_t>(c)] = mat_pow(k, a.blocks[static_cast<size_t>(c)], e);
  return r;
}

}  // namespace

BlockMat block_pow(const BlockMat& a, uint64_t e) { return block_pow_impl(a, e); }
BlockMat block_pow(const BlockMat& a, const BigInt& e) { return block_pow_impl(a, e); }

bool all_blocks_invertible(const BlockMat& m) {
  const F7Field k;
  for (int c = 0; c < 7; ++c)
    if (rank_of(k, m.blocks[static_cast<size_t>(c)]) != BlockMat::kSizes[static_cast<size_t>(c)]) return false;
  return true;
}

int wedderburn_rank(const IrrepTable& table) {
  const F7Field k;
  // Column g = image of the basis element delta_g, flattened across the
  // seven components (1+1+16+16+25+25+36 = 120 rows).
  FMat m(120, S5::kOrder, k.zero());
  for (int g = 0; g < S5::kOrder; ++g) {
    int row = 0;
    const DSum7& img = table.at(g);
    for (int c = 0; c < 7; ++c)
      for (int i = 0; i < kIrrepDims[static_cast<size_t>(c)]; ++i)
        for (int j = 0; j < kIrrepDims[static_cast<size_t>(c)]; ++j)
          m.at(row++, g) = img[static_cast<size_t>(c)].at(i, j);
  }
  return rank_of(k, m);
}

IsoReport verify_iso(const IrrepTable& table, uint64_t seed) {
  IsoReport report;
  Rng rng(seed);

  report.f_multiplicative = true;
  for (int t = 0; t < 500; ++t) {
    const GRElem x = random_grelem(rng), y = random_grelem(rng);
    const DSum7 lhs = wedderburn_f(table, gr_mul(x, y));
    const DSum7 fx = wedderburn_f(table, x), fy = wedderburn_f(table, y);
    const F7Field k;
    for (int c = 0; c < 7; ++c)
      if (!(lhs[static_cast<size_t>(c)] == mat_mul(k, fx[static_cast<size_t>(c)], fy[static_cast<size_t>(c)]))) {
        report.f_multiplicative = false;
        report.failures.push_back("f(x y) != f(x) f(y) at trial " + std::to_string(t));
        break;
      }
    if (!report.f_multiplicative) break;
  }

  report.phi_multiplicative = true;
  for (int t = 0; t < 100; ++t) {
    GRMat3 x, y;
    for (auto& e : x.e) e = random_grelem(rng);
    for (auto& e : y.e) e = random_grelem(rng);
    if (!(lift_phi(table, grmat_mul(x, y)) == block_mul(lift_phi(table, x), lift_phi(table, y)))) {
      report.phi_multiplicative = false;
      report.failures.push_back("lift(X Y) != lift(X) lift(Y) at trial " + std::to_string(t));
      break;
    }
  }

  int dim_sum = 0;
  for (int d : kIrrepDims) dim_sum += d * d;
  report.dimension_identity = dim_sum == S5::kOrder;
  if (!report.dimension_identity) report.failures.push_back("sum of squared dimensions != 120");

  report.rank = wedderburn_rank(table);
  report.full_rank = report.rank == S5::kOrder;
  if (!report.full_rank)
    report.failures.push_back("linear map has rank " + std::to_string(report.rank) + ", expected 120");
  return report;
}

}  // namespace grdlog
