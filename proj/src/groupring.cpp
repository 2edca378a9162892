#include "grdlog/groupring.hpp"

#include <stdexcept>

#include "grdlog/blocklift.hpp"
#include "grdlog/irreps.hpp"

namespace grdlog {

GRElem gr_add(const GRElem& x, const GRElem& y) {
  GRElem r;
  for (int i = 0; i < S5::kOrder; ++i) {
    uint8_t s = static_cast<uint8_t>(x.a[static_cast<size_t>(i)] + y.a[static_cast<size_t>(i)]);
    r.a[static_cast<size_t>(i)] = s >= 7 ? static_cast<uint8_t>(s - 7) : s;
  }
  return r;
}

GRElem gr_sub(const GRElem& x, const GRElem& y) {
  GRElem r;
  for (int i = 0; i < S5::kOrder; ++i) {
    uint8_t s = static_cast<uint8_t>(x.a[static_cast<size_t>(i)] + 7 - y.a[static_cast<size_t>(i)]);
    r.a[static_cast<size_t>(i)] = s >= 7 ? static_cast<uint8_t>(s - 7) : s;
  }
  return r;
}

GRElem gr_neg(const GRElem& x) {
  GRElem r;
  for (int i = 0; i < S5::kOrder; ++i)
    r.a[static_cast<size_t>(i)] = x.a[static_cast<size_t>(i)] == 0
                                      ? 0
                                      : static_cast<uint8_t>(7 - x.a[static_cast<size_t>(i)]);
  return r;
}

GRElem gr_scale(F7 s, const GRElem& x) {
  GRElem r;
  for (int i = 0; i < S5::kOrder; ++i)
    r.a[static_cast<size_t>(i)] = static_cast<uint8_t>(x.a[static_cast<size_t>(i)] * s.val() % 7);
  return r;
}

GRElem gr_mul(const GRElem& x, const GRElem& y) {
  const S5& s5 = S5::instance();
  // Dense 120x120 convolution against the precomputed composition table.
  // Accumulators stay below 120 * 36, one reduction at the end.
  std::array<uint16_t, S5::kOrder> acc{};
  for (int g = 0; g < S5::kOrder; ++g) {
    const uint16_t xv = x.a[static_cast<size_t>(g)];
    if (!xv) continue;
    const auto& row = s5.comp_row(g);
    for (int h = 0; h < S5::kOrder; ++h)
      acc[row[static_cast<size_t>(h)]] += static_cast<uint16_t>(xv * y.a[static_cast<size_t>(h)]);
  }
  GRElem r;
  for (int i = 0; i < S5::kOrder; ++i) r.a[static_cast<size_t>(i)] = static_cast<uint8_t>(acc[static_cast<size_t>(i)] % 7);
  return r;
}

GRElem random_grelem(Rng& rng) {
  GRElem r;
  for (auto& v : r.a) v = static_cast<uint8_t>(uniform_below(rng, 7));
  return r;
}

GRMat3 GRMat3::identity() {
  GRMat3 m;
  for (int i = 0; i < 3; ++i) m.at(i, i) = GRElem::identity();
  return m;
}

GRMat3 grmat_add(const GRMat3& x, const GRMat3& y) {
  GRMat3 r;
  for (int i = 0; i < 9; ++i) r.e[static_cast<size_t>(i)] = gr_add(x.e[static_cast<size_t>(i)], y.e[static_cast<size_t>(i)]);
  return r;
}

GRMat3 grmat_mul(const GRMat3& x, const GRMat3& y) {
  GRMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      GRElem acc = gr_mul(x.at(i, 0), y.at(0, j));
      acc = gr_add(acc, gr_mul(x.at(i, 1), y.at(1, j)));
      r.at(i, j) = gr_add(acc, gr_mul(x.at(i, 2), y.at(2, j)));
    }
  return r;
}

namespace {

template <class Int>
GRMat3 grmat_pow_impl(const GRMat3& x, const Int& n) {
  GRMat3 r = GRMat3::identity();
  const unsigned bits = bit_length(n);
  for (unsigned i = bits; i-- > 0;) {
    r = grmat_mul(r, r);
    if (test_bit(n, i)) r = grmat_mul(r, x);
  }
  return r;
}

}  // namespace

GRMat3 grmat_pow(const GRMat3& x, uint64_t n) { return grmat_pow_impl(x, n); }

GRMat3 grmat_pow(const GRMat3& x, const BigInt& n) {
  if (n < 0) throw std::invalid_argument("grmat_pow: negative exponent");
  return grmat_pow_impl(x, n);
}

GRMat3 random_grmat(Rng& rng, GRSampleMode mode) {
  constexpr int kMaxTries = 1000;
  for (int tries = 0; tries < kMaxTries; ++tries) {
    GRMat3 m;
    for (auto& entry : m.e) entry = random_grelem(rng);
    if (mode == GRSampleMode::kAny) return m;
    const bool invertible = all_blocks_invertible(lift_phi(IrrepTable::standard(), m));
    if (mode == GRSampleMode::kAllBlocksInvertible ? invertible : !invertible) return m;
  }
  throw std::runtime_error("random_grmat: resampling cap of 1000 exceeded");
}

GRMat3 random_grmat(uint64_t seed, GRSampleMode mode) {
  Rng rng(seed);
  return random_grmat(rng, mode);
}

GRMat3 random_grmat(uint64_t seed, bool invertible_hint) {
  return random_grmat(seed, invertible_hint ? GRSampleMode::kAllBlocksInvertible : GRSampleMode::kAny);
}

}  // namespace grdlog
