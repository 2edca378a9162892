#include "grdlog/fq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "grdlog/hash.hpp"
#include "grdlog/intfactor.hpp"

namespace grdlog {

FqField::FqField(PolyF7 modulus) : d_(modulus.degree()), modulus_(std::move(modulus)) {
  if (!modulus_.is_monic()) throw std::invalid_argument("FqField: modulus must be monic");
  if (d_ < 1 || d_ > 20) throw std::invalid_argument("FqField: degree out of supported range [1,20]");
  if (!poly_is_irreducible(modulus_)) throw std::invalid_argument("FqField: modulus is reducible");
  group_order_ = 1;
  for (int i = 0; i < d_; ++i) group_order_ *= 7;  // 7^18 still fits in 64 bits
  group_order_ -= 1;
  order_factorization_ = int_factor(group_order_);
  uint64_t check = 1;
  for (auto [p, e] : order_factorization_)
    for (int i = 0; i < e; ++i) check *= p;
  if (check != group_order_) throw std::logic_error("FqField: order factorization mismatch");

  reduction_.resize(static_cast<size_t>(d_ > 0 ? d_ - 1 : 0));
  PolyF7 r = PolyF7::monomial(d_, F7(1)) % modulus_;
  for (auto& row : reduction_) {
    row.assign(static_cast<size_t>(d_), 0);
    for (int i = 0; i <= r.degree(); ++i) row[static_cast<size_t>(i)] = r.coeff(i).val();
    r = r * PolyF7::x() % modulus_;
  }
}

const FqField& FqField::canonical(int degree) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const FqField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it == cache.end())
    it = cache.emplace(degree, std::make_unique<const FqField>(find_irreducible(degree))).first;
  return *it->second;
}

FqElem FqField::gen() const { return from_poly(PolyF7::x()); }

FqElem FqField::from_f7(F7 v) const {
  FqElem e = zero();
  if (d_ > 0) e.c[0] = v.val();
  return e;
}

FqElem FqField::from_poly(const PolyF7& p) const {
  PolyF7 r = p % modulus_;
  FqElem e = zero();
  for (int i = 0; i <= r.degree(); ++i) e.c[static_cast<size_t>(i)] = r.coeff(i).val();
  return e;
}

PolyF7 FqField::to_poly(const FqElem& a) const {
  std::vector<F7> c(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = F7::from_raw(a.c[i]);
  return PolyF7(std::move(c));
}

FqElem FqField::add(const FqElem& a, const FqElem& b) const {
  FqElem r = a;
  for (int i = 0; i < d_; ++i) {
    uint8_t s = static_cast<uint8_t>(r.c[static_cast<size_t>(i)] + b.c[static_cast<size_t>(i)]);
    r.c[static_cast<size_t>(i)] = s >= 7 ? static_cast<uint8_t>(s - 7) : s;
  }
  return r;
}

FqElem FqField::sub(const FqElem& a, const FqElem& b) const {
  FqElem r = a;
  for (int i = 0; i < d_; ++i) {
    uint8_t s = static_cast<uint8_t>(r.c[static_cast<size_t>(i)] + 7 - b.c[static_cast<size_t>(i)]);
    r.c[static_cast<size_t>(i)] = s >= 7 ? static_cast<uint8_t>(s - 7) : s;
  }
  return r;
}

FqElem FqField::neg(const FqElem& a) const {
  FqElem r = a;
  for (auto& v : r.c) v = v == 0 ? 0 : static_cast<uint8_t>(7 - v);
  return r;
}

FqElem FqField::mul(const FqElem& a, const FqElem& b) const {
  // Schoolbook convolution into 16-bit lanes, then one reduction sweep using
  // the precomputed rows for x^(d+i) mod modulus.
  const size_t n = static_cast<size_t>(d_);
  uint32_t conv[40] = {0};  // d <= 20 in this artifact
  for (size_t i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    uint32_t ai = a.c[i];
    for (size_t j = 0; j < n; ++j) conv[i + j] += ai * b.c[j];
  }
  uint32_t low[40] = {0};
  for (size_t i = 0; i < n; ++i) low[i] = conv[i];
  for (size_t i = 2 * n - 2 + 1; i-- > n;) {
    uint32_t v = conv[i] % 7;
    if (v == 0) continue;
    const auto& row = reduction_[i - n];
    for (size_t j = 0; j < n; ++j) low[j] += v * row[j];
  }
  FqElem r = zero();
  for (size_t i = 0; i < n; ++i) r.c[i] = static_cast<uint8_t>(low[i] % 7);
  return r;
}

FqElem FqField::inv(const FqElem& a) const {
  if (is_zero(a)) throw std::domain_error("FqField: inverse of zero");
  // Extended Euclid over F7[x].
  PolyF7 r0 = modulus_, r1 = to_poly(a);
  PolyF7 t0, t1 = PolyF7::constant(F7(1));
  while (!r1.is_zero()) {
    auto [q, r2] = PolyF7::divmod(r0, r1);
    PolyF7 t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd is a nonzero constant (modulus irreducible, a nonzero).
  return from_poly(t0 * PolyF7::constant(r0.coeff(0).inv()));
}

FqElem FqField::pow(const FqElem& a, uint64_t e) const {
  FqElem r = one();
  FqElem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FqElem FqField::scale(F7 s, const FqElem& a) const {
  FqElem r = a;
  for (auto& v : r.c) v = static_cast<uint8_t>(v * s.val() % 7);
  return r;
}

bool FqField::is_zero(const FqElem& a) const {
  for (uint8_t v : a.c)
    if (v) return false;
  return true;
}

FqElem FqField::random_elem(Rng& rng) const {
  FqElem r = zero();
  for (auto& v : r.c) v = static_cast<uint8_t>(uniform_below(rng, 7));
  return r;
}

FqElem FqField::random_nonzero(Rng& rng) const {
  for (;;) {
    FqElem r = random_elem(rng);
    if (!is_zero(r)) return r;
  }
}

uint64_t FqField::elem_hash(const FqElem& a) const {
  return fnv1a64(a.c.data(), a.c.size());
}

}  // namespace grdlog
