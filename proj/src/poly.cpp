#include "grdlog/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "grdlog/hash.hpp"
#include "grdlog/rng.hpp"

namespace grdlog {

PolyF7 PolyF7::constant(F7 v) { return PolyF7(std::vector<F7>{v}); }

PolyF7 PolyF7::x() { return monomial(1, F7(1)); }

PolyF7 PolyF7::monomial(int deg, F7 lead) {
  std::vector<F7> c(static_cast<size_t>(deg) + 1);
  c.back() = lead;
  return PolyF7(std::move(c));
}

PolyF7 PolyF7::from_ints(std::initializer_list<int> coeffs) {
  std::vector<F7> c;
  c.reserve(coeffs.size());
  for (int v : coeffs) c.emplace_back(v);
  return PolyF7(std::move(c));
}

F7 PolyF7::eval(F7 at) const {
  F7 acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

PolyF7 PolyF7::derivative() const {
  if (c_.size() <= 1) return PolyF7();
  std::vector<F7> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = F7(static_cast<int64_t>(i)) * c_[i];
  return PolyF7(std::move(d));
}

PolyF7 PolyF7::monic() const {
  if (is_zero() || is_monic()) return *this;
  F7 s = leading().inv();
  std::vector<F7> c(c_);
  for (auto& v : c) v *= s;
  return PolyF7(std::move(c));
}

PolyF7 operator+(const PolyF7& a, const PolyF7& b) {
  std::vector<F7> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return PolyF7(std::move(c));
}

PolyF7 operator-(const PolyF7& a, const PolyF7& b) {
  std::vector<F7> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return PolyF7(std::move(c));
}

PolyF7 PolyF7::operator-() const {
  std::vector<F7> c(c_);
  for (auto& v : c) v = -v;
  return PolyF7(std::move(c));
}

PolyF7 operator*(const PolyF7& a, const PolyF7& b) {
  if (a.is_zero() || b.is_zero()) return PolyF7();
  std::vector<F7> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyF7(std::move(c));
}

std::pair<PolyF7, PolyF7> PolyF7::divmod(const PolyF7& a, const PolyF7& b) {
  if (b.is_zero()) throw std::domain_error("PolyF7: division by zero polynomial");
  if (a.degree() < b.degree()) return {PolyF7(), a};
  std::vector<F7> rem(a.c_);
  std::vector<F7> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const F7 lead_inv = b.leading().inv();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    F7 q = rem[static_cast<size_t>(k + b.degree())] * lead_inv;
    quo[static_cast<size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int i = 0; i <= b.degree(); ++i)
      rem[static_cast<size_t>(k + i)] -= q * b.c_[static_cast<size_t>(i)];
  }
  return {PolyF7(std::move(quo)), PolyF7(std::move(rem))};
}

bool PolyF7::less(const PolyF7& a, const PolyF7& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    uint8_t av = a.coeff(i).val(), bv = b.coeff(i).val();
    if (av != bv) return av < bv;
  }
  return false;
}

uint64_t PolyF7::content_hash() const {
  uint64_t h = kFnvOffset;
  for (F7 v : c_) h = fnv1a64_step(h, v.val());
  return h;
}

PolyF7 poly_gcd(PolyF7 a, PolyF7 b) {
  while (!b.is_zero()) {
    PolyF7 r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyF7 poly_powmod(const PolyF7& base, uint64_t e, const PolyF7& mod) {
  PolyF7 result = PolyF7::constant(F7(1)) % mod;
  PolyF7 b = base % mod;
  while (e) {
    if (e & 1) result = result * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return result;
}

namespace {

// x^(7^k) mod f for k = 1..degree, one Frobenius step at a time.
PolyF7 frobenius_power_x(const PolyF7& f, int k) {
  PolyF7 h = PolyF7::x() % f;
  for (int i = 0; i < k; ++i) h = poly_powmod(h, 7, f);
  return h;
}

}  // namespace

bool poly_is_irreducible(const PolyF7& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  // Rabin: x^(7^n) = x mod f, and gcd(x^(7^(n/q)) - x, f) = 1 for prime q | n.
  PolyF7 h = PolyF7::x() % f;
  std::vector<int> proper_ks;
  for (int q = 2; q <= n; ++q)
    if (n % q == 0) {
      bool prime = true;
      for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) prime = false;
      if (prime) proper_ks.push_back(n / q);
    }
  PolyF7 acc = h;
  int reached = 0;
  // Walk k upward, checking the gcd condition at each n/q on the way.
  std::sort(proper_ks.begin(), proper_ks.end());
  for (int k : proper_ks) {
    for (; reached < k; ++reached) acc = poly_powmod(acc, 7, f);
    if (poly_gcd(acc - PolyF7::x(), f).degree() != 0) return false;
  }
  for (; reached < n; ++reached) acc = poly_powmod(acc, 7, f);
  return acc == PolyF7::x() % f;
}

PolyF7 find_irreducible(int d) {
  if (d < 1) throw std::invalid_argument("find_irreducible: degree must be positive");
  // Monic candidates in lexicographic coefficient order; the counter's base-7
  // digits are the coefficients, constant term least significant.
  for (uint64_t k = 0;; ++k) {
    std::vector<F7> c(static_cast<size_t>(d) + 1);
    uint64_t t = k;
    for (int i = 0; i < d; ++i) {
      c[static_cast<size_t>(i)] = F7(static_cast<int64_t>(t % 7));
      t /= 7;
    }
    c.back() = F7(1);
    PolyF7 cand{std::move(c)};
    if (poly_is_irreducible(cand)) return cand;
  }
}

namespace {

uint64_t pow_u64(uint64_t b, int e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Distinct-degree split of a squarefree monic f: products of all irreducible
// factors of each degree.
std::vector<std::pair<PolyF7, int>> distinct_degree(PolyF7 f) {
  std::vector<std::pair<PolyF7, int>> parts;
  PolyF7 h = PolyF7::x() % f;
  int k = 0;
  while (f.degree() > 0) {
    ++k;
    if (2 * k > f.degree()) {
      parts.emplace_back(f, f.degree());
      break;
    }
    h = poly_powmod(h, 7, f);
    PolyF7 g = poly_gcd(h - PolyF7::x(), f);
    if (g.degree() > 0) {
      parts.emplace_back(g, k);
      f = f / g;
      h = h % f;
    }
  }
  return parts;
}

// Cantor-Zassenhaus equal-degree splitting: f is squarefree monic, a product
// of irreducibles all of degree d. Randomness is a deterministic stream seeded
// from the polynomial itself, so factorizations are reproducible.
void equal_degree(const PolyF7& f, int d, Rng& rng, std::vector<PolyF7>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const uint64_t exp = (pow_u64(7, d) - 1) / 2;
  for (;;) {
    std::vector<F7> rc(static_cast<size_t>(f.degree()));
    for (auto& v : rc) v = random_f7(rng);
    PolyF7 h{std::move(rc)};
    if (h.is_zero()) continue;
    PolyF7 g = poly_gcd(h, f);
    if (g.degree() == 0) {
      PolyF7 w = poly_powmod(h, exp, f) - PolyF7::constant(F7(1));
      g = poly_gcd(w, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

// Squarefree decomposition in characteristic 7. Returns (squarefree part,
// multiplicity) pairs; parts need not be irreducible yet.
void squarefree_parts(const PolyF7& f, int outer_mult, std::vector<std::pair<PolyF7, int>>& out) {
  PolyF7 fp = f.derivative();
  if (fp.is_zero()) {
    // f = g(x^7) = g(x)^7 over F7 (coefficients are Frobenius-fixed).
    std::vector<F7> g(static_cast<size_t>(f.degree() / 7) + 1);
    for (size_t i = 0; i < g.size(); ++i) g[i] = f.coeff(static_cast<int>(7 * i));
    squarefree_parts(PolyF7(std::move(g)), outer_mult * 7, out);
    return;
  }
  PolyF7 c = poly_gcd(f, fp);
  PolyF7 w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    PolyF7 y = poly_gcd(w, c);
    PolyF7 part = w / y;
    if (part.degree() > 0) out.emplace_back(part, i * outer_mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_parts(c, outer_mult, out);
}

}  // namespace

std::vector<std::pair<PolyF7, int>> poly_factor(const PolyF7& p) {
  if (p.is_zero()) throw std::domain_error("poly_factor: zero polynomial");
  PolyF7 f = p.monic();
  std::vector<std::pair<PolyF7, int>> result;
  if (f.degree() == 0) return result;

  std::vector<std::pair<PolyF7, int>> sf;
  squarefree_parts(f, 1, sf);
  Rng rng(0x7a5c0f7ULL ^ p.content_hash());
  for (const auto& [part, mult] : sf) {
    for (const auto& [dd, deg] : distinct_degree(part)) {
      std::vector<PolyF7> irr;
      equal_degree(dd, deg, rng, irr);
      for (auto& g : irr) result.emplace_back(std::move(g), mult);
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return PolyF7::less(a.first, b.first); });
  return result;
}

}  // namespace grdlog
