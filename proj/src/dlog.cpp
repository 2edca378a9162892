#include "grdlog/dlog.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "grdlog/errors.hpp"
#include "grdlog/intfactor.hpp"

namespace grdlog {

uint64_t element_order(const FqField& K, const FqElem& a) {
  if (K.is_zero(a)) throw std::domain_error("element_order: zero element");
  uint64_t t = K.group_order();
  for (auto [p, e] : K.group_order_factorization()) {
    for (int i = 0; i < e; ++i) {
      if (t % p != 0) break;
      if (!K.eq(K.pow(a, t / p), K.one())) break;
      t /= p;
    }
  }
  return t;
}

namespace {

uint64_t invmod_u64(uint64_t a, uint64_t m) {
  // Extended Euclid; m < 2^62 here so signed arithmetic is safe.
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("invmod_u64: not invertible");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

// Open-addressing table of (hash, exponent) for the baby steps. False hash
// matches are resolved by the caller with an exact element compare, so
// distinct entries may share a hash.
class BabyTable {
 public:
  explicit BabyTable(uint64_t entries) {
    size_t cap = 16;
    while (cap < 2 * entries) cap <<= 1;
    slots_.assign(cap, Slot{});
  }

  void insert(uint64_t h, uint32_t idx) {
    size_t mask = slots_.size() - 1;
    size_t i = h & mask;
    while (slots_[i].idx != kEmpty) i = (i + 1) & mask;
    slots_[i] = Slot{h, idx};
  }

  template <class Fn>
  void for_each_match(uint64_t h, Fn&& fn) const {
    size_t mask = slots_.size() - 1;
    size_t i = h & mask;
    while (slots_[i].idx != kEmpty) {
      if (slots_[i].h == h) fn(slots_[i].idx);
      i = (i + 1) & mask;
    }
  }

 private:
  static constexpr uint32_t kEmpty = 0xffffffffu;
  struct Slot {
    uint64_t h = 0;
    uint32_t idx = kEmpty;
  };
  std::vector<Slot> slots_;
};

// DLP in the subgroup generated by g of prime order p. Returns x in [0, p)
// with g^x = h, or -1 if h is not in <g>.
int64_t dlog_prime_bsgs(const FqField& K, const FqElem& g, const FqElem& h, uint64_t p) {
  const uint64_t m = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(p))));
  BabyTable table(m);
  std::vector<FqElem> babies;
  babies.reserve(m);
  FqElem cur = K.one();
  for (uint64_t j = 0; j < m; ++j) {
    table.insert(K.elem_hash(cur), static_cast<uint32_t>(j));
    babies.push_back(cur);
    cur = K.mul(cur, g);
  }
  const FqElem giant = K.inv(K.pow(g, m));  // g^-m
  FqElem y = h;
  for (uint64_t i = 0; i * m <= p + m; ++i) {
    int64_t found = -1;
    table.for_each_match(K.elem_hash(y), [&](uint32_t j) {
      if (found < 0 && K.eq(babies[j], y)) found = static_cast<int64_t>(j);
    });
    if (found >= 0)
      return static_cast<int64_t>((i * m + static_cast<uint64_t>(found)) % p);
    y = K.mul(y, giant);
  }
  return -1;
}

// Pollard rho for the same prime-order subproblem; only reachable when the
// baby table would exceed the cap. Seeded walk, bounded retries.
int64_t dlog_prime_rho(const FqField& K, const FqElem& g, const FqElem& h, uint64_t p,
                       const DlogParams& params) {
  if (K.eq(h, K.one())) return 0;
  struct State {
    FqElem x;
    uint64_t a, b;
  };
  for (int attempt = 0; attempt < params.rho_max_retries; ++attempt) {
    Rng rng(params.rho_seed + 0x10001ULL * static_cast<uint64_t>(attempt) + K.elem_hash(h));
    const uint64_t a0 = uniform_below(rng, p), b0 = uniform_below(rng, p);
    auto step = [&](const State& s) {
      switch (K.elem_hash(s.x) % 3) {
        case 0:
          return State{K.mul(s.x, g), (s.a + 1) % p, s.b};
        case 1:
          return State{K.mul(s.x, h), s.a, (s.b + 1) % p};
        default:
          return State{K.mul(s.x, s.x), s.a * 2 % p, s.b * 2 % p};
      }
    };
    State tort{K.mul(K.pow(g, a0), K.pow(h, b0)), a0, b0};
    State hare = step(tort);
    const uint64_t limit =
        32 * (static_cast<uint64_t>(std::sqrt(static_cast<double>(p))) + 64);
    uint64_t steps = 0;
    while (!K.eq(tort.x, hare.x) && steps < limit) {
      tort = step(tort);
      hare = step(step(hare));
      ++steps;
    }
    if (!K.eq(tort.x, hare.x)) continue;
    // g^(a1 - a2) = h^(b2 - b1); need b2 - b1 invertible mod p.
    const uint64_t bd = (hare.b + p - tort.b) % p;
    if (bd == 0) continue;
    const uint64_t ad = (tort.a + p - hare.a) % p;
    const uint64_t x = mulmod_u64(ad % p, invmod_u64(bd, p), p);
    if (K.eq(K.pow(g, x), h)) return static_cast<int64_t>(x);
  }
  return -1;
}

int64_t dlog_prime(const FqField& K, const FqElem& g, const FqElem& h, uint64_t p,
                   const DlogParams& params) {
  const uint64_t m = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(p))));
  if (m > params.bsgs_table_cap) return dlog_prime_rho(K, g, h, p, params);
  return dlog_prime_bsgs(K, g, h, p);
}

}  // namespace

CrtConstraint discrete_log(const FqField& K, const FqElem& base, const FqElem& target,
                           const DlogParams& params) {
  if (K.is_zero(base)) throw std::domain_error("discrete_log: zero base");
  if (K.is_zero(target)) throw NotInSubgroupError("discrete_log: zero target is not in the group");
  const uint64_t m = element_order(K, base);

  // Pohlig-Hellman: solve modulo each prime power dividing m, recombine by
  // CRT (moduli are coprime prime powers, all in 64 bits).
  uint64_t residue = 0, done = 1;
  for (auto [p, e_full] : int_factor(m)) {
    uint64_t pe = 1;
    for (int i = 0; i < e_full; ++i) pe *= p;
    const FqElem gamma = K.pow(base, m / pe);     // order pe
    const FqElem gamma_p = K.pow(gamma, pe / p);  // order p
    FqElem delta = K.pow(target, m / pe);
    uint64_t x = 0, shift = 1;
    for (int i = 0; i < e_full; ++i) {
      FqElem probe = K.pow(delta, pe / (shift * p));
      int64_t digit = dlog_prime(K, gamma_p, probe, p, params);
      if (digit < 0)
        throw NotInSubgroupError("discrete_log: target outside the subgroup (prime " +
                                 std::to_string(p) + ")");
      x += static_cast<uint64_t>(digit) * shift;
      delta = K.mul(delta, K.inv(K.pow(gamma, static_cast<uint64_t>(digit) * shift)));
      shift *= p;
    }
    const uint64_t t =
        mulmod_u64((x + pe - residue % pe) % pe, invmod_u64(done % pe, pe), pe);
    residue += done * t;
    done *= pe;
  }

  if (!K.eq(K.pow(base, residue), target))
    throw NotInSubgroupError("discrete_log: target is not a power of the base");
  return CrtConstraint{BigInt(residue), BigInt(m)};
}

CrtConstraint crt_combine(std::span<const CrtConstraint> constraints) {
  if (constraints.empty()) throw std::invalid_argument("crt_combine: empty constraint list");
  CrtConstraint acc = constraints[0];
  for (size_t i = 1; i < constraints.size(); ++i) {
    const CrtConstraint& c = constraints[i];
    // Extended gcd of the two moduli.
    BigInt g, u;
    {
      BigInt a = acc.modulus, b = c.modulus;
      BigInt x0 = 1, x1 = 0;
      while (b != 0) {
        BigInt q = a / b, r = a % b;
        a = b;
        b = r;
        BigInt nx = x0 - q * x1;
        x0 = x1;
        x1 = nx;
      }
      g = a;
      u = x0;  // u * acc.modulus = g  (mod c.modulus)
    }
    BigInt diff = c.residue - acc.residue;
    if (diff % g != 0)
      throw InconsistentSystemError("crt_combine: residues disagree on a shared factor");
    const BigInt m2g = c.modulus / g;
    BigInt step = (diff / g * u) % m2g;
    if (step < 0) step += m2g;
    CrtConstraint next;
    next.modulus = acc.modulus / g * c.modulus;
    next.residue = (acc.residue + acc.modulus * step) % next.modulus;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace grdlog
