#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "grdlog/dlog.hpp"
#include "grdlog/errors.hpp"
#include "grdlog/fq.hpp"
#include "grdlog/intfactor.hpp"
#include "grdlog/poly.hpp"

using namespace grdlog;

namespace {

// Test-side oracles, kept independent of the library code paths they check.

// Brute-force discrete log by stepping through powers.
int64_t dlog_by_enumeration(const FqField& k, const FqElem& base, const FqElem& target,
                            uint64_t bound) {
  FqElem cur = k.one();
  for (uint64_t e = 0; e < bound; ++e) {
    if (k.eq(cur, target)) return static_cast<int64_t>(e);
    cur = k.mul(cur, base);
  }
  return -1;
}

// Brute-force irreducibility for small degrees: trial division by every
// monic polynomial of degree 1..deg/2.
bool irreducible_by_trial_division(const PolyF7& f) {
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= 7;
    for (uint64_t k = 0; k < count; ++k) {
      std::vector<F7> c(static_cast<size_t>(d) + 1);
      uint64_t t = k;
      for (int i = 0; i < d; ++i) {
        c[static_cast<size_t>(i)] = F7(static_cast<int64_t>(t % 7));
        t /= 7;
      }
      c.back() = F7(1);
      if ((f % PolyF7(std::move(c))).is_zero()) return false;
    }
  }
  return f.degree() >= 1;
}

// The x^(7^k) gcd test, written against test-local power/gcd helpers so a
// library bug cannot hide itself. Used where trial division is too slow.
PolyF7 oracle_powmod7(PolyF7 b, const PolyF7& mod) {
  // b^7 mod `mod` by repeated squaring: 7 = 111b
  PolyF7 b2 = b * b % mod;
  PolyF7 b4 = b2 * b2 % mod;
  return b4 * b2 % mod * b % mod;
}

bool irreducible_by_frobenius_gcds(const PolyF7& f) {
  const int n = f.degree();
  PolyF7 h = PolyF7::x() % f;
  std::vector<PolyF7> frob{h};  // frob[k] = x^(7^k) mod f
  for (int k = 1; k <= n; ++k) frob.push_back(oracle_powmod7(frob.back(), f));
  if (!(frob[static_cast<size_t>(n)] == h)) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) prime = false;
    if (!prime) continue;
    if (poly_gcd(frob[static_cast<size_t>(n / q)] - PolyF7::x(), f).degree() != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("F7 arithmetic basics") {
  CHECK(F7(3) * F7(5) == F7(1));  // 15 mod 7
  CHECK(F7(1).inv() == F7(1));
  CHECK(F7(6) + F7(1) == F7(0));
  CHECK(-F7(0) == F7(0));
  CHECK_THROWS_AS(F7(0).inv(), std::domain_error);
  for (int a = 1; a < 7; ++a) CHECK(F7(a) * F7(a).inv() == F7(1));
}

TEST_CASE("polynomial division and gcd") {
  const PolyF7 a = PolyF7::from_ints({6, 0, 1});  // x^2 + 6 = x^2 - 1
  const PolyF7 b = PolyF7::from_ints({6, 1});     // x - 1
  auto [q, r] = PolyF7::divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == PolyF7::from_ints({1, 1}));  // x + 1
  CHECK(poly_gcd(a, b) == b.monic());
  CHECK_THROWS_AS(PolyF7::divmod(a, PolyF7()), std::domain_error);
}

TEST_CASE("poly_factor on pinned examples") {
  // x^2 - 1 = (x-1)(x+1)
  auto f1 = poly_factor(PolyF7::from_ints({6, 0, 1}));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].first == PolyF7::from_ints({1, 1}));  // x + 1
  CHECK(f1[0].second == 1);
  CHECK(f1[1].first == PolyF7::from_ints({6, 1}));  // x - 1 = x + 6
  CHECK(f1[1].second == 1);

  // x^2 + 1 is irreducible over F7: exhaustive root search finds no root.
  const PolyF7 x2p1 = PolyF7::from_ints({1, 0, 1});
  for (int c = 0; c < 7; ++c) CHECK(!x2p1.eval(F7(c)).is_zero());
  auto f2 = poly_factor(x2p1);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].first == x2p1);
  CHECK(f2[0].second == 1);

  // (x-2)^3
  const PolyF7 xm2 = PolyF7::from_ints({5, 1});
  auto f3 = poly_factor(xm2 * xm2 * xm2);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].first == xm2);
  CHECK(f3[0].second == 3);
}

TEST_CASE("poly_factor round-trip on random monic polynomials") {
  Rng rng(0x5eedfULL);
  for (int trial = 0; trial < 100; ++trial) {
    const int deg = 1 + static_cast<int>(uniform_below(rng, 20));
    std::vector<F7> c(static_cast<size_t>(deg) + 1);
    for (auto& v : c) v = random_f7(rng);
    c.back() = F7(1);
    const PolyF7 p{std::move(c)};
    auto factors = poly_factor(p);
    PolyF7 prod = PolyF7::constant(F7(1));
    for (const auto& [g, m] : factors) {
      CHECK(g.is_monic());
      CHECK(irreducible_by_frobenius_gcds(g));
      for (int i = 0; i < m; ++i) prod = prod * g;
    }
    CHECK(prod == p);
  }
}

TEST_CASE("find_irreducible is deterministic and correct") {
  CHECK(find_irreducible(1) == PolyF7::x());
  // First monic quadratic in enumeration order with no root in F7.
  const PolyF7 q = find_irreducible(2);
  CHECK(q == PolyF7::from_ints({1, 0, 1}));
  for (int c = 0; c < 7; ++c) CHECK(!q.eval(F7(c)).is_zero());
  CHECK(irreducible_by_trial_division(q));

  for (int d : {3, 4, 5, 6}) {
    const PolyF7 p = find_irreducible(d);
    CHECK(p.degree() == d);
    CHECK(p.is_monic());
    CHECK(irreducible_by_trial_division(p));
  }
  const PolyF7 big = find_irreducible(18);
  CHECK(big.degree() == 18);
  CHECK(irreducible_by_frobenius_gcds(big));
}

TEST_CASE("int_factor on pinned examples and 7^d - 1") {
  using FV = std::vector<std::pair<uint64_t, int>>;
  CHECK(int_factor(48) == FV{{2, 4}, {3, 1}});
  CHECK(int_factor(2400) == FV{{2, 5}, {3, 1}, {5, 2}});  // 7^4 - 1
  CHECK(int_factor(1) == FV{});

  uint64_t n = 1;
  for (int d = 1; d <= 18; ++d) {
    n *= 7;
    uint64_t prod = 1;
    for (auto [p, e] : int_factor(n - 1)) {
      CHECK(is_prime_u64(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n - 1);
  }
}

TEST_CASE("FqField construction checks its modulus") {
  CHECK_THROWS_AS(FqField(PolyF7::from_ints({6, 0, 1})), std::invalid_argument);  // (x-1)(x+1)
  CHECK_THROWS_AS(FqField(PolyF7::from_ints({1, 0, 2})), std::invalid_argument);  // not monic
  const FqField k(find_irreducible(3));
  CHECK(k.degree() == 3);
  CHECK(k.group_order() == 342);
  uint64_t prod = 1;
  for (auto [p, e] : k.group_order_factorization())
    for (int i = 0; i < e; ++i) prod *= p;
  CHECK(prod == 342);
}

TEST_CASE("field axioms and Frobenius fixed point across degrees") {
  for (int d : {1, 2, 4, 5, 6, 12, 15, 18}) {
    const FqField& k = FqField::canonical(d);
    Rng rng(0xf1e1dULL + static_cast<uint64_t>(d));
    const int pairs = 200;
    for (int t = 0; t < pairs; ++t) {
      const FqElem a = k.random_elem(rng), b = k.random_elem(rng), c = k.random_elem(rng);
      CHECK(k.eq(k.add(a, b), k.add(b, a)));
      CHECK(k.eq(k.mul(a, b), k.mul(b, a)));
      CHECK(k.eq(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c))));
      CHECK(k.eq(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c))));
      if (!k.is_zero(a)) CHECK(k.eq(k.mul(a, k.inv(a)), k.one()));
    }
    // a^(7^d) = a: iterate the Frobenius d times.
    for (int t = 0; t < 20; ++t) {
      const FqElem a = k.random_elem(rng);
      FqElem frob = a;
      for (int i = 0; i < d; ++i) frob = k.pow(frob, 7);
      CHECK(k.eq(frob, a));
    }
  }
}

TEST_CASE("element_order on pinned examples and divisor property") {
  const FqField& f7 = FqField::canonical(1);
  CHECK(element_order(f7, f7.one()) == 1);
  CHECK(element_order(f7, f7.from_f7(F7(3))) == 6);  // 3,2,6,4,5,1
  CHECK(element_order(f7, f7.from_f7(F7(6))) == 2);  // 36 = 1 mod 7
  CHECK_THROWS_AS(element_order(f7, f7.zero()), std::domain_error);

  for (int d = 1; d <= 6; ++d) {
    const FqField& k = FqField::canonical(d);
    Rng rng(0x0d7e4ULL + static_cast<uint64_t>(d));
    for (int t = 0; t < 100; ++t) {
      const FqElem a = k.random_nonzero(rng);
      const uint64_t ord = element_order(k, a);
      CHECK(k.eq(k.pow(a, ord), k.one()));
      for (auto [p, e] : int_factor(ord)) CHECK(!k.eq(k.pow(a, ord / p), k.one()));
    }
  }
}

TEST_CASE("discrete_log pinned examples in F7") {
  const FqField& k = FqField::canonical(1);
  const FqElem three = k.from_f7(F7(3)), six = k.from_f7(F7(6));
  // Exhaustive search over exponents 0..5 puts 6 at exponent 3.
  CHECK(dlog_by_enumeration(k, three, six, 6) == 3);
  const CrtConstraint c = discrete_log(k, three, six);
  CHECK(c.residue == 3);
  CHECK(c.modulus == 6);

  const CrtConstraint ident = discrete_log(k, three, k.one());
  CHECK(ident.residue == 0);
  CHECK(ident.modulus == 6);

  const CrtConstraint self = discrete_log(k, three, three);
  CHECK(self.residue == 1);

  CHECK_THROWS_AS(discrete_log(k, k.zero(), three), std::domain_error);
  // 3 generates all of F7*, so there is no unreachable target in degree 1;
  // order-2 base 6 cannot reach 3.
  CHECK_THROWS_AS(discrete_log(k, six, three), NotInSubgroupError);
}

TEST_CASE("discrete_log against random self-generated instances") {
  for (int d = 1; d <= 6; ++d) {
    const FqField& k = FqField::canonical(d);
    Rng rng(0xd106ULL * static_cast<uint64_t>(d) + 17);
    for (int t = 0; t < 100; ++t) {
      const FqElem base = k.random_nonzero(rng);
      const uint64_t e = uniform_below(rng, 2 * k.group_order());
      const FqElem target = k.pow(base, e);
      const CrtConstraint c = discrete_log(k, base, target);
      CHECK(c.modulus == element_order(k, base));
      CHECK(c.residue == BigInt(e) % c.modulus);
      CHECK(k.eq(k.pow(base, c.residue.convert_to<uint64_t>()), target));
      // Cross-check small orders against the enumeration oracle.
      const uint64_t ord = element_order(k, base);
      if (ord <= 5000)
        CHECK(dlog_by_enumeration(k, base, target, ord) ==
              static_cast<int64_t>(c.residue.convert_to<uint64_t>()));
    }
  }
}

TEST_CASE("discrete_log exercises the rho fallback when the table cap is tiny") {
  const FqField& k = FqField::canonical(6);  // order 117648 = 2^4 * 3^2 * 19 * 43
  DlogParams params;
  params.bsgs_table_cap = 2;  // forces rho for every prime factor above 4
  Rng rng(0x4904ULL);
  for (int t = 0; t < 25; ++t) {
    const FqElem base = k.random_nonzero(rng);
    const uint64_t e = uniform_below(rng, k.group_order());
    const CrtConstraint c = discrete_log(k, base, k.pow(base, e), params);
    CHECK(c.residue == BigInt(e) % c.modulus);
  }
}

TEST_CASE("crt_combine pinned examples") {
  using C = CrtConstraint;
  // Exhaustive search over 0..14 solves {2 mod 3, 3 mod 5} at 8.
  {
    int64_t expect = -1;
    for (int64_t x = 0; x < 15; ++x)
      if (x % 3 == 2 && x % 5 == 3) {
        expect = x;
        break;
      }
    CHECK(expect == 8);
    const C combined = crt_combine(std::vector<C>{{2, 3}, {3, 5}});
    CHECK(combined.residue == 8);
    CHECK(combined.modulus == 15);
  }
  const C single = crt_combine(std::vector<C>{{4, 9}});
  CHECK(single.residue == 4);
  CHECK(single.modulus == 9);
  CHECK_THROWS_AS(crt_combine(std::vector<C>{{1, 2}, {0, 2}}), InconsistentSystemError);
  CHECK_THROWS_AS(crt_combine(std::vector<C>{}), std::invalid_argument);
}

TEST_CASE("crt_combine with shared factors and random consistency") {
  using C = CrtConstraint;
  // 10 = 2*5, 15 = 3*5: consistent when residues agree mod 5.
  const C combined = crt_combine(std::vector<C>{{7, 10}, {12, 15}});
  CHECK(combined.modulus == 30);
  CHECK(combined.residue == 27);
  CHECK_THROWS_AS(crt_combine(std::vector<C>{{7, 10}, {13, 15}}), InconsistentSystemError);

  Rng rng(0xc47ULL);
  for (int t = 0; t < 200; ++t) {
    const uint64_t x = uniform_below(rng, 1'000'000);
    std::vector<C> cs;
    for (int i = 0; i < 4; ++i) {
      const uint64_t m = 2 + uniform_below(rng, 60);
      cs.push_back(C{BigInt(x % m), BigInt(m)});
    }
    const C out = crt_combine(cs);
    for (const auto& c : cs) CHECK(out.residue % c.modulus == c.residue);
    CHECK(BigInt(x) % out.modulus == out.residue);
  }
}

TEST_CASE("big-field discrete logs with self-generated exponents") {
  for (int d : {12, 15, 18}) {
    const FqField& k = FqField::canonical(d);
    Rng rng(0xb16ULL + static_cast<uint64_t>(d));
    for (int t = 0; t < 5; ++t) {
      const FqElem base = k.random_nonzero(rng);
      const uint64_t e = uniform_below(rng, k.group_order());
      const CrtConstraint c = discrete_log(k, base, k.pow(base, e));
      CHECK(c.residue == BigInt(e) % c.modulus);
    }
  }
}
