#include "grdlog/intfactor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace grdlog {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

constexpr uint64_t kTrialBound = 1'000'000;

// Pollard rho, Brent variant. n must be composite, odd, with no factor below
// the trial-division bound. Returns a nontrivial factor.
uint64_t pollard_brent(uint64_t n) {
  for (uint64_t c = 1;; ++c) {
    auto step = [n, c](uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
    uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const uint64_t batch = 128;
    while (g == 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = step(y);
      uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        uint64_t lim = std::min(batch, r - k);
        for (uint64_t i = 0; i < lim; ++i) {
          y = step(y);
          uint64_t diff = x > y ? x - y : y - x;
          q = diff == 0 ? q : mulmod_u64(q, diff, n);
        }
        g = std::gcd(q, n);
        k += lim;
      }
      r <<= 1;
    }
    if (g == n) {
      // Batched gcd overshot; redo stepwise from the saved point.
      g = 1;
      while (g == 1) {
        ys = step(ys);
        uint64_t diff = x > ys ? x - ys : ys - x;
        g = std::gcd(diff, n);
      }
    }
    if (g != n) return g;
    // Degenerate cycle for this c; retry with the next increment.
  }
}

void factor_into(uint64_t n, std::map<uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> int_factor(uint64_t n) {
  if (n == 0) throw std::domain_error("int_factor: zero");
  std::map<uint64_t, int> acc;
  for (uint64_t p = 2; p <= 3 && n > 1; ++p)
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  for (uint64_t p = 5; p <= kTrialBound && p * p <= n; p += 6) {
    for (uint64_t q : {p, p + 2})
      while (n % q == 0) {
        ++acc[q];
        n /= q;
      }
  }
  if (n > 1) {
    if (n <= kTrialBound * kTrialBound) {
      // Whatever survived trial division up to 1e6 and is below 1e12 is prime.
      ++acc[n];
    } else {
      factor_into(n, acc);
    }
  }
  return {acc.begin(), acc.end()};
}

}  // namespace grdlog
