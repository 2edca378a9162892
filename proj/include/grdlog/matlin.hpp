#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "grdlog/bigint.hpp"
#include "grdlog/errors.hpp"
#include "grdlog/f7.hpp"
#include "grdlog/fq.hpp"

namespace grdlog {

/// Dense matrix over a field context K (F7Field or FqField). Entries are
/// value types; all operations are pure functions taking the context.
template <class K>
class Mat {
 public:
  using E = typename K::Elem;

  Mat() = default;
  Mat(int rows, int cols, const E& fill)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

  static Mat zeros(const K& k, int rows, int cols) { return Mat(rows, cols, k.zero()); }
  static Mat identity(const K& k, int n) {
    Mat m(n, n, k.zero());
    for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  E& at(int r, int c) { return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
  const E& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
  }

  bool operator==(const Mat&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<E> a_;
};

template <class K>
Mat<K> mat_add(const K& k, const Mat<K>& a, const Mat<K>& b) {
  Mat<K> r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = k.add(a.at(i, j), b.at(i, j));
  return r;
}

template <class K>
Mat<K> mat_sub(const K& k, const Mat<K>& a, const Mat<K>& b) {
  Mat<K> r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = k.sub(a.at(i, j), b.at(i, j));
  return r;
}

template <class K>
Mat<K> mat_scale(const K& k, const typename K::Elem& s, const Mat<K>& a) {
  Mat<K> r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = k.mul(s, a.at(i, j));
  return r;
}

template <class K>
Mat<K> mat_mul(const K& k, const Mat<K>& a, const Mat<K>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  Mat<K> r(a.rows(), b.cols(), k.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      const auto& ail = a.at(i, l);
      if (k.is_zero(ail)) continue;
      for (int j = 0; j < b.cols(); ++j)
        r.at(i, j) = k.add(r.at(i, j), k.mul(ail, b.at(l, j)));
    }
  return r;
}

template <class K>
std::vector<typename K::Elem> mat_vec(const K& k, const Mat<K>& a,
                                      const std::vector<typename K::Elem>& v) {
  std::vector<typename K::Elem> r(static_cast<size_t>(a.rows()), k.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r[static_cast<size_t>(i)] = k.add(r[static_cast<size_t>(i)], k.mul(a.at(i, j), v[static_cast<size_t>(j)]));
  return r;
}

/// Square-and-multiply; works for uint64_t and BigInt exponents.
template <class K, class Int>
Mat<K> mat_pow(const K& k, const Mat<K>& a, const Int& e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: non-square matrix");
  Mat<K> r = Mat<K>::identity(k, a.rows());
  const unsigned bits = bit_length(e);
  for (unsigned i = bits; i-- > 0;) {
    r = mat_mul(k, r, r);
    if (test_bit(e, i)) r = mat_mul(k, r, a);
  }
  return r;
}

template <class K>
Mat<K> transpose(const K& k, const Mat<K>& a) {
  Mat<K> r(a.cols(), a.rows(), k.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

template <class K>
struct RrefResult {
  Mat<K> mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Gauss-Jordan to reduced row echelon form. Pivot choice is the first
/// nonzero entry in each column, so results are deterministic.
template <class K>
RrefResult<K> rref(const K& k, Mat<K> m) {
  RrefResult<K> res;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!k.is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    const auto inv = k.inv(m.at(row, col));
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) = k.mul(inv, m.at(row, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || k.is_zero(m.at(i, col))) continue;
      const auto f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(row, j)));
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  res.mat = std::move(m);
  return res;
}

template <class K>
int rank_of(const K& k, const Mat<K>& m) {
  return rref(k, m).rank;
}

/// Kernel basis as columns, derived from the reduced echelon form: one basis
/// vector per free column, in ascending column order.
template <class K>
Mat<K> kernel_basis(const K& k, const Mat<K>& m) {
  RrefResult<K> r = rref(k, m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  const int nullity = m.cols() - r.rank;
  Mat<K> ker(m.cols(), nullity, k.zero());
  int out = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    ker.at(f, out) = k.one();
    for (int pr = 0; pr < r.rank; ++pr)
      ker.at(r.pivot_cols[static_cast<size_t>(pr)], out) = k.neg(r.mat.at(pr, f));
    ++out;
  }
  return ker;
}

/// Solve A X = B for X (columnwise). Returns nothing when inconsistent.
/// Free variables, if any, are set to zero.
template <class K>
std::optional<Mat<K>> solve_columns(const K& k, const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_columns: dimension mismatch");
  Mat<K> aug(a.rows(), a.cols() + b.cols(), k.zero());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  RrefResult<K> r = rref(k, std::move(aug));
  for (int c : r.pivot_cols)
    if (c >= a.cols()) return std::nullopt;  // a pivot in the RHS: inconsistent
  Mat<K> x(a.cols(), b.cols(), k.zero());
  for (int pr = 0; pr < static_cast<int>(r.pivot_cols.size()); ++pr) {
    const int pc = r.pivot_cols[static_cast<size_t>(pr)];
    for (int j = 0; j < b.cols(); ++j) x.at(pc, j) = r.mat.at(pr, a.cols() + j);
  }
  return x;
}

template <class K>
std::optional<Mat<K>> inverse(const K& k, const Mat<K>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square matrix");
  auto x = solve_columns(k, a, Mat<K>::identity(k, a.rows()));
  if (!x) return std::nullopt;
  // solve_columns is consistent for any full-rank a; reject rank-deficient a.
  if (rank_of(k, a) != a.rows()) return std::nullopt;
  return x;
}

/// Characteristic polynomial (monic, coefficients lowest degree first,
/// length n+1) via Hessenberg reduction with exact pivoting, then the
/// leading-principal-minor recurrence. Self-checks Cayley-Hamilton for the
/// sizes this artifact uses.
template <class K>
std::vector<typename K::Elem> char_poly(const K& k, Mat<K> h) {
  using E = typename K::Elem;
  if (h.rows() != h.cols()) throw std::invalid_argument("char_poly: non-square matrix");
  const int n = h.rows();
  const Mat<K> original = h;

  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (!k.is_zero(h.at(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(h.at(piv, c), h.at(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(h.at(r, piv), h.at(r, j + 1));
    }
    const E d_inv = k.inv(h.at(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      if (k.is_zero(h.at(i, j))) continue;
      const E f = k.mul(h.at(i, j), d_inv);
      for (int c = 0; c < n; ++c) h.at(i, c) = k.sub(h.at(i, c), k.mul(f, h.at(j + 1, c)));
      for (int r = 0; r < n; ++r) h.at(r, j + 1) = k.add(h.at(r, j + 1), k.mul(f, h.at(r, i)));
    }
  }

  // p[m] = charpoly of the leading m x m block.
  std::vector<std::vector<E>> p(static_cast<size_t>(n) + 1);
  p[0] = {k.one()};
  for (int m = 1; m <= n; ++m) {
    const auto& prev = p[static_cast<size_t>(m - 1)];
    std::vector<E> cur(static_cast<size_t>(m) + 1, k.zero());
    // (x - h[m-1][m-1]) * prev
    for (size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = k.add(cur[i + 1], prev[i]);
      cur[i] = k.sub(cur[i], k.mul(h.at(m - 1, m - 1), prev[i]));
    }
    E subdiag = k.one();
    for (int kk = m - 1; kk >= 1; --kk) {
      subdiag = k.mul(subdiag, h.at(kk, kk - 1));
      if (k.is_zero(subdiag)) break;
      const E coeff = k.mul(h.at(kk - 1, m - 1), subdiag);
      if (k.is_zero(coeff)) continue;
      const auto& pk = p[static_cast<size_t>(kk - 1)];
      for (size_t i = 0; i < pk.size(); ++i) cur[i] = k.sub(cur[i], k.mul(coeff, pk[i]));
    }
    p[static_cast<size_t>(m)] = std::move(cur);
  }

  std::vector<E> result = std::move(p[static_cast<size_t>(n)]);
  if (n <= 18) {
    // Cayley-Hamilton: evaluate on the original matrix by Horner.
    Mat<K> acc = Mat<K>::zeros(k, n, n);
    for (int i = n; i >= 0; --i) {
      acc = mat_mul(k, acc, original);
      for (int d = 0; d < n; ++d) acc.at(d, d) = k.add(acc.at(d, d), result[static_cast<size_t>(i)]);
    }
    if (!(acc == Mat<K>::zeros(k, n, n)))
      throw InternalError("char_poly: Cayley-Hamilton self-check failed");
  }
  return result;
}

/// Fitting decomposition data for a square matrix B over F7 (or any field):
/// the smallest k with rank(B^k) = rank(B^(k+1)), a basis of the column space
/// of B^k (the B-invariant "core" on which B is invertible), and B's action
/// on that basis.
template <class K>
struct FittingSplit {
  int index = 0;       // stabilization exponent k
  Mat<K> core_basis;   // n x r, columns span im(B^k)
  Mat<K> core_matrix;  // r x r, invertible restriction of B
  int core_dim = 0;
  bool nilpotent = false;  // core_dim == 0
};

template <class K>
FittingSplit<K> fitting_split(const K& k, const Mat<K>& b) {
  if (b.rows() != b.cols()) throw std::invalid_argument("fitting_split: non-square matrix");
  const int n = b.rows();
  FittingSplit<K> out;
  Mat<K> power = Mat<K>::identity(k, n);
  int prev_rank = n;
  int index = 0;
  for (int i = 1; i <= n + 1; ++i) {
    Mat<K> next = mat_mul(k, power, b);
    const int r = rank_of(k, next);
    if (r == prev_rank) {
      index = i - 1;
      break;
    }
    power = std::move(next);
    prev_rank = r;
  }
  out.index = index;

  RrefResult<K> red = rref(k, power);
  out.core_dim = red.rank;
  out.nilpotent = red.rank == 0;
  out.core_basis = Mat<K>(n, red.rank, k.zero());
  for (int j = 0; j < red.rank; ++j)
    for (int i = 0; i < n; ++i)
      out.core_basis.at(i, j) = power.at(i, red.pivot_cols[static_cast<size_t>(j)]);

  auto core = solve_columns(k, out.core_basis, mat_mul(k, b, out.core_basis));
  if (!core) throw InternalError("fitting_split: core subspace not B-invariant");
  out.core_matrix = std::move(*core);
  if (out.core_dim > 0 && rank_of(k, out.core_matrix) != out.core_dim)
    throw InternalError("fitting_split: core restriction is singular");
  return out;
}

/// Matrix of T restricted to the split's core subspace, expressed in the core
/// basis. Empty when the subspace is not T-invariant (the challenge is then
/// not a genuine power pair).
template <class K>
std::optional<Mat<K>> restrict_to(const K& k, const Mat<K>& t, const FittingSplit<K>& split) {
  return solve_columns(k, split.core_basis, mat_mul(k, t, split.core_basis));
}

/// Deterministic eigenvector: first reduced-echelon kernel vector of
/// (A - lambda I), normalized so its first nonzero coordinate is one.
/// Empty when lambda is not an eigenvalue.
template <class K>
std::optional<std::vector<typename K::Elem>> eigenvector(const K& k, const Mat<K>& a,
                                                         const typename K::Elem& lambda) {
  Mat<K> shifted = a;
  for (int i = 0; i < a.rows(); ++i) shifted.at(i, i) = k.sub(shifted.at(i, i), lambda);
  Mat<K> ker = kernel_basis(k, shifted);
  if (ker.cols() == 0) return std::nullopt;
  std::vector<typename K::Elem> v(static_cast<size_t>(ker.rows()), k.zero());
  for (int i = 0; i < ker.rows(); ++i) v[static_cast<size_t>(i)] = ker.at(i, 0);
  for (auto& e : v)
    if (!k.is_zero(e)) {
      const auto s = k.inv(e);
      for (auto& e2 : v) e2 = k.mul(s, e2);
      break;
    }
  return v;
}

/// Entrywise embedding of an F7 matrix into an extension field.
inline Mat<FqField> lift_mat(const FqField& kq, const Mat<F7Field>& a) {
  Mat<FqField> r(a.rows(), a.cols(), kq.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = kq.from_f7(a.at(i, j));
  return r;
}

template <class K>
Mat<K> random_mat(const K& k, Rng& rng, int rows, int cols) {
  Mat<K> r(rows, cols, k.zero());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(i, j) = k.random_elem(rng);
  return r;
}

}  // namespace grdlog
