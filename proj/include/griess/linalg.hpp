#pragma once

#include "griess/ratfun.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace griess {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {
inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const RatFun& r) { return r.is_zero(); }
inline bool is_zero(const Poly& p) { return p.is_zero(); }
}  // namespace detail

// Determinant of a square polynomial matrix by Bareiss fraction-free elimination.
inline Poly bareiss_determinant(Matrix<Poly> a) {
  const std::size_t n = a.size();
  if (n == 0) return Poly(1);
  Poly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Poly();
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Solves the overdetermined system A x = b (A polynomial, rows >= cols) by
// Bareiss elimination on the augmented matrix. The system must have full
// column rank and be consistent; b may carry rational-function entries,
// whose denominators are cleared first.
struct FractionFreeResult {
  std::vector<RatFun> x;
  Poly pivot_product;  // last Bareiss pivot: a nonzero multiple of the system determinant
};

inline FractionFreeResult solve_fraction_free(const Matrix<Poly>& a, const std::vector<RatFun>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw std::invalid_argument("dimension mismatch in linear solve");
  Poly common(1);
  for (auto& v : b)
    if (!v.is_zero()) common = divexact(common * v.den(), gcd(common, v.den()));
  Matrix<Poly> m(rows, std::vector<Poly>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = (b[i] * RatFun(common)).num();
  }
  Poly prev(1);
  for (std::size_t k = 0; k < cols; ++k) {
    std::size_t p = k;
    while (p < rows && m[p][k].is_zero()) ++p;
    if (p == rows) throw std::runtime_error("underdetermined system: rank deficient at column " + std::to_string(k));
    std::swap(m[k], m[p]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j <= cols; ++j)
        m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  for (std::size_t i = cols; i < rows; ++i)
    if (!m[i][cols].is_zero()) throw std::runtime_error("inconsistent system at row " + std::to_string(i));
  std::vector<RatFun> x(cols);
  for (std::size_t kk = cols; kk-- > 0;) {
    RatFun s(m[kk][cols]);
    for (std::size_t j = kk + 1; j < cols; ++j)
      if (!m[kk][j].is_zero()) s -= RatFun(m[kk][j]) * x[j];
    x[kk] = s / RatFun(m[kk][kk]);
  }
  for (auto& v : x) v = v / RatFun(common);
  return {x, prev};
}

// Gaussian elimination over a field. Returns the reduced row echelon form
// and the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t k = 0; k < cols && r < rows; ++k) {
    std::size_t p = r;
    while (p < rows && detail::is_zero(m[p][k])) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    T inv = T(1) / m[r][k];
    for (std::size_t j = k; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || detail::is_zero(m[i][k])) continue;
      T f = m[i][k];
      for (std::size_t j = k; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(k);
    ++r;
  }
  return pivots;
}

// Unique solution of a square or overdetermined consistent system over a field.
template <class T>
std::vector<T> solve_field(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Matrix<T> m(rows, std::vector<T>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  auto piv = row_reduce(m);
  if (!piv.empty() && piv.back() == cols) throw std::runtime_error("inconsistent linear system");
  if (piv.size() < cols) throw std::runtime_error("singular linear system");
  std::vector<T> x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[piv[i]] = m[i][cols];
  return x;
}

template <class T>
Matrix<T> inverse_field(const Matrix<T>& a) {
  const std::size_t n = a.size();
  Matrix<T> m(n, std::vector<T>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = T(1);
  }
  auto piv = row_reduce(m);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::runtime_error("singular matrix");
  Matrix<T> inv(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

// Particular solution plus a kernel basis of A x = b over Q; nullopt if inconsistent.
struct AffineSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
};

inline std::optional<AffineSolution> solve_affine(const Matrix<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Matrix<Rational> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  auto piv = row_reduce(m);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  AffineSolution s;
  s.particular.assign(cols, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) s.particular[piv[i]] = m[i][cols];
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    s.kernel.push_back(v);
  }
  return s;
}

}  // namespace griess
