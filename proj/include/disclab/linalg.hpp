#pragma once

#include <utility>
#include <vector>

#include "disclab/poly.hpp"

namespace disclab {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free Bareiss determinant over the polynomial ring. Every division
/// is exact by Sylvester's identity.
inline Polynomial det_bareiss(Matrix<Polynomial> m, const VarSetPtr& vars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(vars, 1);
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  bool negate = false;
  Polynomial prev = Polynomial::constant(vars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      // Prefer the sparsest nonzero pivot below.
      std::size_t best = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero() && (best == n || m[i][k].size() < m[best][k].size())) best = i;
      if (best == n) return Polynomial(vars);
      std::swap(m[k], m[best]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(num, prev);
      }
      m[i][k] = Polynomial(vars);
    }
    prev = m[k][k];
  }
  Polynomial d = m[n - 1][n - 1];
  return negate ? -d : d;
}

/// Gaussian elimination over the rationals.
inline Rational det_rational(Matrix<Rational> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

/// Submatrix with the given rows and columns.
template <typename T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix<T> out;
  out.reserve(rows.size());
  for (auto r : rows) {
    std::vector<T> row;
    row.reserve(cols.size());
    for (auto c : cols) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace disclab
