#pragma once

// Copositivity: the even substitution, support restrictions, the product of
// principal minors that contains the boundary of the copositive cone, and a
// numerical check by minimizing over the simplex.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disclab/linalg.hpp"
#include "disclab/poly.hpp"
#include "disclab/scan.hpp"

namespace disclab {

/// Symmetric n x n matrix with polynomial entries, upper triangle stored
/// row-major.
class SymMatrixParam {
 public:
  SymMatrixParam(std::size_t n, VarSetPtr vars)
      : n_(n), vars_(std::move(vars)), upper_(n * (n + 1) / 2, Polynomial(vars_)) {}

  std::size_t size() const { return n_; }
  const VarSetPtr& vars() const { return vars_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return upper_[slot(i, j)]; }

  void set(std::size_t i, std::size_t j, Polynomial p) {
    if (!same_vars(p.vars(), vars_)) throw Error(ErrorKind::VarSetMismatch, "matrix entry over a different variable set");
    upper_[slot(i, j)] = std::move(p);
  }

  Matrix<Polynomial> dense() const {
    Matrix<Polynomial> m(n_, std::vector<Polynomial>(n_, Polynomial(vars_)));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
    return m;
  }

  /// Simultaneous row/column permutation: entry (i,j) of the result is
  /// entry (perm[i], perm[j]) of this.
  SymMatrixParam permuted(const std::vector<std::size_t>& perm) const {
    SymMatrixParam out(n_, vars_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) out.set(i, j, (*this)(perm[i], perm[j]));
    return out;
  }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw Error(ErrorKind::IndexOutOfRange, "matrix index out of range");
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }

  std::size_t n_;
  VarSetPtr vars_;
  std::vector<Polynomial> upper_;
};

/// q_f: each variable in `over` (all when empty) replaced by its square.
inline Polynomial even_substitution(const Polynomial& f, std::span<const std::size_t> over = {}) {
  std::vector<bool> sq(f.vars()->size(), over.empty());
  for (auto v : over) sq.at(v) = true;
  std::vector<Polynomial::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    Monomial t = m;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (sq[i]) t.set(i, 2 * m[i]);
    out.emplace_back(std::move(t), c);
  }
  return Polynomial::from_terms(f.vars(), std::move(out));
}

/// f_I: the x-variables outside I set to zero. The result lives over the
/// variables x_I followed by every non-x variable of f.
inline Polynomial restrict_support(const Polynomial& f, const std::vector<std::size_t>& x_vars,
                                   const std::vector<std::size_t>& I) {
  if (I.empty()) throw Error(ErrorKind::EmptySupport, "support index set is empty");
  const auto& vs = *f.vars();
  std::vector<bool> is_x(vs.size(), false), keep(vs.size(), false);
  for (auto v : x_vars) is_x.at(v) = true;
  for (auto k : I) {
    if (k >= x_vars.size()) throw Error(ErrorKind::IndexOutOfRange, "support index out of range");
    keep[x_vars[k]] = true;
  }
  std::vector<std::string> names;
  std::map<std::size_t, Rational> zero;
  for (auto k : I) names.push_back(vs.name(x_vars[k]));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!is_x[i]) names.push_back(vs.name(i));
    else if (!keep[i]) zero.emplace(i, Rational(0));
  }
  return embed(specialize(f, zero), VarSet::make(std::move(names)));
}

/// x^T A x over variables named x1..xn prepended to A's variables.
inline Polynomial quadratic_form(const SymMatrixParam& A, const std::string& prefix = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < A.size(); ++i) names.push_back(prefix + std::to_string(i + 1));
  for (const auto& n : A.vars()->names()) names.push_back(n);
  auto vars = VarSet::make(names);
  Polynomial q(vars);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i; j < A.size(); ++j) {
      Polynomial e = embed(A(i, j), vars);
      Polynomial xij = Polynomial::variable(vars, i) * Polynomial::variable(vars, j);
      q += e * xij * Rational(i == j ? 1 : 2);
    }
  return q;
}

struct BoundaryPolynomial {
  /// (subset I in increasing order, det A(I,I)), ordered by subset bitmask.
  std::vector<std::pair<std::vector<std::size_t>, Polynomial>> factors;
  unsigned total_degree = 0;
  /// Product of the factors, present when total_degree <= 40.
  std::optional<Polynomial> expanded;
};

inline BoundaryPolynomial copositive_boundary_poly(const SymMatrixParam& A, unsigned expand_limit = 40) {
  const std::size_t n = A.size();
  if (n == 0) throw Error(ErrorKind::EmptySupport, "empty matrix");
  if (n > 6) throw Error(ErrorKind::DimensionTooLarge, std::to_string(n) + " x " + std::to_string(n) + " exceeds 6 x 6");
  auto M = A.dense();
  BoundaryPolynomial out;
  bool has_zero = false;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) I.push_back(i);
    Polynomial d = det_bareiss(submatrix(M, I, I), A.vars());
    if (d.is_zero()) has_zero = true;
    else out.total_degree += *d.degree();
    out.factors.emplace_back(std::move(I), std::move(d));
  }
  if (has_zero) {
    out.expanded = Polynomial(A.vars());
  } else if (out.total_degree <= expand_limit) {
    Polynomial p = Polynomial::constant(A.vars(), 1);
    for (const auto& [I, d] : out.factors) p *= d;
    out.expanded = std::move(p);
  }
  return out;
}

/// Value of the boundary product at a rational point of A's variables.
inline Rational evaluate_boundary(const BoundaryPolynomial& b, std::span<const Rational> pt) {
  Rational v(1);
  for (const auto& [I, d] : b.factors) v *= evaluate(d, pt);
  return v;
}

/// Copositivity of a numeric form by its minimum over the standard simplex.
inline Membership copositive_check(const Polynomial& f, double tol_band = 1e-4, const ScanOptions& opt = {}) {
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "copositivity check needs a form");
  Membership m;
  m.report = simplex_min(f, opt);
  m.margin = m.report.value;
  m.verdict = verdict_for(m.margin, tol_band);
  return m;
}

/// The matrix specialized at `at` (values for all of A's variables).
inline Membership copositive_check(const SymMatrixParam& A, const std::map<std::string, Rational>& at,
                                   double tol_band = 1e-4, const ScanOptions& opt = {}) {
  Polynomial q = quadratic_form(A);
  std::map<std::size_t, Rational> vals;
  for (const auto& [name, v] : at) vals.emplace(q.vars()->index(name), v);
  q = specialize(q, vals);
  std::vector<std::string> xs;
  for (std::size_t i = 0; i < A.size(); ++i) xs.push_back(q.vars()->name(i));
  return copositive_check(restrict_vars(q, xs), tol_band, opt);
}

}  // namespace disclab
