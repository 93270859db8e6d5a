#pragma once

// Degree formulas for discriminants of several forms and for
// multihomogeneous discriminants. All arithmetic is over exact integers.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "disclab/error.hpp"

namespace disclab {

/// The variety of (m+1)-tuples of forms in `num_vars` variables with
/// degrees d_0..d_m whose common zero set has a rank-deficient point.
struct DiscriminantSpec {
  unsigned num_vars = 0;
  std::vector<unsigned> degrees;
};

struct MultiHomogSpec {
  std::vector<unsigned> group_dims;
  std::vector<unsigned> group_degrees;
};

/// Sum of all degree-k monomials evaluated at a.
inline mpz_class complete_symmetric(unsigned k, const std::vector<mpz_class>& a) {
  if (a.empty()) throw Error(ErrorKind::EmptyList, "complete symmetric polynomial of no arguments");
  // h[j] = S_j over the prefix processed so far.
  std::vector<mpz_class> h(k + 1, 0);
  h[0] = 1;
  for (const auto& x : a)
    for (unsigned j = 1; j <= k; ++j) h[j] += x * h[j - 1];
  return h[k];
}

inline mpz_class complete_symmetric(unsigned k, const std::vector<long>& a) {
  std::vector<mpz_class> z(a.begin(), a.end());
  return complete_symmetric(k, z);
}

namespace detail {

inline void check_spec(const DiscriminantSpec& s) {
  if (s.degrees.empty()) throw Error(ErrorKind::EmptyList, "empty degree list");
  if (s.num_vars == 0) throw Error(ErrorKind::DimensionMismatch, "need at least one variable");
  if (s.degrees.size() > s.num_vars)
    throw Error(ErrorKind::DimensionMismatch, std::to_string(s.degrees.size()) + " forms exceed " +
                                                  std::to_string(s.num_vars) + " variables");
  bool big = false;
  for (auto d : s.degrees) {
    if (d == 0) throw Error(ErrorKind::DegreeTooSmall, "degrees must be positive");
    big = big || d > 1;
  }
  if (!big) throw Error(ErrorKind::AllDegreesOne, "all degrees equal one: not a hypersurface in general");
}

}  // namespace detail

/// Degree of the discriminant in the coefficients of f_k:
/// prod_{i != k} d_i * S_{n-m}(d_0-1, .., d_k-1, d_k-1, .., d_m-1).
inline mpz_class disc_degree_in_fk(const DiscriminantSpec& s, std::size_t k) {
  detail::check_spec(s);
  if (k >= s.degrees.size())
    throw Error(ErrorKind::IndexOutOfRange, "form index " + std::to_string(k) + " out of range");
  const unsigned n = s.num_vars - 1;
  const unsigned m = static_cast<unsigned>(s.degrees.size() - 1);
  mpz_class prod = 1;
  std::vector<mpz_class> args;
  for (std::size_t i = 0; i < s.degrees.size(); ++i) {
    if (i != k) prod *= s.degrees[i];
    args.emplace_back(s.degrees[i] - 1);
    if (i == k) args.emplace_back(s.degrees[i] - 1);
  }
  return prod * complete_symmetric(n - m, args);
}

inline mpz_class disc_total_degree(const DiscriminantSpec& s) {
  detail::check_spec(s);
  mpz_class t = 0;
  for (std::size_t k = 0; k < s.degrees.size(); ++k) t += disc_degree_in_fk(s, k);
  return t;
}

/// d_1...d_n * sum 1/d_k, the total degree of the resultant of n forms.
inline mpz_class resultant_total_degree(const std::vector<unsigned>& degrees) {
  mpz_class t = 0;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    mpz_class p = 1;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      if (i != k) p *= degrees[i];
    t += p;
  }
  return t;
}

/// Truncated multivariate power series with exponent j < dims[j] in z_j,
/// stored densely with the first variable varying slowest.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<unsigned> dims) : dims_(std::move(dims)) {
    std::size_t sz = 1;
    for (auto d : dims_) sz *= d;
    c_.assign(sz, 0);
  }

  std::size_t size() const { return c_.size(); }
  const std::vector<unsigned>& dims() const { return dims_; }
  mpz_class& operator[](std::size_t i) { return c_[i]; }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }

  std::vector<unsigned> exponents(std::size_t flat) const {
    std::vector<unsigned> e(dims_.size());
    for (std::size_t j = dims_.size(); j-- > 0;) {
      e[j] = static_cast<unsigned>(flat % dims_[j]);
      flat /= dims_[j];
    }
    return e;
  }

  /// Flat index, or size() when some exponent falls outside the window.
  std::size_t flat(const std::vector<unsigned>& e) const {
    std::size_t f = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      if (e[j] >= dims_[j]) return c_.size();
      f = f * dims_[j] + e[j];
    }
    return f;
  }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    TruncatedSeries r(dims_);
    for (std::size_t a = 0; a < c_.size(); ++a) {
      if (c_[a] == 0) continue;
      auto ea = exponents(a);
      for (std::size_t b = 0; b < o.c_.size(); ++b) {
        if (o.c_[b] == 0) continue;
        auto eb = o.exponents(b);
        for (std::size_t j = 0; j < ea.size(); ++j) eb[j] += ea[j];
        auto f = r.flat(eb);
        if (f < r.size()) r.c_[f] += c_[a] * o.c_[b];
      }
    }
    return r;
  }

  /// Multiplicative inverse; requires a unit constant term of +-1.
  TruncatedSeries inverse() const {
    if (c_[0] != 1 && c_[0] != -1) throw Error(ErrorKind::DimensionMismatch, "series constant term is not a unit");
    TruncatedSeries q(dims_);
    // Coefficients with a smaller flat index are componentwise predecessors
    // or incomparable, so increasing flat order is a valid schedule.
    for (std::size_t a = 0; a < c_.size(); ++a) {
      auto ea = exponents(a);
      mpz_class s = a == 0 ? mpz_class(1) : mpz_class(0);
      for (std::size_t b = 1; b < c_.size(); ++b) {
        if (c_[b] == 0) continue;
        auto eb = exponents(b);
        bool le = true;
        for (std::size_t j = 0; j < eb.size() && le; ++j) le = eb[j] <= ea[j];
        if (!le) continue;
        for (std::size_t j = 0; j < eb.size(); ++j) eb[j] = ea[j] - eb[j];
        s -= c_[b] * q.c_[flat(eb)];
      }
      q.c_[a] = s * c_[0];
    }
    return q;
  }

 private:
  std::vector<unsigned> dims_;
  std::vector<mpz_class> c_;
};

/// P(z) = prod_j (1+z_j) - sum_j d_j z_j prod_{i != j} (1+z_i), truncated.
inline TruncatedSeries multihomog_base_series(const MultiHomogSpec& s) {
  TruncatedSeries p(s.group_dims);
  const std::size_t r = s.group_dims.size();
  for (std::size_t a = 0; a < p.size(); ++a) {
    auto e = p.exponents(a);
    bool square_free = true;
    for (auto x : e) square_free = square_free && x <= 1;
    if (!square_free) continue;
    // Coefficient of z^S (S = support): 1 from the product, minus d_j for
    // every j in S from the second sum.
    mpz_class c = 1;
    for (std::size_t j = 0; j < r; ++j)
      if (e[j]) c -= s.group_degrees[j];
    p[a] = c;
  }
  return p;
}

inline void check_multihomog(const MultiHomogSpec& s) {
  if (s.group_dims.empty()) throw Error(ErrorKind::EmptyList, "no variable groups");
  if (s.group_dims.size() != s.group_degrees.size())
    throw Error(ErrorKind::GroupMismatch, "group dimension and degree lists differ in length");
  unsigned total = 0;
  for (std::size_t j = 0; j < s.group_dims.size(); ++j) {
    if (s.group_dims[j] == 0) throw Error(ErrorKind::DimensionMismatch, "empty variable group");
    if (s.group_degrees[j] == 0) throw Error(ErrorKind::DegreeTooSmall, "group degrees must be positive");
    total += s.group_dims[j];
  }
  const long slack = static_cast<long>(total) - static_cast<long>(s.group_dims.size());
  for (std::size_t j = 0; j < s.group_dims.size(); ++j)
    if (s.group_degrees[j] == 1 && 2 * (static_cast<long>(s.group_dims[j]) - 1) > slack)
      throw Error(ErrorKind::HypersurfaceConditionViolated,
                  "group " + std::to_string(j + 1) + " of degree one is too large for a hypersurface");
}

/// Degree of the multihomogeneous discriminant: the coefficient of
/// z_1^{n_1-1}...z_r^{n_r-1} in P(z)^{-2}.
inline mpz_class multihomog_disc_degree(const MultiHomogSpec& s) {
  check_multihomog(s);
  TruncatedSeries q = multihomog_base_series(s).inverse();
  TruncatedSeries q2 = q * q;
  return q2[q2.size() - 1];
}

}  // namespace disclab
