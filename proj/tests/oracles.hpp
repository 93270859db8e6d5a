#pragma once

// Independent reference implementations used to check the library. None of
// these call into the code under test beyond the polynomial container.

#include <gmpxx.h>

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "disclab/poly.hpp"

namespace oracle {

using disclab::Polynomial;
using disclab::Rational;

/// Determinant by permutation expansion (Leibniz). Fine up to n ~ 8.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  Rational sum = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    Rational t = (inv % 2) ? -1 : 1;
    for (std::size_t i = 0; i < n && t != 0; ++i) t *= m[i][p[i]];
    sum += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

/// Sylvester determinant from numeric coefficients, highest degree first.
inline Rational sylvester_numeric(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t i = 0; i <= df; ++i) m[r][r + i] = f[i];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t i = 0; i <= dg; ++i) m[dg + r][r + i] = g[i];
  return leibniz_det(m);
}

inline mpz_class binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline mpz_class ipow(long b, unsigned e) {
  mpz_class r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

/// Complete symmetric polynomial by enumerating exponent vectors.
inline mpz_class complete_symmetric_brute(unsigned k, const std::vector<long>& a) {
  mpz_class total = 0;
  std::function<void(std::size_t, unsigned, mpz_class)> rec = [&](std::size_t i, unsigned left, mpz_class acc) {
    if (i + 1 == a.size()) {
      total += acc * ipow(a[i], left);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) rec(i + 1, left - e, acc * ipow(a[i], e));
  };
  rec(0, k, 1);
  return total;
}

/// Multihomogeneous discriminant degree by naive expansion: with
/// P = prod(1+z_j) - sum_j d_j z_j prod_{i != j}(1+z_i) and u = 1 - P,
/// P^{-2} = sum_k (k+1) u^k. Polynomials are maps from exponent vectors,
/// truncated at z_j^{n_j - 1}.
inline mpz_class multihomog_brute(const std::vector<unsigned>& dims, const std::vector<unsigned>& degs) {
  using Exp = std::vector<unsigned>;
  using Poly = std::map<Exp, mpz_class>;
  const std::size_t r = dims.size();
  auto fits = [&](const Exp& e) {
    for (std::size_t j = 0; j < r; ++j)
      if (e[j] > dims[j] - 1) return false;
    return true;
  };
  auto mul = [&](const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        Exp e(r);
        for (std::size_t j = 0; j < r; ++j) e[j] = ea[j] + eb[j];
        if (fits(e)) out[e] += ca * cb;
      }
    return out;
  };
  auto one_plus = [&](std::size_t j) {
    Poly p;
    p[Exp(r, 0)] = 1;
    Exp e(r, 0);
    e[j] = 1;
    if (fits(e)) p[e] += 1;
    return p;
  };
  Poly P;
  P[Exp(r, 0)] = 1;
  for (std::size_t j = 0; j < r; ++j) P = mul(P, one_plus(j));
  for (std::size_t j = 0; j < r; ++j) {
    Poly t;
    Exp e(r, 0);
    e[j] = 1;
    if (!fits(e)) continue;
    t[e] = -static_cast<long>(degs[j]);
    for (std::size_t i = 0; i < r; ++i)
      if (i != j) t = mul(t, one_plus(i));
    for (const auto& [ex, c] : t) P[ex] += c;
  }
  Poly u;
  for (const auto& [e, c] : P)
    if (e != Exp(r, 0)) u[e] = -c;
  unsigned top = 0;
  for (auto d : dims) top += d - 1;
  Poly sum, power;
  power[Exp(r, 0)] = 1;
  for (unsigned k = 0; k <= top; ++k) {
    for (const auto& [e, c] : power) sum[e] += c * (k + 1);
    power = mul(power, u);
  }
  Exp target(r);
  for (std::size_t j = 0; j < r; ++j) target[j] = dims[j] - 1;
  return sum[target];
}

inline Rational random_rational(std::mt19937_64& rng, int num = 50, int den = 9) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

/// True when p / q is one nonzero constant at `trials` random points where
/// q does not vanish.
inline bool constant_ratio(const Polynomial& p, const Polynomial& q, std::mt19937_64& rng, int trials = 20,
                           Rational* ratio = nullptr) {
  std::optional<Rational> r;
  int done = 0, attempts = 0;
  while (done < trials && attempts < 50 * trials) {
    ++attempts;
    std::vector<Rational> pt(p.vars()->size());
    for (auto& x : pt) x = random_rational(rng);
    Rational qv = disclab::evaluate(q, std::span<const Rational>(pt));
    if (qv == 0) continue;
    Rational v = disclab::evaluate(p, std::span<const Rational>(pt)) / qv;
    if (v == 0) return false;
    if (r && *r != v) return false;
    r = v;
    ++done;
  }
  if (ratio && r) *ratio = *r;
  return done == trials;
}

/// Minimum of a binary form on the unit circle by dense sampling of the
/// angle followed by golden-section refinement of the best bracket.
inline double circle_min(const Polynomial& f) {
  auto val = [&](double t) {
    std::vector<double> x{std::cos(t), std::sin(t)};
    return disclab::evaluate(f, std::span<const double>(x));
  };
  const int N = 20000;
  const double pi = std::acos(-1.0);
  double best = val(0);
  int bi = 0;
  for (int i = 1; i < N; ++i) {
    double v = val(2 * pi * i / N);
    if (v < best) {
      best = v;
      bi = i;
    }
  }
  double a = 2 * pi * (bi - 1) / N, b = 2 * pi * (bi + 1) / N;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 200; ++it) {
    double c = b - g * (b - a), d = a + g * (b - a);
    if (val(c) < val(d)) b = d;
    else a = c;
  }
  return std::min(best, val(0.5 * (a + b)));
}

/// Random polynomial with `terms` monomials of total degree <= maxdeg.
inline Polynomial random_poly(const disclab::VarSetPtr& vars, std::mt19937_64& rng, int terms, unsigned maxdeg,
                              int coeff = 9) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<std::size_t> v(0, vars->size() - 1);
  std::uniform_int_distribution<unsigned> deg(0, maxdeg);
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    disclab::Monomial m(vars->size());
    unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) {
      auto i = v(rng);
      m.set(i, m[i] + 1);
    }
    p += Polynomial::monomial(vars, m, Rational(c(rng)));
  }
  return p;
}

/// Random form of degree d in the first `n` variables of `vars`.
inline Polynomial random_form(const disclab::VarSetPtr& vars, std::size_t n, unsigned d, std::mt19937_64& rng,
                              int coeff = 9) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  Polynomial p(vars);
  std::vector<unsigned> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = left;
      disclab::Monomial m(vars->size());
      for (std::size_t k = 0; k < n; ++k) m.set(k, e[k]);
      p += Polynomial::monomial(vars, m, Rational(c(rng)));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return p;
}

}  // namespace oracle
