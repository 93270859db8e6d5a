#pragma once

// Sylvester and Macaulay resultants, discriminants of forms and affine
// polynomials, and the Jacobian-rank test for singular common zeros.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "disclab/groebner.hpp"
#include "disclab/linalg.hpp"
#include "disclab/poly.hpp"

namespace disclab {

/// Primitive normalization for nonconstant results. A constant resultant is
/// returned exactly so that "nonzero" and "zero" stay distinguishable and the
/// value itself can be checked.
inline Polynomial normalize_result(const Polynomial& p) { return p.is_constant() ? p : primitive_part(p); }

// ---------------------------------------------------------------------------
// Sylvester

struct SylvesterMatrix {
  Matrix<Polynomial> entries;
  unsigned deg_f = 0;
  unsigned deg_g = 0;
};

namespace detail {

/// Rows of f-coefficients (descending) shifted deg_g times, then g's.
inline SylvesterMatrix sylvester_from_coeffs(const std::vector<Polynomial>& cf, const std::vector<Polynomial>& cg,
                                             const VarSetPtr& vars) {
  const unsigned df = static_cast<unsigned>(cf.size() - 1);
  const unsigned dg = static_cast<unsigned>(cg.size() - 1);
  const std::size_t n = df + dg;
  SylvesterMatrix s;
  s.deg_f = df;
  s.deg_g = dg;
  s.entries.assign(n, std::vector<Polynomial>(n, Polynomial(vars)));
  for (unsigned r = 0; r < dg; ++r)
    for (unsigned k = 0; k <= df; ++k) s.entries[r][r + k] = cf[k];
  for (unsigned r = 0; r < df; ++r)
    for (unsigned k = 0; k <= dg; ++k) s.entries[dg + r][r + k] = cg[k];
  return s;
}

/// Coefficients of f in `var`, highest power first, padded to `deg`.
inline std::vector<Polynomial> coeffs_desc(const Polynomial& f, std::size_t var, unsigned deg) {
  std::vector<Polynomial> out(deg + 1, Polynomial(f.vars()));
  std::size_t over[1] = {var};
  for (auto& [e, c] : coefficients_in(f, over)) out[deg - e[0]] = c;
  return out;
}

}  // namespace detail

inline SylvesterMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, std::size_t var) {
  if (!same_vars(f.vars(), g.vars())) throw Error(ErrorKind::VarSetMismatch, "resultant operands over different variable sets");
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroInput, "resultant of a zero polynomial");
  unsigned df = *f.degree_in(var), dg = *g.degree_in(var);
  return detail::sylvester_from_coeffs(detail::coeffs_desc(f, var, df), detail::coeffs_desc(g, var, dg), f.vars());
}

/// Res_var(f, g) with f, g viewed as univariate in `var`.
inline Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t var) {
  auto s = sylvester_matrix(f, g, var);
  return normalize_result(det_bareiss(std::move(s.entries), f.vars()));
}

inline Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::string_view var) {
  return sylvester_resultant(f, g, f.vars()->index(var));
}

/// Resultant of two binary forms in (x, y) using their nominal degrees, so
/// that a vanishing leading coefficient is a common root at infinity rather
/// than a degree drop. Zero forms are allowed and give zero.
inline Polynomial binary_form_resultant(const Polynomial& F, const Polynomial& G, std::size_t x, std::size_t y,
                                        bool normalize = true) {
  if (!same_vars(F.vars(), G.vars())) throw Error(ErrorKind::VarSetMismatch, "resultant operands over different variable sets");
  std::size_t xy[2] = {x, y};
  for (const auto* p : {&F, &G})
    if (!p->is_homogeneous(xy)) throw Error(ErrorKind::NotHomogeneous, "binary form expected: " + to_string(*p));
  if (F.is_zero() || G.is_zero()) return Polynomial(F.vars());
  unsigned df = *F.degree_in(xy), dg = *G.degree_in(xy);
  auto cf = detail::coeffs_desc(F, x, df);
  auto cg = detail::coeffs_desc(G, x, dg);
  // Strip the y powers carried by each coefficient.
  auto strip = [&](std::vector<Polynomial>& cs) {
    for (auto& c : cs) c = specialize(c, {{y, Rational(1)}});
  };
  strip(cf);
  strip(cg);
  auto s = detail::sylvester_from_coeffs(cf, cg, F.vars());
  Polynomial d = det_bareiss(std::move(s.entries), F.vars());
  return normalize ? normalize_result(d) : d;
}

// ---------------------------------------------------------------------------
// Macaulay

struct ResultantOptions {
  /// Symbolic Bareiss is used up to this matrix size; beyond it the
  /// resultant is interpolated from rational evaluations.
  std::size_t symbolic_size_limit = 12;
  std::size_t max_evaluations = 200000;
  unsigned retries = 5;
  std::uint64_t seed = 1;
};

/// Macaulay's matrix for n forms in n variables: rows f_i * x^a / x_i^{d_i}
/// indexed by the degree-D monomials, with D = sum (d_i - 1) + 1, and the
/// rows/columns of the non-reduced monomials that form the extraneous minor.
struct MacaulayPair {
  Matrix<Polynomial> numerator;
  std::vector<std::size_t> minor_index;
  unsigned target_degree = 0;
  std::vector<unsigned> degrees;
};

namespace detail {

inline void monomials_of_degree(std::size_t n, unsigned d, std::vector<unsigned>& cur, std::size_t i,
                                std::vector<std::vector<unsigned>>& out) {
  if (i + 1 == n) {
    cur[i] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned k = d + 1; k-- > 0;) {
    cur[i] = k;
    monomials_of_degree(n, d - k, cur, i + 1, out);
  }
}

inline void check_forms(const std::vector<Polynomial>& forms, std::span<const std::size_t> form_vars) {
  if (forms.empty()) throw Error(ErrorKind::EmptyList, "no forms given");
  for (const auto& f : forms) {
    if (!same_vars(f.vars(), forms[0].vars())) throw Error(ErrorKind::VarSetMismatch, "forms over different variable sets");
    if (!f.is_homogeneous(form_vars)) throw Error(ErrorKind::NotHomogeneous, "not a form: " + to_string(f));
  }
}

}  // namespace detail

inline MacaulayPair macaulay_matrix(const std::vector<Polynomial>& forms, std::span<const std::size_t> form_vars) {
  const std::size_t n = form_vars.size();
  if (forms.size() != n)
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(forms.size()) + " forms in " + std::to_string(n) + " variables");
  detail::check_forms(forms, form_vars);
  const auto& vars = forms[0].vars();
  MacaulayPair mp;
  unsigned D = 1;
  for (const auto& f : forms) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "zero form has no degree");
    unsigned d = *f.degree_in(form_vars);
    if (d == 0) throw Error(ErrorKind::DegreeTooSmall, "forms need positive degree");
    mp.degrees.push_back(d);
    D += d - 1;
  }
  mp.target_degree = D;
  std::vector<std::vector<unsigned>> monos;
  std::vector<unsigned> cur(n);
  detail::monomials_of_degree(n, D, cur, 0, monos);
  std::map<std::vector<unsigned>, std::size_t> col;
  for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;

  // Split each form into (exponent in form vars) -> coefficient polynomial.
  std::vector<std::map<std::vector<Monomial::Exponent>, Polynomial>> parts;
  for (const auto& f : forms) parts.push_back(coefficients_in(f, form_vars));

  const std::size_t N = monos.size();
  mp.numerator.assign(N, std::vector<Polynomial>(N, Polynomial(vars)));
  for (std::size_t r = 0; r < N; ++r) {
    const auto& a = monos[r];
    std::size_t which = n, hits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] >= mp.degrees[i]) {
        if (which == n) which = i;
        ++hits;
      }
    if (hits > 1) mp.minor_index.push_back(r);
    std::vector<unsigned> shift = a;
    shift[which] -= mp.degrees[which];
    for (const auto& [e, c] : parts[which]) {
      std::vector<unsigned> m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = shift[i] + e[i];
      mp.numerator[r][col.at(m)] = c;
    }
  }
  return mp;
}

namespace detail {

/// Symbols: variables other than the form variables that occur.
inline std::vector<std::size_t> coefficient_symbols(const std::vector<Polynomial>& forms,
                                                    std::span<const std::size_t> form_vars) {
  const auto& vars = forms[0].vars();
  std::vector<bool> is_form(vars->size(), false), used(vars->size(), false);
  for (auto v : form_vars) is_form[v] = true;
  for (const auto& f : forms)
    for (auto v : f.support()) used[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i] && !is_form[i]) out.push_back(i);
  return out;
}

struct Degenerate {};

/// Recursive Newton interpolation of a polynomial in `symbols` with degree
/// bounds `bounds`, from a black box over full-length rational points.
class Interpolator {
 public:
  Interpolator(VarSetPtr vars, std::vector<std::size_t> symbols, std::vector<unsigned> bounds,
               std::function<Rational(const std::vector<Rational>&)> box, std::vector<Rational> offsets,
               std::size_t max_evals)
      : vars_(std::move(vars)),
        symbols_(std::move(symbols)),
        bounds_(std::move(bounds)),
        box_(std::move(box)),
        offsets_(std::move(offsets)),
        max_evals_(max_evals),
        point_(vars_->size(), Rational(0)) {}

  Polynomial run() { return level(0); }

 private:
  Polynomial level(std::size_t k) {
    if (k == symbols_.size()) {
      if (++evals_ > max_evals_)
        throw Error(ErrorKind::BudgetExceeded, "resultant interpolation needs more than " + std::to_string(max_evals_) +
                                                   " evaluations");
      return Polynomial::constant(vars_, box_(point_));
    }
    const unsigned B = bounds_[k];
    std::vector<Rational> t(B + 1);
    std::vector<Polynomial> c;
    c.reserve(B + 1);
    for (unsigned j = 0; j <= B; ++j) {
      t[j] = offsets_[k] + j;
      point_[symbols_[k]] = t[j];
      c.push_back(level(k + 1));
    }
    for (unsigned s = 1; s <= B; ++s)
      for (unsigned j = B; j >= s; --j) c[j] = (c[j] - c[j - 1]) * Rational(1 / (t[j] - t[j - s]));
    Polynomial x = Polynomial::variable(vars_, symbols_[k]);
    Polynomial r = c[B];
    for (unsigned j = B; j-- > 0;) r = r * (x - Polynomial::constant(vars_, t[j])) + c[j];
    return r;
  }

  VarSetPtr vars_;
  std::vector<std::size_t> symbols_;
  std::vector<unsigned> bounds_;
  std::function<Rational(const std::vector<Rational>&)> box_;
  std::vector<Rational> offsets_;
  std::size_t max_evals_;
  std::size_t evals_ = 0;
  std::vector<Rational> point_;
};

inline Matrix<Rational> evaluate_matrix(const Matrix<Polynomial>& m, const std::vector<Rational>& pt) {
  Matrix<Rational> out(m.size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = evaluate(m[i][j], pt);
  return out;
}

/// One attempt on fixed forms. Returns nullopt when the extraneous minor
/// vanishes (identically, or at a sample point).
inline std::optional<Polynomial> macaulay_attempt(const std::vector<Polynomial>& forms,
                                                  std::span<const std::size_t> form_vars,
                                                  const ResultantOptions& opt, std::mt19937_64& rng) {
  const auto& vars = forms[0].vars();
  MacaulayPair mp = macaulay_matrix(forms, form_vars);
  const std::size_t N = mp.numerator.size();
  std::vector<std::size_t> symbols = coefficient_symbols(forms, form_vars);
  auto minor = submatrix(mp.numerator, mp.minor_index, mp.minor_index);

  if (symbols.empty()) {
    std::vector<Rational> pt(vars->size(), Rational(0));
    Rational den = det_rational(evaluate_matrix(minor, pt));
    if (den == 0) return std::nullopt;
    return Polynomial::constant(vars, det_rational(evaluate_matrix(mp.numerator, pt)) / den);
  }
  if (N <= opt.symbolic_size_limit) {
    Polynomial den = det_bareiss(minor, vars);
    if (den.is_zero()) return std::nullopt;
    return divide_exact(det_bareiss(mp.numerator, vars), den);
  }
  // deg_s Res <= sum_k deg_s(coeffs of f_k) * prod_{i != k} d_i.
  std::vector<unsigned> bounds;
  for (auto s : symbols) {
    unsigned b = 0;
    for (std::size_t k = 0; k < forms.size(); ++k) {
      unsigned prod = 1;
      for (std::size_t i = 0; i < forms.size(); ++i)
        if (i != k) prod *= mp.degrees[i];
      b += *forms[k].degree_in(s) * prod;
    }
    bounds.push_back(b);
  }
  std::uniform_int_distribution<int> off(-1000, 1000);
  std::vector<Rational> offsets;
  for (std::size_t i = 0; i < symbols.size(); ++i) offsets.emplace_back(off(rng));
  auto box = [&](const std::vector<Rational>& pt) -> Rational {
    Rational den = det_rational(evaluate_matrix(minor, pt));
    if (den == 0) throw Degenerate{};
    return det_rational(evaluate_matrix(mp.numerator, pt)) / den;
  };
  try {
    return Interpolator(vars, symbols, bounds, box, offsets, opt.max_evaluations).run();
  } catch (const Degenerate&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Res(f_1..f_n) for n forms in the n variables `form_vars`; other variables
/// are coefficient symbols. Nonconstant results are primitive normalized.
inline Polynomial macaulay_resultant(const std::vector<Polynomial>& forms, std::span<const std::size_t> form_vars,
                                     const ResultantOptions& opt = {}) {
  if (forms.size() != form_vars.size())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(forms.size()) + " forms in " + std::to_string(form_vars.size()) + " variables");
  detail::check_forms(forms, form_vars);
  const auto& vars = forms[0].vars();
  for (const auto& f : forms)
    if (f.is_zero()) return Polynomial(vars);
  std::mt19937_64 rng(opt.seed);
  const std::size_t n = form_vars.size();
  unsigned total = 1;
  for (const auto& f : forms) total *= *f.degree_in(form_vars);

  for (unsigned attempt = 0; attempt <= opt.retries; ++attempt) {
    if (attempt == 0) {
      if (auto r = detail::macaulay_attempt(forms, form_vars, opt, rng)) return normalize_result(*r);
      continue;
    }
    // Res(f o A) = det(A)^{d_1...d_n} Res(f).
    std::uniform_int_distribution<int> entry(-3, 3);
    Matrix<Rational> A(n, std::vector<Rational>(n));
    for (auto& row : A)
      for (auto& x : row) x = entry(rng);
    Rational detA = det_rational(A);
    if (detA == 0) continue;
    std::map<std::size_t, Polynomial> sub;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial li(vars);
      for (std::size_t j = 0; j < n; ++j) li += Polynomial::variable(vars, form_vars[j]) * A[i][j];
      sub.emplace(form_vars[i], li);
    }
    std::vector<Polynomial> moved;
    for (const auto& f : forms) moved.push_back(substitute(f, sub));
    if (auto r = detail::macaulay_attempt(moved, form_vars, opt, rng))
      return normalize_result(*r * Rational(1 / pow(detA, total)));
  }
  throw Error(ErrorKind::DegenerateSpecialization,
              "Macaulay extraneous minor vanished after " + std::to_string(opt.retries) + " coordinate changes");
}

// ---------------------------------------------------------------------------
// Discriminants

enum class DiscMode { Form, Affine };

/// Primitive part of Res(df/dx_1, ..., df/dx_n) over the form variables.
/// Affine mode homogenizes with a fresh variable first; the result lives over
/// the input's variable set either way.
inline Polynomial discriminant(const Polynomial& f, std::span<const std::size_t> form_vars, DiscMode mode,
                               const ResultantOptions& opt = {}) {
  if (form_vars.empty()) throw Error(ErrorKind::EmptyList, "no form variables");
  if (mode == DiscMode::Affine) {
    std::string h = "x0";
    while (f.vars()->find(h)) h += "_";
    Polynomial F = homogenize(f, h, form_vars);
    std::vector<std::size_t> fv(form_vars.begin(), form_vars.end());
    fv.push_back(F.vars()->size() - 1);
    Polynomial d = discriminant(F, fv, DiscMode::Form, opt);
    return embed(d, f.vars());
  }
  if (!f.is_homogeneous(form_vars)) throw Error(ErrorKind::NotHomogeneous, "discriminant of a non-form: " + to_string(f));
  const auto& vars = f.vars();
  unsigned d = f.is_zero() ? 0 : *f.degree_in(form_vars);
  if (f.is_zero()) return Polynomial(vars);
  if (d < 2) throw Error(ErrorKind::DegreeTooSmall, "discriminant needs degree at least 2");
  auto grad = gradient(f, form_vars);
  const std::size_t n = form_vars.size();
  if (n == 1) return normalize_result(coefficients_in(grad[0], form_vars).begin()->second);
  for (const auto& g : grad)
    if (g.is_zero()) return Polynomial(vars);
  if (n == 2) return binary_form_resultant(grad[0], grad[1], form_vars[0], form_vars[1]);
  return macaulay_resultant(grad, form_vars, opt);
}

inline Polynomial discriminant(const Polynomial& f, const std::vector<std::string>& form_vars, DiscMode mode,
                               const ResultantOptions& opt = {}) {
  auto idx = indices_of(*f.vars(), form_vars);
  return discriminant(f, idx, mode, opt);
}

// ---------------------------------------------------------------------------
// Membership in the discriminantal variety W(d_0..d_m)

/// True iff f_0 = ... = f_m = 0 has a projective solution where the Jacobian
/// has rank <= m. Decided by a Groebner basis of the forms plus all maximal
/// minors of the Jacobian: the projective zero set is empty iff every
/// variable has a pure power among the leading monomials.
inline bool in_discriminantal_variety(const std::vector<Polynomial>& forms, std::span<const std::size_t> form_vars,
                                      const GroebnerOptions& opt = {}) {
  detail::check_forms(forms, form_vars);
  const std::size_t m1 = forms.size();
  const std::size_t n1 = form_vars.size();
  if (m1 > n1) throw Error(ErrorKind::DimensionMismatch, "more forms than variables");
  const auto& src = forms[0].vars();
  std::vector<bool> is_form(src->size(), false);
  for (auto v : form_vars) is_form[v] = true;
  for (const auto& f : forms)
    for (auto v : f.support())
      if (!is_form[v])
        throw Error(ErrorKind::DimensionMismatch,
                    "coefficients must be numbers; found symbol '" + src->name(v) + "'");
  bool any_big = false;
  for (const auto& f : forms)
    if (!f.is_zero() && *f.degree_in(form_vars) > 1) any_big = true;
  if (!any_big) throw Error(ErrorKind::DegreePreconditionViolated, "all forms are linear");

  std::vector<std::string> names;
  for (auto v : form_vars) names.push_back(src->name(v));
  auto vars = VarSet::make(names);
  std::vector<Polynomial> fs;
  for (const auto& f : forms) fs.push_back(embed(f, vars));
  Matrix<Polynomial> J(m1, std::vector<Polynomial>(n1, Polynomial(vars)));
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = 0; j < n1; ++j) J[i][j] = differentiate(fs[i], j);
  std::vector<Polynomial> gens = fs;
  std::vector<std::size_t> rows(m1);
  for (std::size_t i = 0; i < m1; ++i) rows[i] = i;
  for (const auto& cols : combinations(n1, m1)) {
    Polynomial mnr = det_bareiss(submatrix(J, rows, cols), vars);
    if (!mnr.is_zero()) gens.push_back(mnr);
  }
  bool all_zero = true;
  for (const auto& g : gens) all_zero = all_zero && g.is_zero();
  if (all_zero) return true;
  Ideal gb = buchberger(Ideal{gens, TermOrder::grevlex(), BasisState::Raw}, opt);
  std::vector<bool> pure(n1, false);
  for (const auto& g : gb.generators) {
    const Monomial& lm = g.leading_term().first;
    if (lm.is_one()) return false;
    std::size_t nz = 0, at = 0;
    for (std::size_t i = 0; i < n1; ++i)
      if (lm[i]) {
        ++nz;
        at = i;
      }
    if (nz == 1) pure[at] = true;
  }
  for (bool p : pure)
    if (!p) return true;
  return false;
}

}  // namespace disclab
