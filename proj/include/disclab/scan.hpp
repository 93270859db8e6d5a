#pragma once

// Multistart projected-gradient minimization of polynomials over spheres,
// hemispheres, products of spheres, simplices and boxes, with an augmented
// Lagrangian for equality and inequality constraints. These are estimators,
// not certificates: every result reports how it was obtained.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "disclab/constraints.hpp"
#include "disclab/poly.hpp"

namespace disclab {

struct ScanOptions {
  unsigned starts = 64;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks the hardware concurrency. Results do not
  /// depend on this.
  unsigned threads = 1;
  double tol = 1e-10;
  unsigned max_iter = 5000;
  double feas_tol = 1e-9;
  /// Expanding box radii for unhomogenized constrained problems.
  std::vector<double> box_radii{10.0, 100.0};
};

struct MinReport {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> witness;
  VarSetPtr witness_vars;
  unsigned starts_used = 0;
  unsigned converged = 0;
  double spread = 0;
  bool attained = true;
  double feasibility = 0;
  std::uint64_t seed = 0;
};

enum class Verdict { Interior, Boundary, Exterior };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Interior: return "Interior";
    case Verdict::Boundary: return "Boundary";
    case Verdict::Exterior: return "Exterior";
  }
  return "?";
}

struct Membership {
  Verdict verdict = Verdict::Boundary;
  double margin = 0;
  MinReport report;
};

inline Verdict verdict_for(double value, double tol_band) {
  if (value > tol_band) return Verdict::Interior;
  if (value < -tol_band) return Verdict::Exterior;
  return Verdict::Boundary;
}

namespace detail {

/// Floating copy of a polynomial with value-and-gradient evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const Polynomial& p) : n_(p.vars()->size()) {
    for (const auto& [m, c] : p.terms()) {
      Term t;
      t.coef = c.get_d();
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) {
          t.factors.emplace_back(static_cast<unsigned>(i), m[i]);
          maxdeg_ = std::max<unsigned>(maxdeg_, m[i]);
        }
      terms_.push_back(std::move(t));
    }
  }

  std::size_t nvars() const { return n_; }

  double value(const std::vector<double>& x) const {
    double s = 0;
    for (const auto& t : terms_) {
      double v = t.coef;
      for (auto [i, e] : t.factors) v *= ipow(x[i], e);
      s += v;
    }
    return s;
  }

  /// Value, with the gradient accumulated into g (scaled by w).
  double value_grad(const std::vector<double>& x, std::vector<double>& g, double w = 1.0) const {
    double s = 0;
    for (const auto& t : terms_) {
      double v = t.coef;
      for (auto [i, e] : t.factors) v *= ipow(x[i], e);
      s += v;
      for (std::size_t a = 0; a < t.factors.size(); ++a) {
        auto [ia, ea] = t.factors[a];
        double d = t.coef * ea * ipow(x[ia], ea - 1);
        for (std::size_t b = 0; b < t.factors.size(); ++b)
          if (b != a) d *= ipow(x[t.factors[b].first], t.factors[b].second);
        g[ia] += w * d;
      }
    }
    return s;
  }

  /// Largest absolute coefficient, used to scale constraints.
  double max_coef() const {
    double m = 0;
    for (const auto& t : terms_) m = std::max(m, std::abs(t.coef));
    return m;
  }

  void scale(double k) {
    for (auto& t : terms_) t.coef *= k;
  }

 private:
  static double ipow(double x, unsigned e) {
    double r = 1;
    while (e) {
      if (e & 1u) r *= x;
      x *= x;
      e >>= 1;
    }
    return r;
  }

  struct Term {
    double coef = 0;
    std::vector<std::pair<unsigned, unsigned>> factors;
  };
  std::size_t n_ = 0;
  unsigned maxdeg_ = 0;
  std::vector<Term> terms_;
};

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

/// A feasible region given by a projection and, for manifolds, the tangent
/// projection of a Euclidean gradient.
struct Domain {
  std::function<void(std::vector<double>&)> project;
  std::function<void(const std::vector<double>&, std::vector<double>&)> tangent;
  std::function<std::vector<double>(std::mt19937_64&)> sample;
};

inline void normalize_block(std::vector<double>& x, std::size_t from, std::size_t to) {
  double s = 0;
  for (std::size_t i = from; i < to; ++i) s += x[i] * x[i];
  s = std::sqrt(s);
  if (s == 0) {
    x[from] = 1;
    return;
  }
  for (std::size_t i = from; i < to; ++i) x[i] /= s;
}

inline void tangent_block(const std::vector<double>& x, std::vector<double>& g, std::size_t from, std::size_t to) {
  double r = 0;
  for (std::size_t i = from; i < to; ++i) r += x[i] * g[i];
  for (std::size_t i = from; i < to; ++i) g[i] -= r * x[i];
}

inline Domain product_sphere_domain(std::vector<std::size_t> dims) {
  std::vector<std::size_t> cut{0};
  for (auto d : dims) cut.push_back(cut.back() + d);
  Domain d;
  d.project = [cut](std::vector<double>& x) {
    for (std::size_t k = 0; k + 1 < cut.size(); ++k) normalize_block(x, cut[k], cut[k + 1]);
  };
  d.tangent = [cut](const std::vector<double>& x, std::vector<double>& g) {
    for (std::size_t k = 0; k + 1 < cut.size(); ++k) tangent_block(x, g, cut[k], cut[k + 1]);
  };
  d.sample = [cut, p = d.project](std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    std::vector<double> x(cut.back());
    for (auto& v : x) v = nd(rng);
    p(x);
    return x;
  };
  return d;
}

inline Domain sphere_domain(std::size_t n) { return product_sphere_domain({n}); }

/// {|x| = 1, x_h >= 0}.
inline Domain hemisphere_domain(std::size_t n, std::size_t h) {
  Domain d;
  d.project = [n, h](std::vector<double>& x) {
    x[h] = std::max(x[h], 0.0);
    normalize_block(x, 0, n);
  };
  d.tangent = [n](const std::vector<double>& x, std::vector<double>& g) { tangent_block(x, g, 0, n); };
  d.sample = [n, h](std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    std::vector<double> x(n);
    for (auto& v : x) v = nd(rng);
    x[h] = std::abs(x[h]);
    normalize_block(x, 0, n);
    return x;
  };
  return d;
}

/// Euclidean projection onto the standard simplex.
inline void project_simplex(std::vector<double>& x) {
  std::vector<double> u = x;
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0, theta = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    double t = (css - 1) / static_cast<double>(i + 1);
    if (u[i] - t > 0) theta = t;
  }
  for (auto& v : x) v = std::max(v - theta, 0.0);
}

inline Domain simplex_domain(std::size_t n) {
  Domain d;
  d.project = project_simplex;
  d.tangent = [](const std::vector<double>&, std::vector<double>&) {};
  d.sample = [n](std::mt19937_64& rng) {
    std::exponential_distribution<double> ed(1.0);
    std::vector<double> x(n);
    double s = 0;
    for (auto& v : x) s += (v = ed(rng));
    for (auto& v : x) v /= s;
    return x;
  };
  return d;
}

inline Domain box_domain(std::size_t n, double r, double start_scale) {
  Domain d;
  d.project = [r](std::vector<double>& x) {
    for (auto& v : x) v = std::clamp(v, -r, r);
  };
  d.tangent = [](const std::vector<double>&, std::vector<double>&) {};
  d.sample = [n, start_scale](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ud(-start_scale, start_scale);
    std::vector<double> x(n);
    for (auto& v : x) v = ud(rng);
    return x;
  };
  return d;
}

using Objective = std::function<double(const std::vector<double>&, std::vector<double>&)>;

struct LocalResult {
  std::vector<double> x;
  double value = 0;
  double stationarity = 0;
  unsigned iterations = 0;
  bool converged = false;
};

/// Projected gradient with Barzilai-Borwein steps and a nonmonotone Armijo
/// backtracking line search. Stationarity is |P(x - g) - x| with g the
/// (tangent) gradient.
inline LocalResult projected_gradient(const Objective& obj, const Domain& dom, std::vector<double> x, double tol,
                                      unsigned max_iter) {
  const std::size_t n = x.size();
  dom.project(x);
  std::vector<double> g(n, 0.0);
  double f = obj(x, g);
  dom.tangent(x, g);
  std::deque<double> hist{f};
  double t = 1.0 / std::max(1.0, norm(g));
  LocalResult r;
  std::vector<double> y(n), gy(n), trial(n);
  for (unsigned it = 0; it < max_iter; ++it) {
    for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] - g[i];
    dom.project(trial);
    double stat = 0;
    for (std::size_t i = 0; i < n; ++i) stat += (trial[i] - x[i]) * (trial[i] - x[i]);
    stat = std::sqrt(stat);
    r.stationarity = stat;
    r.iterations = it;
    if (stat <= tol) {
      r.converged = true;
      break;
    }
    const double fref = *std::max_element(hist.begin(), hist.end());
    double fy = 0;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - t * g[i];
      dom.project(y);
      double gd = 0;
      for (std::size_t i = 0; i < n; ++i) gd += g[i] * (y[i] - x[i]);
      std::fill(gy.begin(), gy.end(), 0.0);
      fy = obj(y, gy);
      if (std::isfinite(fy) && fy <= fref + 1e-4 * gd) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
    dom.tangent(y, gy);
    double ss = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = y[i] - x[i], d = gy[i] - g[i];
      ss += s * s;
      sy += s * d;
    }
    x.swap(y);
    g.swap(gy);
    f = fy;
    hist.push_back(f);
    if (hist.size() > 10) hist.pop_front();
    if (ss == 0) break;
    t = sy > 0 ? std::clamp(ss / sy, 1e-20, 1e20) : std::min(t * 4, 1e20);
  }
  r.x = std::move(x);
  r.value = f;
  return r;
}

/// Runs `job(index, rng)` for every start on a small thread pool, storing
/// results by index so aggregation order never depends on scheduling.
template <typename R>
std::vector<R> run_starts(unsigned starts, std::uint64_t seed, unsigned threads,
                          const std::function<R(unsigned, std::mt19937_64&)>& job) {
  std::vector<R> out(starts);
  unsigned nt = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min(nt, std::max(1u, starts));
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned i; (i = next.fetch_add(1)) < starts;) {
      std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), i};
      std::mt19937_64 rng(sq);
      out[i] = job(i, rng);
    }
  };
  if (nt == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < nt; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

inline MinReport aggregate(const std::vector<LocalResult>& rs, const VarSetPtr& vars, std::uint64_t seed) {
  MinReport rep;
  rep.seed = seed;
  rep.witness_vars = vars;
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& r : rs) {
    ++rep.starts_used;
    if (r.converged) ++rep.converged;
    hi = std::max(hi, r.value);
    if (r.value < rep.value) {
      rep.value = r.value;
      rep.witness = r.x;
    }
  }
  rep.spread = rs.empty() ? 0 : hi - rep.value;
  return rep;
}

inline MinReport multistart(const CompiledPoly& f, const Domain& dom, const VarSetPtr& vars, const ScanOptions& opt) {
  Objective obj = [&f](const std::vector<double>& x, std::vector<double>& g) { return f.value_grad(x, g); };
  auto rs = run_starts<LocalResult>(opt.starts, opt.seed, opt.threads, [&](unsigned, std::mt19937_64& rng) {
    return projected_gradient(obj, dom, dom.sample(rng), opt.tol, opt.max_iter);
  });
  return aggregate(rs, vars, opt.seed);
}

}  // namespace detail

/// Minimum of a form on the unit sphere of all its variables.
inline MinReport sphere_min(const Polynomial& f, const ScanOptions& opt = {}) {
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "sphere minimum of a non-form");
  if (f.vars()->size() == 0) throw Error(ErrorKind::DimensionMismatch, "no variables");
  detail::CompiledPoly cp(f);
  return detail::multistart(cp, detail::sphere_domain(f.vars()->size()), f.vars(), opt);
}

/// Minimum over the product of unit spheres of consecutive variable groups.
inline MinReport product_sphere_min(const Polynomial& f, const std::vector<std::size_t>& group_dims,
                                    const ScanOptions& opt = {}) {
  std::size_t total = 0;
  for (auto d : group_dims) {
    if (d == 0) throw Error(ErrorKind::GroupMismatch, "empty variable group");
    total += d;
  }
  if (total != f.vars()->size())
    throw Error(ErrorKind::GroupMismatch, "groups cover " + std::to_string(total) + " of " +
                                              std::to_string(f.vars()->size()) + " variables");
  std::size_t from = 0;
  for (auto d : group_dims) {
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), from);
    if (!f.is_homogeneous(idx)) throw Error(ErrorKind::GroupMismatch, "not homogeneous in a declared group");
    from += d;
  }
  detail::CompiledPoly cp(f);
  return detail::multistart(cp, detail::product_sphere_domain(group_dims), f.vars(), opt);
}

/// Minimum of f over the standard simplex.
inline MinReport simplex_min(const Polynomial& f, const ScanOptions& opt = {}) {
  detail::CompiledPoly cp(f);
  return detail::multistart(cp, detail::simplex_domain(f.vars()->size()), f.vars(), opt);
}

namespace detail {

/// f plus augmented Lagrangian terms for g = 0 and p >= 0.
struct AugLag {
  const CompiledPoly* f;
  std::vector<CompiledPoly> eq, ineq;
  std::vector<double> lam, nu;
  double mu = 10;

  double operator()(const std::vector<double>& x, std::vector<double>& g) const {
    std::fill(g.begin(), g.end(), 0.0);
    double v = f->value_grad(x, g);
    std::vector<double> tmp(x.size());
    for (std::size_t i = 0; i < eq.size(); ++i) {
      std::fill(tmp.begin(), tmp.end(), 0.0);
      double c = eq[i].value_grad(x, tmp);
      double w = lam[i] + mu * c;
      v += lam[i] * c + 0.5 * mu * c * c;
      for (std::size_t k = 0; k < x.size(); ++k) g[k] += w * tmp[k];
    }
    for (std::size_t j = 0; j < ineq.size(); ++j) {
      std::fill(tmp.begin(), tmp.end(), 0.0);
      double c = ineq[j].value_grad(x, tmp);
      double s = std::max(0.0, nu[j] - mu * c);
      v += (s * s - nu[j] * nu[j]) / (2 * mu);
      for (std::size_t k = 0; k < x.size(); ++k) g[k] -= s * tmp[k];
    }
    return v;
  }

  double infeasibility(const std::vector<double>& x) const {
    double r = 0;
    for (const auto& c : eq) r = std::max(r, std::abs(c.value(x)));
    for (const auto& c : ineq) r = std::max(r, std::max(0.0, -c.value(x)));
    return r;
  }
};

struct ConstrainedLocal {
  LocalResult local;
  double infeasibility = 0;
  bool escaped = false;
};

inline ConstrainedLocal solve_auglag(AugLag al, const Domain& dom, std::vector<double> x, const ScanOptions& opt) {
  al.lam.assign(al.eq.size(), 0.0);
  al.nu.assign(al.ineq.size(), 0.0);
  al.mu = 10;
  double prev = std::numeric_limits<double>::infinity();
  LocalResult lr;
  const bool has_cons = !al.eq.empty() || !al.ineq.empty();
  for (int outer = 0; outer < (has_cons ? 40 : 1); ++outer) {
    Objective obj = [&al](const std::vector<double>& y, std::vector<double>& g) { return al(y, g); };
    lr = projected_gradient(obj, dom, x, opt.tol, opt.max_iter);
    x = lr.x;
    double inf = al.infeasibility(x);
    if (!has_cons) break;
    if (inf <= opt.feas_tol * 1e-2 && lr.stationarity <= 1e-8) break;
    for (std::size_t i = 0; i < al.eq.size(); ++i) al.lam[i] += al.mu * al.eq[i].value(x);
    for (std::size_t j = 0; j < al.ineq.size(); ++j) al.nu[j] = std::max(0.0, al.nu[j] - al.mu * al.ineq[j].value(x));
    if (inf > 0.25 * prev) al.mu = std::min(al.mu * 10, 1e12);
    prev = inf;
  }
  ConstrainedLocal out;
  out.infeasibility = al.infeasibility(x);
  lr.value = al.f->value(x);
  out.local = std::move(lr);
  return out;
}

inline CompiledPoly scaled(const Polynomial& p) {
  CompiledPoly c(p);
  double m = c.max_coef();
  if (m > 0) c.scale(1 / m);
  return c;
}

}  // namespace detail

/// Infimum of f over K (homogenized = false) or of f^h over the
/// hemisphere-projectivization of K (homogenized = true). The homogenizing
/// variable is appended last in the witness.
inline MinReport constrained_min(const Polynomial& f, const ConstraintSet& K, bool homogenized,
                                 const ScanOptions& opt = {}) {
  for (const auto* list : {&K.equalities, &K.inequalities})
    for (const auto& q : *list)
      if (!same_vars(q.vars(), f.vars()))
        throw Error(ErrorKind::VarSetMismatch, "constraint over a different variable set");
  Polynomial F = f;
  std::vector<Polynomial> eqs = K.equalities, ineqs = K.inequalities;
  if (homogenized) {
    std::string h = "x0";
    while (f.vars()->find(h)) h += "_";
    F = homogenize(f, h);
    for (auto& q : eqs) q = homogenize(q, h);
    for (auto& q : ineqs) q = homogenize(q, h);
    // All pieces must share one variable set object.
    for (auto& q : eqs) q = embed(q, F.vars());
    for (auto& q : ineqs) q = embed(q, F.vars());
  }
  const std::size_t n = F.vars()->size();
  detail::CompiledPoly cf(F);
  detail::AugLag proto;
  proto.f = &cf;
  for (const auto& q : eqs) proto.eq.push_back(detail::scaled(q));
  for (const auto& q : ineqs) proto.ineq.push_back(detail::scaled(q));

  using CL = detail::ConstrainedLocal;
  std::vector<CL> rs;
  if (homogenized) {
    auto dom = detail::hemisphere_domain(n, n - 1);
    rs = detail::run_starts<CL>(opt.starts, opt.seed, opt.threads, [&](unsigned, std::mt19937_64& rng) {
      return detail::solve_auglag(proto, dom, dom.sample(rng), opt);
    });
  } else {
    if (opt.box_radii.empty()) throw Error(ErrorKind::Usage, "no box radii");
    rs = detail::run_starts<CL>(opt.starts, opt.seed, opt.threads, [&](unsigned, std::mt19937_64& rng) {
      CL cl;
      std::vector<double> x = detail::box_domain(n, opt.box_radii[0], 2.0).sample(rng);
      double prev_r = 0;
      for (double R : opt.box_radii) {
        auto dom = detail::box_domain(n, R, 2.0);
        cl = detail::solve_auglag(proto, dom, x, opt);
        x = cl.local.x;
        cl.escaped = std::any_of(x.begin(), x.end(), [R](double v) { return std::abs(v) >= R * (1 - 1e-9); });
        if (!cl.escaped) {
          // A minimizer that only shows up beyond the previous box is treated
          // as a sequence escaping to infinity.
          cl.escaped = prev_r > 0 && std::any_of(x.begin(), x.end(), [prev_r](double v) { return std::abs(v) > prev_r; });
          break;
        }
        prev_r = R;
      }
      return cl;
    });
  }
  MinReport rep;
  rep.seed = opt.seed;
  rep.witness_vars = F.vars();
  double hi = -std::numeric_limits<double>::infinity();
  const double accept = std::max(opt.feas_tol, 1e-6);
  for (const auto& r : rs) {
    ++rep.starts_used;
    if (r.infeasibility > accept) continue;
    if (r.local.converged) ++rep.converged;
    hi = std::max(hi, r.local.value);
    if (r.local.value < rep.value) {
      rep.value = r.local.value;
      rep.witness = r.local.x;
      rep.attained = !r.escaped;
      rep.feasibility = r.infeasibility;
    }
  }
  if (rep.witness.empty())
    throw Error(ErrorKind::InfeasibleStartBudget,
                "no start reached a feasible point in " + std::to_string(opt.starts) + " attempts");
  rep.spread = hi - rep.value;
  return rep;
}

/// Interior/boundary/exterior of f relative to the cone of polynomials
/// nonnegative on K. Forms with K unconstrained use the sphere minimum;
/// otherwise compact K uses the minimum over K and K closed at infinity the
/// homogenized minimum.
inline Membership classify(const Polynomial& f, const ConstraintSet& K, double tol_band = 1e-4,
                           const ScanOptions& opt = {}) {
  Membership m;
  if (K.unconstrained() && f.is_homogeneous()) {
    m.report = sphere_min(f, opt);
  } else if (K.compact) {
    m.report = constrained_min(f, K, false, opt);
  } else if (K.closed_at_infinity) {
    m.report = constrained_min(f, K, true, opt);
  } else {
    throw Error(ErrorKind::FlagMissing, "K must be asserted compact or closed at infinity");
  }
  m.margin = m.report.value;
  m.verdict = verdict_for(m.report.value, tol_band);
  return m;
}

/// -log of the sphere minimum; defined only in the interior of the cone,
/// which numerically means above the classification band.
inline double barrier_value(const Polynomial& f, double tol_band = 1e-4, const ScanOptions& opt = {}) {
  auto r = sphere_min(f, opt);
  if (r.value <= tol_band)
    throw Error(ErrorKind::NotInterior, "sphere minimum " + std::to_string(r.value) + " is not positive");
  return -std::log(r.value);
}

struct ConcavityReport {
  std::vector<double> thetas;
  std::vector<double> lhs;  ///< estimated min of the convex combination
  std::vector<double> rhs;  ///< the same combination of the two minima
  double lambda1 = 0, lambda2 = 0;
  double worst_violation = 0;  ///< max(rhs - lhs, 0)
  bool holds(double tol) const { return worst_violation <= tol; }
};

/// Checks lambda_min(t f1 + (1-t) f2) >= t lambda_min(f1) + (1-t) lambda_min(f2)
/// at num_thetas equispaced interior values of t.
inline ConcavityReport concavity_probe(const Polynomial& f1, const Polynomial& f2, unsigned num_thetas,
                                       const ScanOptions& opt = {}) {
  if (!same_vars(f1.vars(), f2.vars())) throw Error(ErrorKind::VarSetMismatch, "forms over different variable sets");
  if (!f1.is_homogeneous() || !f2.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "concavity probe needs forms");
  if (f1.degree() != f2.degree()) throw Error(ErrorKind::DegreeMismatch, "forms of different degrees");
  ConcavityReport rep;
  rep.lambda1 = sphere_min(f1, opt).value;
  rep.lambda2 = sphere_min(f2, opt).value;
  for (unsigned k = 1; k <= num_thetas; ++k) {
    double t = static_cast<double>(k) / (num_thetas + 1);
    Rational tq(t);
    Polynomial mix = f1 * tq + f2 * Rational(1 - tq);
    double l = sphere_min(mix, opt).value;
    double r = t * rep.lambda1 + (1 - t) * rep.lambda2;
    rep.thetas.push_back(t);
    rep.lhs.push_back(l);
    rep.rhs.push_back(r);
    rep.worst_violation = std::max(rep.worst_violation, r - l);
  }
  return rep;
}

/// Re-expresses f over exactly the named variables; any other variable that
/// still occurs is an error.
inline Polynomial restrict_vars(const Polynomial& f, const std::vector<std::string>& names) {
  return embed(f, VarSet::make(names));
}

}  // namespace disclab
