#pragma once

// Buchberger's algorithm with the sugar strategy and the Gebauer-Moeller
// pair criteria, plus elimination and the critical/KKT system builders.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "disclab/constraints.hpp"
#include "disclab/poly.hpp"

namespace disclab {

enum class OrderKind { Lex, GrevLex, Block };

class TermOrder {
 public:
  static TermOrder lex() { return TermOrder(OrderKind::Lex, {}); }
  static TermOrder grevlex() { return TermOrder(OrderKind::GrevLex, {}); }

  /// Variables flagged in `first_block` are greater than all others;
  /// graded reverse lex inside each block.
  static TermOrder block(std::vector<bool> first_block) { return TermOrder(OrderKind::Block, std::move(first_block)); }

  OrderKind kind() const { return kind_; }
  const std::vector<bool>& first_block() const { return mask_; }

  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Lex: return compare_lex(a, b);
      case OrderKind::GrevLex: return compare_grevlex(a, b);
      case OrderKind::Block: {
        int c = compare_block(a, b, true);
        return c ? c : compare_block(a, b, false);
      }
    }
    return 0;
  }

 private:
  TermOrder(OrderKind k, std::vector<bool> mask) : kind_(k), mask_(std::move(mask)) {}

  bool in_first(std::size_t i) const { return i < mask_.size() && mask_[i]; }

  int compare_block(const Monomial& a, const Monomial& b, bool first) const {
    unsigned da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (in_first(i) == first) {
        da += a[i];
        db += b[i];
      }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (in_first(i) != first) continue;
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_;
  std::vector<bool> mask_;
};

struct GroebnerOptions {
  /// Cap on processed S-pairs.
  std::size_t max_pairs = 200000;
  /// Wall-clock cap in seconds; zero disables it.
  double max_seconds = 0;

  /// Defaults, with DISCLAB_BUDGET (a pair count) applied when set.
  static GroebnerOptions from_env() {
    GroebnerOptions o;
    if (const char* b = std::getenv("DISCLAB_BUDGET")) {
      try {
        o.max_pairs = std::stoull(b);
      } catch (...) {
        throw Error(ErrorKind::InputParse, std::string("DISCLAB_BUDGET is not a count: ") + b);
      }
    }
    return o;
  }
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reductions_to_zero = 0;
};

enum class BasisState { Raw, Groebner };

struct Ideal {
  std::vector<Polynomial> generators;
  TermOrder order = TermOrder::grevlex();
  BasisState state = BasisState::Raw;
};

namespace detail {

using GTerm = Polynomial::Term;
using GPoly = std::vector<GTerm>;

inline GPoly to_gpoly(const Polynomial& p, const TermOrder& ord) {
  GPoly g(p.terms().begin(), p.terms().end());
  if (ord.kind() != OrderKind::GrevLex)
    std::sort(g.begin(), g.end(), [&](const GTerm& a, const GTerm& b) { return ord.compare(a.first, b.first) > 0; });
  return g;
}

inline Polynomial from_gpoly(const VarSetPtr& vars, GPoly g) { return Polynomial::from_terms(vars, std::move(g)); }

inline void make_monic(GPoly& g) {
  if (g.empty() || g[0].second == 1) return;
  Rational inv = 1 / g[0].second;
  for (auto& t : g) t.second *= inv;
}

/// f[from..] - k * t * g[skip..], merged under ord.
inline GPoly sub_scaled(const GPoly& f, std::size_t from, const Rational& k, const Monomial& t, const GPoly& g,
                        std::size_t skip, const TermOrder& ord) {
  GPoly out;
  out.reserve(f.size() - from + g.size() - skip);
  std::size_t i = from, j = skip;
  std::optional<Monomial> gm;
  auto g_mono = [&](std::size_t idx) { return g[idx].first * t; };
  if (j < g.size()) gm = g_mono(j);
  while (i < f.size() || j < g.size()) {
    int c;
    if (i == f.size()) c = -1;
    else if (j == g.size()) c = 1;
    else c = ord.compare(f[i].first, *gm);
    if (c > 0) {
      out.push_back(f[i++]);
    } else if (c < 0) {
      out.emplace_back(std::move(*gm), -k * g[j].second);
      ++j;
      if (j < g.size()) gm = g_mono(j);
    } else {
      Rational s = f[i].second - k * g[j].second;
      if (s != 0) out.emplace_back(f[i].first, std::move(s));
      ++i;
      ++j;
      if (j < g.size()) gm = g_mono(j);
    }
  }
  return out;
}

struct Entry {
  GPoly poly;
  unsigned sugar = 0;
  bool active = true;
  const Monomial& lm() const { return poly.front().first; }
};

/// Full reduction of f by the active entries. The result's leading
/// coefficient is left as is.
inline GPoly reduce(GPoly f, const std::vector<Entry>& basis, const TermOrder& ord, std::size_t skip_index = SIZE_MAX,
                    unsigned* sugar = nullptr) {
  GPoly rem;
  while (!f.empty()) {
    const auto& [m, c] = f.front();
    const Entry* div = nullptr;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!basis[i].active || i == skip_index) continue;
      if (basis[i].lm().divides(m)) {
        div = &basis[i];
        break;
      }
    }
    if (div) {
      Rational k = c / div->poly.front().second;
      Monomial t = m / div->lm();
      if (sugar) *sugar = std::max(*sugar, t.total_degree() + div->sugar);
      f = sub_scaled(f, 1, k, t, div->poly, 1, ord);
    } else {
      rem.push_back(std::move(f.front()));
      f.erase(f.begin());
    }
  }
  return rem;
}

inline GPoly spoly(const Entry& a, const Entry& b, const TermOrder& ord) {
  Monomial l = lcm(a.lm(), b.lm());
  Monomial ta = l / a.lm();
  Monomial tb = l / b.lm();
  GPoly sa;
  sa.reserve(a.poly.size());
  Rational ia = 1 / a.poly.front().second;
  for (std::size_t i = 1; i < a.poly.size(); ++i) sa.emplace_back(a.poly[i].first * ta, a.poly[i].second * ia);
  Rational kb = 1 / b.poly.front().second;
  return sub_scaled(sa, 0, kb, tb, b.poly, 1, ord);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  Buchberger(const TermOrder& ord, const GroebnerOptions& opt) : ord_(ord), opt_(opt), trace_(std::getenv("DISCLAB_TRACE") != nullptr) {}

  std::vector<GPoly> run(std::vector<GPoly> gens) {
    start_ = std::chrono::steady_clock::now();
    const std::size_t nvars = nvars_of(gens);
    // Smallest generators first keeps the initial reductions cheap.
    std::stable_sort(gens.begin(), gens.end(), [&](const GPoly& a, const GPoly& b) {
      return ord_.compare(a.front().first, b.front().first) < 0;
    });
    for (auto& g : gens) {
      if (g.empty()) continue;
      unsigned s = sugar_of(g);
      g = reduce(std::move(g), basis_, ord_, SIZE_MAX, &s);
      if (g.empty()) continue;
      if (add(std::move(g), s)) return {{GTerm(Monomial(nvars), Rational(1))}};
    }
    while (!pairs_.empty()) {
      check_budget();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& p = pairs_[k];
        const auto& q = pairs_[best];
        if (p.sugar < q.sugar || (p.sugar == q.sugar && ord_.compare(p.lcm, q.lcm) < 0)) best = k;
      }
      Pair pr = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      ++stats.pairs_processed;
      unsigned sugar = pr.sugar;
      GPoly h = reduce(spoly(basis_[pr.i], basis_[pr.j], ord_), basis_, ord_, SIZE_MAX, &sugar);
      if (h.empty()) {
        ++stats.reductions_to_zero;
        continue;
      }
      if (add(std::move(h), sugar)) return {{GTerm(Monomial(nvars), Rational(1))}};
    }
    return reduced_basis();
  }

  GroebnerStats stats;

 private:
  static std::size_t nvars_of(const std::vector<GPoly>& gens) {
    for (const auto& g : gens)
      if (!g.empty()) return g.front().first.size();
    return 0;
  }

  static unsigned sugar_of(const GPoly& g) {
    unsigned s = 0;
    for (const auto& t : g) s = std::max(s, t.first.total_degree());
    return s;
  }

  void check_budget() {
    if (stats.pairs_processed >= opt_.max_pairs)
      throw Error(ErrorKind::BudgetExceeded, "Groebner pair budget of " + std::to_string(opt_.max_pairs) + " exhausted");
    if (opt_.max_seconds > 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (el > opt_.max_seconds)
        throw Error(ErrorKind::BudgetExceeded, "Groebner time budget of " + std::to_string(opt_.max_seconds) + " s exhausted");
    }
  }

  /// Gebauer-Moeller update. Returns true when h is a nonzero constant.
  bool add(GPoly h, unsigned sugar) {
    make_monic(h);
    if (trace_) {
      std::size_t bits = 0;
      for (auto& t : h) bits = std::max(bits, mpz_sizeinbase(t.second.get_num_mpz_t(), 2) + mpz_sizeinbase(t.second.get_den_mpz_t(), 2));
      std::fprintf(stderr, "add #%zu pairs=%zu terms=%zu deg=%u sugar=%u bits=%zu queue=%zu\n", basis_.size(), stats.pairs_processed, h.size(), h.front().first.total_degree(), sugar, bits, pairs_.size());
    }
    if (h.front().first.is_one()) return true;
    const std::size_t hi = basis_.size();
    const Monomial hlm = h.front().first;
    basis_.push_back(Entry{std::move(h), sugar, true});
    const Entry& he = basis_[hi];

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!basis_[g].active) continue;
      c.push_back({g, lcm(hlm, basis_[g].lm()), coprime(hlm, basis_[g].lm())});
    }
    // Chain criterion among the new pairs: drop (h,g1) if some other (h,g2)
    // has lcm dividing lcm(h,g1), preferring to keep coprime pairs as
    // witnesses.
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a].coprime) continue;
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (a == b || !c[b].keep) continue;
        if (c[b].lcm.divides(c[a].lcm) && (!(c[b].lcm == c[a].lcm) || b < a)) {
          c[a].keep = false;
          break;
        }
      }
    }
    // Equal lcms: keep a single representative, dropped entirely if any
    // member of the class is coprime (product criterion).
    std::vector<Cand> e;
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (!c[a].keep) continue;
      bool any_coprime = c[a].coprime;
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (c[b].keep && c[b].lcm == c[a].lcm) {
          any_coprime = any_coprime || c[b].coprime;
          c[b].keep = false;
        }
      if (any_coprime) {
        ++stats.pairs_skipped;
        continue;
      }
      e.push_back(c[a]);
    }
    // Old pairs whose lcm is strictly divisible by lm(h) in the GM sense.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + e.size());
    for (auto& p : pairs_) {
      if (hlm.divides(p.lcm) && !(lcm(basis_[p.i].lm(), hlm) == p.lcm) && !(lcm(basis_[p.j].lm(), hlm) == p.lcm)) {
        ++stats.pairs_skipped;
        continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& x : e) {
      const Entry& g = basis_[x.g];
      unsigned s = std::max(he.sugar - he.lm().total_degree(), g.sugar - g.lm().total_degree()) + x.lcm.total_degree();
      kept.push_back(Pair{x.g, hi, std::move(x.lcm), s});
    }
    pairs_ = std::move(kept);
    for (std::size_t g = 0; g < hi; ++g)
      if (basis_[g].active && hlm.divides(basis_[g].lm())) basis_[g].active = false;
    return false;
  }

  std::vector<GPoly> reduced_basis() {
    std::vector<GPoly> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!basis_[i].active) continue;
      GPoly tail(basis_[i].poly.begin() + 1, basis_[i].poly.end());
      GPoly r = reduce(std::move(tail), basis_, ord_, i);
      GPoly g;
      g.reserve(r.size() + 1);
      g.push_back(basis_[i].poly.front());
      for (auto& t : r) g.push_back(std::move(t));
      make_monic(g);
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [&](const GPoly& a, const GPoly& b) { return ord_.compare(a.front().first, b.front().first) < 0; });
    return out;
  }

  TermOrder ord_;
  GroebnerOptions opt_;
  std::vector<Entry> basis_;
  std::vector<Pair> pairs_;
  std::chrono::steady_clock::time_point start_;
  bool trace_ = false;
};

}  // namespace detail

/// Leading monomial of a nonzero polynomial under `ord`.
inline Monomial leading_monomial(const Polynomial& p, const TermOrder& ord) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero polynomial has no leading monomial");
  const Monomial* best = &p.terms()[0].first;
  for (const auto& t : p.terms())
    if (ord.compare(t.first, *best) > 0) best = &t.first;
  return *best;
}

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
inline Ideal buchberger(const Ideal& ideal, const GroebnerOptions& opt = {}, GroebnerStats* stats = nullptr) {
  if (ideal.generators.empty()) throw Error(ErrorKind::ZeroInput, "empty generator list");
  const auto& vars = ideal.generators.front().vars();
  std::vector<detail::GPoly> gens;
  for (const auto& g : ideal.generators) {
    if (!same_vars(g.vars(), vars)) throw Error(ErrorKind::VarSetMismatch, "generators over different variable sets");
    if (!g.is_zero()) gens.push_back(detail::to_gpoly(g, ideal.order));
  }
  Ideal out{{}, ideal.order, BasisState::Groebner};
  if (gens.empty()) return out;
  detail::Buchberger bb(ideal.order, opt);
  auto basis = bb.run(std::move(gens));
  if (stats) *stats = bb.stats;
  for (auto& g : basis) out.generators.push_back(detail::from_gpoly(vars, std::move(g)));
  return out;
}

/// Remainder of f on division by `basis` under `ord` (full reduction).
inline Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& ord) {
  std::vector<detail::Entry> entries;
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    if (!same_vars(b.vars(), f.vars())) throw Error(ErrorKind::VarSetMismatch, "divisor over a different variable set");
    entries.push_back(detail::Entry{detail::to_gpoly(b, ord), 0, true});
  }
  return detail::from_gpoly(f.vars(), detail::reduce(detail::to_gpoly(f, ord), entries, ord));
}

inline Polynomial normal_form(const Polynomial& f, const Ideal& basis) {
  if (basis.state != BasisState::Groebner) throw Error(ErrorKind::NotGroebner, "normal form needs a Groebner basis");
  return reduce(f, basis.generators, basis.order);
}

inline Polynomial spolynomial(const Polynomial& a, const Polynomial& b, const TermOrder& ord) {
  detail::Entry ea{detail::to_gpoly(a, ord), 0, true}, eb{detail::to_gpoly(b, ord), 0, true};
  return detail::from_gpoly(a.vars(), detail::spoly(ea, eb, ord));
}

/// Generators of the elimination ideal <gens> ∩ Q[vars \ drop], each in
/// primitive integer form.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::span<const std::size_t> drop,
                                         const GroebnerOptions& opt = {}, OrderKind kind = OrderKind::Block,
                                         GroebnerStats* stats = nullptr) {
  if (gens.empty()) return {};
  const auto& vars = gens.front().vars();
  std::vector<bool> mask(vars->size(), false);
  for (auto d : drop) {
    if (d >= mask.size()) throw Error(ErrorKind::UnknownVariable, "eliminated variable index out of range");
    mask[d] = true;
  }
  TermOrder ord = TermOrder::block(mask);
  if (kind == OrderKind::Lex) {
    // Lex with the dropped variables first; reorder the variable set so that
    // they lead.
    std::vector<std::string> names;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) names.push_back(vars->name(i));
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (!mask[i]) names.push_back(vars->name(i));
    auto lexvars = VarSet::make(names);
    std::vector<Polynomial> moved;
    for (const auto& g : gens) moved.push_back(embed(g, lexvars));
    std::vector<std::size_t> ndrop;
    for (std::size_t i = 0; i < drop.size(); ++i) ndrop.push_back(i);
    Ideal gb = buchberger(Ideal{moved, TermOrder::lex(), BasisState::Raw}, opt, stats);
    std::vector<Polynomial> out;
    for (const auto& g : gb.generators) {
      bool free = true;
      for (auto d : ndrop) free = free && !g.involves(d);
      if (free) out.push_back(primitive_part(embed(g, vars)));
    }
    return out;
  }
  if (kind == OrderKind::GrevLex)
    throw Error(ErrorKind::InputParse, "graded reverse lex is not an elimination order");
  Ideal gb = buchberger(Ideal{gens, ord, BasisState::Raw}, opt, stats);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators) {
    bool free = true;
    for (auto d : drop) free = free && !g.involves(d);
    if (free) out.push_back(primitive_part(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Discriminantal systems for parametric families

enum class LocusMode { Critical, Kkt, ActiveSubset };

/// f(x; p) with parameters p, a constraint set over the same variables, and
/// which variables are x (eliminated) versus parameters (kept).
struct FamilySpec {
  Polynomial f;
  ConstraintSet constraints;
  std::vector<std::size_t> x_vars;
  std::vector<std::size_t> params;
  LocusMode mode = LocusMode::Critical;
  std::optional<std::size_t> dehomog_var;
};

inline void validate_family(const FamilySpec& fam) {
  const auto& vs = fam.f.vars();
  std::vector<int> role(vs->size(), 0);
  for (auto x : fam.x_vars) {
    if (x >= role.size()) throw Error(ErrorKind::UnknownVariable, "x variable index out of range");
    role[x] = 1;
  }
  for (auto p : fam.params) {
    if (p >= role.size()) throw Error(ErrorKind::UnknownVariable, "parameter index out of range");
    if (role[p] == 1) throw Error(ErrorKind::VariableCollision, "variable '" + vs->name(p) + "' is both x and parameter");
    role[p] = 2;
  }
  auto check = [&](const Polynomial& q) {
    if (!same_vars(q.vars(), vs)) throw Error(ErrorKind::VarSetMismatch, "constraint over a different variable set");
  };
  for (const auto& g : fam.constraints.equalities) check(g);
  for (const auto& p : fam.constraints.inequalities) check(p);
}

/// {g, dg/dx_j (j != dehomog)} with g = f|_{dehomog = 1}; without a
/// dehomogenizing variable f is taken as is: {f, grad f}.
inline std::vector<Polynomial> critical_system(const FamilySpec& fam, std::optional<std::size_t> dehomog_var) {
  validate_family(fam);
  const auto& vs = fam.f.vars();
  Polynomial g = fam.f;
  if (dehomog_var) {
    if (!fam.f.is_homogeneous(fam.x_vars))
      throw Error(ErrorKind::NotHomogeneous, "critical system needs f homogeneous in the x variables");
    g = specialize(fam.f, {{*dehomog_var, Rational(1)}});
  }
  std::vector<Polynomial> sys{g};
  for (auto x : fam.x_vars) {
    if (dehomog_var && x == *dehomog_var) continue;
    sys.push_back(differentiate(g, x));
  }
  (void)vs;
  return sys;
}

/// The Lagrangian stationarity system over a variable set extended by fresh
/// multipliers (ordered x, multipliers, parameters, everything else).
struct KktSystem {
  VarSetPtr vars;
  std::vector<Polynomial> equations;
  std::vector<std::size_t> eliminate;  ///< x variables and multipliers
  std::vector<std::size_t> params;
};

inline KktSystem kkt_system_full(const FamilySpec& fam, const std::vector<std::size_t>& active) {
  validate_family(fam);
  const auto& vs = *fam.f.vars();
  const std::size_t m = fam.constraints.equalities.size();
  const std::size_t n = fam.x_vars.size();
  for (auto a : active)
    if (a >= fam.constraints.inequalities.size())
      throw Error(ErrorKind::IndexOutOfRange, "active inequality index out of range");
  if (m > n || active.size() > n - m)
    throw Error(ErrorKind::TooManyActive, std::to_string(active.size()) + " active inequalities exceed n - m = " +
                                              std::to_string(m > n ? 0 : n - m));
  std::vector<Polynomial> cons = fam.constraints.equalities;
  for (auto a : active) cons.push_back(fam.constraints.inequalities[a]);

  std::vector<std::string> names;
  std::vector<bool> placed(vs.size(), false);
  for (auto x : fam.x_vars) {
    names.push_back(vs.name(x));
    placed[x] = true;
  }
  std::vector<std::string> lam;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    std::string base = "lambda" + std::to_string(i + 1);
    while (vs.find(base)) base += "_";
    lam.push_back(base);
    names.push_back(base);
  }
  for (auto p : fam.params) {
    names.push_back(vs.name(p));
    placed[p] = true;
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!placed[i]) names.push_back(vs.name(i));
  auto nv = VarSet::make(names);

  KktSystem out;
  out.vars = nv;
  Polynomial f = embed(fam.f, nv);
  std::vector<Polynomial> c;
  for (const auto& q : cons) c.push_back(embed(q, nv));
  for (auto x : fam.x_vars) {
    std::size_t xi = nv->index(vs.name(x));
    Polynomial eq = differentiate(f, xi);
    for (std::size_t i = 0; i < c.size(); ++i)
      eq += Polynomial::variable(nv, lam[i]) * differentiate(c[i], xi);
    out.equations.push_back(std::move(eq));
  }
  out.equations.push_back(f);
  for (auto& q : c) out.equations.push_back(std::move(q));
  for (std::size_t i = 0; i < n + lam.size(); ++i) out.eliminate.push_back(i);
  for (auto p : fam.params) out.params.push_back(nv->index(vs.name(p)));
  return out;
}

inline std::vector<Polynomial> kkt_system(const FamilySpec& fam, const std::vector<std::size_t>& active) {
  return kkt_system_full(fam, active).equations;
}

struct LocusResult {
  std::vector<std::size_t> active;    ///< active inequality indices (kkt modes)
  std::vector<Polynomial> generators;  ///< over the family's variable set
  bool zero_ideal = false;             ///< nothing eliminable: no hypersurface found
  bool unit_ideal = false;             ///< empty locus
  GroebnerStats stats;
};

namespace detail {

inline LocusResult finish_locus(const std::vector<Polynomial>& gens, std::vector<Polynomial> elim,
                                const VarSetPtr& target, std::vector<std::size_t> active, GroebnerStats st) {
  (void)gens;
  LocusResult r;
  r.active = std::move(active);
  r.stats = st;
  for (auto& g : elim) r.generators.push_back(embed(g, target));
  r.zero_ideal = r.generators.empty();
  r.unit_ideal = r.generators.size() == 1 && r.generators[0].is_constant();
  return r;
}

}  // namespace detail

/// Eliminates x (and multipliers) from the family's critical or KKT
/// systems. ActiveSubset mode yields one result per admissible subset of
/// inequalities, ordered by subset bitmask.
inline std::vector<LocusResult> discriminantal_locus(const FamilySpec& fam, const GroebnerOptions& opt = {},
                                                     OrderKind kind = OrderKind::Block) {
  validate_family(fam);
  const auto& vs = fam.f.vars();
  std::vector<LocusResult> out;
  if (fam.mode == LocusMode::Critical) {
    auto sys = critical_system(fam, fam.dehomog_var);
    GroebnerStats st;
    auto elim = eliminate(sys, fam.x_vars, opt, kind, &st);
    out.push_back(detail::finish_locus(sys, std::move(elim), vs, {}, st));
    return out;
  }
  const std::size_t t = fam.constraints.inequalities.size();
  std::vector<std::vector<std::size_t>> subsets;
  if (fam.mode == LocusMode::Kkt) {
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < t; ++i) all.push_back(i);
    subsets.push_back(all);
  } else {
    const std::size_t m = fam.constraints.equalities.size();
    const std::size_t n = fam.x_vars.size();
    const std::size_t cap = m > n ? 0 : n - m;
    if (t >= 31) throw Error(ErrorKind::DimensionTooLarge, "too many inequalities to enumerate");
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < t; ++i)
        if (mask & (1u << i)) s.push_back(i);
      if (s.size() <= cap) subsets.push_back(std::move(s));
    }
  }
  for (auto& s : subsets) {
    auto sys = kkt_system_full(fam, s);
    GroebnerStats st;
    auto elim = eliminate(sys.equations, sys.eliminate, opt, kind, &st);
    out.push_back(detail::finish_locus(sys.equations, std::move(elim), vs, s, st));
  }
  return out;
}

}  // namespace disclab
