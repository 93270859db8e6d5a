#pragma once

// Sparse multivariate polynomials over the rationals.
//
// A Polynomial is an immutable value: a shared variable set plus a term list
// kept sorted by descending graded-reverse-lex order, with no zero
// coefficients. Two equal polynomials therefore have identical term lists.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "disclab/error.hpp"

namespace disclab {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational pow(const Rational& base, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// VarSet

class VarSet {
 public:
  VarSet() = default;

  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
        throw Error(ErrorKind::InputParse, "invalid variable name '" + n + "'");
      for (char c : n)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
          throw Error(ErrorKind::InputParse, "invalid variable name '" + n + "'");
      if (!index_.emplace(n, i).second)
        throw Error(ErrorKind::VariableCollision, "duplicate variable '" + n + "'");
    }
  }

  static std::shared_ptr<const VarSet> make(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view n) const {
    auto it = index_.find(std::string(n));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(std::string_view n) const {
    auto i = find(n);
    if (!i) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(n) + "'");
    return *i;
  }

  bool operator==(const VarSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Parses "x1,x2,a" (whitespace ignored) into a variable list.
inline std::vector<std::string> split_names(std::string_view csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------
// Monomial

/// Exponent vector over a VarSet. Stored densely (one slot per variable);
/// absent variables simply carry exponent zero.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> e) : exp_(std::move(e)) {
    for (auto x : exp_) deg_ += x;
  }

  static Monomial unit(std::size_t nvars, std::size_t var, Exponent e = 1) {
    Monomial m(nvars);
    m.exp_[var] = e;
    m.deg_ = e;
    return m;
  }

  std::size_t size() const { return exp_.size(); }
  Exponent operator[](std::size_t i) const { return exp_[i]; }
  std::span<const Exponent> exponents() const { return exp_; }
  unsigned total_degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, Exponent e) {
    deg_ = deg_ - exp_[i] + e;
    exp_[i] = e;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.exp_.size());
    for (std::size_t i = 0; i < a.exp_.size(); ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// Quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.exp_.size());
    for (std::size_t i = 0; i < a.exp_.size(); ++i) r.exp_[i] = a.exp_[i] - b.exp_[i];
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.exp_.size());
    for (std::size_t i = 0; i < a.exp_.size(); ++i) {
      r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      r.deg_ += r.exp_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exp_.size(); ++i)
      if (a.exp_[i] && b.exp_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return deg_ == o.deg_ && exp_ == o.exp_; }

  std::size_t hash() const {
    std::size_t h = deg_;
    for (auto e : exp_) h = h * 1000003u + e;
    return h;
  }

 private:
  std::vector<Exponent> exp_;
  unsigned deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Three-way graded reverse lexicographic comparison (x_0 > x_1 > ...).
inline int compare_grevlex(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

inline int compare_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() : vars_(empty_vars()) {}
  explicit Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VarSetPtr vars, const Rational& c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.emplace_back(Monomial(p.vars_->size()), c);
    return p;
  }

  static Polynomial variable(VarSetPtr vars, std::size_t idx) {
    Polynomial p(std::move(vars));
    if (idx >= p.vars_->size()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
    p.terms_.emplace_back(Monomial::unit(p.vars_->size(), idx), Rational(1));
    return p;
  }

  static Polynomial variable(VarSetPtr vars, std::string_view name) {
    auto idx = vars->index(name);
    return variable(std::move(vars), idx);
  }

  static Polynomial monomial(VarSetPtr vars, Monomial m, const Rational& c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.emplace_back(std::move(m), c);
    return p;
  }

  /// Builds the canonical form from an arbitrary term list (duplicates merged,
  /// zeros dropped, sorted).
  static Polynomial from_terms(VarSetPtr vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return compare_grevlex(a.first, b.first) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second == 0) p.terms_.pop_back();
      } else if (t.second != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Trusts the caller: terms already sorted descending, distinct, nonzero.
  static Polynomial from_sorted_terms(VarSetPtr vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    p.terms_ = std::move(terms);
    return p;
  }

  const VarSetPtr& vars() const { return vars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  Rational constant_value() const {
    for (const auto& t : terms_)
      if (t.first.is_one()) return t.second;
    return Rational(0);
  }

  const Term& leading_term() const { return terms_.front(); }

  /// Total degree; std::nullopt stands for the degree of the zero polynomial.
  std::optional<unsigned> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first.total_degree();
  }

  /// Degree counting only the given variables.
  std::optional<unsigned> degree_in(std::span<const std::size_t> over) const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, partial_degree(t.first, over));
    return d;
  }

  std::optional<unsigned> degree_in(std::size_t var) const {
    std::size_t v[1] = {var};
    return degree_in(std::span<const std::size_t>(v));
  }

  bool is_homogeneous(std::span<const std::size_t> over) const {
    if (terms_.empty()) return true;
    unsigned d = partial_degree(terms_[0].first, over);
    for (const auto& t : terms_)
      if (partial_degree(t.first, over) != d) return false;
    return true;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_[0].first.total_degree();
    for (const auto& t : terms_)
      if (t.first.total_degree() != d) return false;
    return true;
  }

  /// Indices of variables that actually occur.
  std::vector<std::size_t> support() const {
    std::vector<bool> used(vars_->size(), false);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < used.size(); ++i)
        if (t.first[i]) used[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < used.size(); ++i)
      if (used[i]) out.push_back(i);
    return out;
  }

  bool involves(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.first[var]) return true;
    return false;
  }

  bool operator==(const Polynomial& o) const {
    if (!same_vars(vars_, o.vars_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].first == o.terms_[i].first) || terms_[i].second != o.terms_[i].second) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.vars_);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto [it, fresh] = acc.try_emplace(ma * mb);
        it->second += ca * cb;
      }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) out.emplace_back(m, std::move(c));
    std::sort(out.begin(), out.end(),
              [](const Term& x, const Term& y) { return compare_grevlex(x.first, y.first) > 0; });
    return from_sorted_terms(a.vars_, std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& c) {
    if (c == 0) return Polynomial(a.vars_);
    Polynomial r = a;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// this * c * m; the result stays sorted because monomial orders are
  /// multiplicative.
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
    return r;
  }

  /// Coefficient of a monomial (zero if absent).
  Rational coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return compare_grevlex(t.first, key) > 0;
    });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
  }

 private:
  static VarSetPtr empty_vars() {
    static const VarSetPtr e = std::make_shared<const VarSet>();
    return e;
  }

  static unsigned partial_degree(const Monomial& m, std::span<const std::size_t> over) {
    unsigned d = 0;
    for (auto i : over) d += m[i];
    return d;
  }

  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (!same_vars(a.vars_, b.vars_))
      throw Error(ErrorKind::VarSetMismatch, "operands live over different variable sets");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    Polynomial r(a.vars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = compare_grevlex(a.terms_[i].first, b.terms_[j].first);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? Rational(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      } else {
        Rational s = subtract ? Rational(a.terms_[i].second - b.terms_[j].second)
                              : Rational(a.terms_[i].second + b.terms_[j].second);
        if (s != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  VarSetPtr vars_;
  std::vector<Term> terms_;
};

inline Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(p.vars(), 1);
  Polynomial base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Printing and parsing

namespace detail {

inline std::string monomial_string(const VarSet& vs, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += vs.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace detail

/// Canonical text: descending graded-reverse-lex, "+"/"-" separators, no spaces.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c < 0;
    Rational a = abs(c);
    if (neg) out += '-';
    else if (!first) out += '+';
    first = false;
    if (m.is_one()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += detail::monomial_string(*p.vars(), m);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, VarSetPtr vars) : s_(text), vars_(std::move(vars)) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skip_ws();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw SyntaxError(pos_, std::string("expected '+' or '-', found '") + s_[pos_] + "'");
      }
      first = false;
      terms.push_back(parse_term(sign));
    }
    return Polynomial::from_terms(vars_, std::move(terms));
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial::Term parse_term(int sign) {
    skip_ws();
    Rational coef(sign);
    Monomial mono(vars_->size());
    bool need_factor = true;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Integer num(digits(), 10);
      Integer den(1);
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = Integer(digits(), 10);
        if (den == 0) throw SyntaxError(at, "zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      coef *= r;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      parse_factor(mono);
      while (true) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          parse_factor(mono);
        } else {
          break;
        }
      }
    }
    return {std::move(mono), coef};
  }

  void parse_factor(Monomial& mono) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      throw SyntaxError(pos_, "expected variable");
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    auto idx = vars_->find(name);
    if (!idx) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + name + "' at offset " + std::to_string(start));
    unsigned e = 1;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      std::size_t at = pos_;
      auto d = digits();
      unsigned long v = std::stoul(d);
      if (v == 0) throw SyntaxError(at, "exponent must be positive");
      e = static_cast<unsigned>(v);
    }
    mono.set(*idx, mono[*idx] + e);
  }

  std::string_view s_;
  VarSetPtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse(std::string_view text, const VarSetPtr& vars) {
  return detail::Parser(text, vars).parse();
}

namespace detail {

/// expr := ['+'|'-'] prod (('+'|'-') prod)*; prod := pow ('*' pow)*;
/// pow := atom ['^' int]; atom := int ['/' int] | var | '(' expr ')'.
class ExprParser {
 public:
  ExprParser(std::string_view text, VarSetPtr vars) : s_(text), vars_(std::move(vars)) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc(vars_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial t = prod();
    acc = neg ? -t : t;
    while (true) {
      if (eat('+')) acc += prod();
      else if (eat('-')) acc -= prod();
      else break;
    }
    return acc;
  }

  Polynomial prod() {
    Polynomial p = power();
    while (eat('*')) p *= power();
    return p;
  }

  Polynomial power() {
    Polynomial a = atom();
    if (eat('^')) {
      std::size_t at = pos_;
      auto d = digits();
      if (d.size() > 6) throw SyntaxError(at, "exponent too large");
      a = pow(a, static_cast<unsigned>(std::stoul(d)));
    }
    return a;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits(), 10), den(1);
      if (eat('/')) {
        std::size_t at = pos_;
        den = Integer(digits(), 10);
        if (den == 0) throw SyntaxError(at, "zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      return Polynomial::constant(vars_, r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = vars_->find(name);
      if (!idx)
        throw Error(ErrorKind::UnknownVariable, "unknown variable '" + name + "' at offset " + std::to_string(start));
      return Polynomial::variable(vars_, *idx);
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  VarSetPtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Accepts everything `parse` does plus parentheses, products of sums and
/// powers of parenthesized expressions; the result is expanded.
inline Polynomial parse_expression(std::string_view text, const VarSetPtr& vars) {
  return detail::ExprParser(text, vars).parse();
}

// ---------------------------------------------------------------------------
// Evaluation

struct Point {
  std::variant<std::vector<Rational>, std::vector<double>> coords;

  bool exact() const { return std::holds_alternative<std::vector<Rational>>(coords); }
  std::size_t size() const {
    return std::visit([](const auto& v) { return v.size(); }, coords);
  }
};

using Value = std::variant<Rational, double>;

inline Rational evaluate(const Polynomial& f, std::span<const Rational> pt) {
  if (pt.size() != f.vars()->size())
    throw Error(ErrorKind::MissingCoordinate,
                "point has " + std::to_string(pt.size()) + " coordinates, expected " + std::to_string(f.vars()->size()));
  Rational sum(0);
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= pow(pt[i], m[i]);
    sum += t;
  }
  return sum;
}

inline double evaluate(const Polynomial& f, std::span<const double> pt) {
  if (pt.size() != f.vars()->size())
    throw Error(ErrorKind::MissingCoordinate,
                "point has " + std::to_string(pt.size()) + " coordinates, expected " + std::to_string(f.vars()->size()));
  double sum = 0;
  for (const auto& [m, c] : f.terms()) {
    double t = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= pt[i];
    sum += t;
  }
  return sum;
}

inline Value evaluate(const Polynomial& f, const Point& pt) {
  if (pt.exact()) return evaluate(f, std::span<const Rational>(std::get<std::vector<Rational>>(pt.coords)));
  return evaluate(f, std::span<const double>(std::get<std::vector<double>>(pt.coords)));
}

// ---------------------------------------------------------------------------
// Calculus and substitution

inline Polynomial differentiate(const Polynomial& f, std::size_t var) {
  if (var >= f.vars()->size()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : f.terms()) {
    if (!m[var]) continue;
    Monomial d = m;
    d.set(var, m[var] - 1);
    out.emplace_back(std::move(d), c * m[var]);
  }
  // Differentiation can reorder terms under grevlex, so canonicalize.
  return Polynomial::from_terms(f.vars(), std::move(out));
}

inline Polynomial differentiate(const Polynomial& f, std::string_view var) {
  return differentiate(f, f.vars()->index(var));
}

inline std::vector<Polynomial> gradient(const Polynomial& f, std::span<const std::size_t> over) {
  std::vector<Polynomial> g;
  g.reserve(over.size());
  for (auto v : over) g.push_back(differentiate(f, v));
  return g;
}

inline std::vector<std::size_t> all_indices(const VarSet& vs) {
  std::vector<std::size_t> v(vs.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

inline std::vector<Polynomial> gradient(const Polynomial& f) {
  auto all = all_indices(*f.vars());
  return gradient(f, all);
}

inline std::vector<std::size_t> indices_of(const VarSet& vs, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(vs.index(n));
  return out;
}

/// Re-expresses f over another variable set, matching variables by name.
inline Polynomial embed(const Polynomial& f, const VarSetPtr& target) {
  if (same_vars(f.vars(), target)) return Polynomial::from_sorted_terms(target, {f.terms().begin(), f.terms().end()});
  const auto& src = *f.vars();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->find(src.name(i));
  std::vector<Polynomial::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    Monomial t(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!map[i]) throw Error(ErrorKind::UnknownVariable, "variable '" + src.name(i) + "' missing from target set");
      t.set(*map[i], m[i]);
    }
    out.emplace_back(std::move(t), c);
  }
  return Polynomial::from_terms(target, std::move(out));
}

/// Replaces variables by polynomials (over the same VarSet).
inline Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& subs) {
  const auto& vars = f.vars();
  Polynomial out(vars);
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, pow(subs.at(v), e)).first;
    return it->second;
  };
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    for (const auto& [v, p] : subs) {
      if (!same_vars(p.vars(), vars)) throw Error(ErrorKind::VarSetMismatch, "substitution over a different variable set");
      rest.set(v, 0);
    }
    Polynomial term = Polynomial::monomial(vars, rest, c);
    for (const auto& [v, p] : subs)
      if (m[v]) term = term * power_of(v, m[v]);
    out += term;
  }
  return out;
}

/// Sets the given variables to rational values; the VarSet is unchanged.
inline Polynomial specialize(const Polynomial& f, const std::map<std::size_t, Rational>& values) {
  std::vector<Polynomial::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    Rational k = c;
    for (const auto& [v, val] : values) {
      if (m[v]) k *= pow(val, m[v]);
      rest.set(v, 0);
    }
    if (k != 0) out.emplace_back(std::move(rest), std::move(k));
  }
  return Polynomial::from_terms(f.vars(), std::move(out));
}

/// x0^d f(x/x0) with the new variable appended to the variable set. Degree is
/// measured in `over` (all variables when empty), so parameters stay inert.
inline Polynomial homogenize(const Polynomial& f, const std::string& newvar, std::span<const std::size_t> over = {}) {
  const auto& vs = *f.vars();
  if (vs.find(newvar)) throw Error(ErrorKind::VariableCollision, "variable '" + newvar + "' already present");
  std::vector<std::size_t> all;
  if (over.empty()) {
    all = all_indices(vs);
    over = all;
  }
  auto names = vs.names();
  names.push_back(newvar);
  auto target = VarSet::make(std::move(names));
  auto d = f.degree_in(over);
  std::vector<Polynomial::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    unsigned k = 0;
    for (auto i : over) k += m[i];
    std::vector<Monomial::Exponent> e(m.exponents().begin(), m.exponents().end());
    e.push_back(*d - k);
    out.emplace_back(Monomial(std::move(e)), c);
  }
  return Polynomial::from_terms(target, std::move(out));
}

/// Sets `var` to one and drops it from the variable set.
inline Polynomial dehomogenize(const Polynomial& F, std::string_view var) {
  const auto& vs = *F.vars();
  auto idx = vs.index(var);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (i != idx) names.push_back(vs.name(i));
  auto target = VarSet::make(std::move(names));
  std::vector<Polynomial::Term> out;
  out.reserve(F.size());
  for (const auto& [m, c] : F.terms()) {
    std::vector<Monomial::Exponent> e;
    e.reserve(m.size() - 1);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != idx) e.push_back(m[i]);
    out.emplace_back(Monomial(std::move(e)), c);
  }
  return Polynomial::from_terms(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Content, normalization and exact division

/// Positive rational c such that f/c has coprime integer coefficients.
inline Rational content(const Polynomial& f) {
  if (f.is_zero()) return Rational(0);
  Integer g(0), l(1);
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return c;
}

/// Divides out the content and flips the sign so the leading (graded
/// reverse-lex) coefficient is positive. Zero stays zero.
inline Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Rational c = content(f);
  if (f.leading_term().second < 0) c = -c;
  Rational inv = 1 / c;
  return f * inv;
}

/// Exact multivariate division; throws if b does not divide a.
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "division by the zero polynomial");
  if (b.is_constant()) return a * (1 / b.constant_value());
  Polynomial q(a.vars()), r = a;
  const auto& [lm, lc] = b.leading_term();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading_term();
    if (!lm.divides(rm)) throw Error(ErrorKind::DimensionMismatch, "inexact polynomial division");
    Monomial t = rm / lm;
    Rational k = rc / lc;
    q += Polynomial::monomial(a.vars(), t, k);
    r -= b.mul_term(t, k);
  }
  return q;
}

/// Splits f by the exponents of `over`: maps each exponent pattern to its
/// coefficient polynomial in the remaining variables.
inline std::map<std::vector<Monomial::Exponent>, Polynomial> coefficients_in(
    const Polynomial& f, std::span<const std::size_t> over) {
  std::map<std::vector<Monomial::Exponent>, std::vector<Polynomial::Term>> buckets;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Exponent> key;
    key.reserve(over.size());
    Monomial rest = m;
    for (auto i : over) {
      key.push_back(m[i]);
      rest.set(i, 0);
    }
    buckets[key].emplace_back(std::move(rest), c);
  }
  std::map<std::vector<Monomial::Exponent>, Polynomial> out;
  for (auto& [k, ts] : buckets) out.emplace(k, Polynomial::from_terms(f.vars(), std::move(ts)));
  return out;
}

}  // namespace disclab
