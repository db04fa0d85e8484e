// Sparse multivariate polynomials over the rationals, graded-lex canonical form.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "degver/rational.hpp"

namespace degver {

/// Power product, variable name -> exponent (> 0 only). Empty map is 1.
using Monomial = std::map<std::string, int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

/// Graded lexicographic order, variables ranked by name. Returns true when a
/// comes strictly before b, i.e. a is the *larger* monomial (leading first).
struct GradedLexBefore {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second != ib->second) return ia->second > ib->second;
      ++ia;
      ++ib;
    }
    return false;  // equal (both exhausted simultaneously when degrees match)
  }
};

inline bool divides(const Monomial& a, const Monomial& b) {
  // a | b
  for (const auto& [v, e] : a) {
    auto it = b.find(v);
    if (it == b.end() || it->second < e) return false;
  }
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b) {
    int& x = r[v];
    x += e;
    if (x == 0) r.erase(v);
  }
  return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  // a / b, assumes b | a
  Monomial r = a;
  for (const auto& [v, e] : b) {
    int& x = r[v];
    x -= e;
    if (x == 0) r.erase(v);
  }
  return r;
}

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexBefore>;

  Polynomial() = default;
  explicit Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial variable(const std::string& name, int exp = 1) {
    Polynomial p;
    if (exp == 0) return Polynomial(Rational(1));
    p.terms_[Monomial{{name, exp}}] = Rational(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  /// Constant term (the value, for constant polynomials).
  Rational constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const TermMap& terms() const { return terms_; }

  /// Leading term under graded lex.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

  int degree_in(const std::string& var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
  }

  /// Smallest exponent of var across all terms (the var-adic valuation); -1 for zero.
  int valuation_in(const std::string& var) const {
    if (terms_.empty()) return -1;
    int v = -1;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      int e = it == m.end() ? 0 : it->second;
      v = (v < 0) ? e : std::min(v, e);
      if (v == 0) break;
    }
    return v;
  }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m) out.insert(v);
    return out;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial r(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base = (e >>= 1) ? base * base : base;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Rational content with the sign of the leading coefficient;
  /// dividing by it yields coprime integer coefficients, positive lead.
  Rational content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
      g = gcd(g, c.numerator());
      l = lcm(l, c.denominator());
    }
    Rational r{g, l};
    return leading_coefficient().is_negative() ? -r : r;
  }

  Polynomial primitive_part() const {
    if (terms_.empty()) return *this;
    return *this * content().inverse();
  }

  /// Exact division; throws std::logic_error when the division is not exact.
  Polynomial divided_by(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Polynomial q, r = *this;
    while (!r.is_zero()) {
      const Monomial& lm = r.leading_monomial();
      if (!divides(d.leading_monomial(), lm)) throw std::logic_error("inexact polynomial division");
      Monomial qm = mono_div(lm, d.leading_monomial());
      Rational qc = r.leading_coefficient() / d.leading_coefficient();
      Polynomial qt;
      qt.terms_[qm] = qc;
      q.add_term(qm, qc);
      r -= qt * d;
    }
    return q;
  }

  /// Polynomial gcd, primitive with positive leading coefficient; gcd(0,0)=0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// View as univariate in var: exponent -> coefficient polynomial.
  std::map<int, Polynomial> coefficients_in(const std::string& var) const {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      int e = it == m.end() ? 0 : it->second;
      Monomial rest = m;
      rest.erase(var);
      out[e].add_term(rest, c);
    }
    return out;
  }

  /// Substitutes rational values for a subset of the variables.
  Polynomial evaluate(const std::map<std::string, Rational>& at) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Rational coeff = c;
      Monomial rest;
      for (const auto& [v, e] : m) {
        auto it = at.find(v);
        if (it == at.end())
          rest[v] = e;
        else
          coeff *= it->second.pow(e);
      }
      out.add_term(rest, coeff);
    }
    return out;
  }

  /// Drops every term containing var (i.e. evaluates var := 0).
  Polynomial at_zero(const std::string& var) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
      if (m.find(var) == m.end()) out.add_term(m, c);
    return out;
  }

  /// Divides out var^k from every term (assumes valuation_in(var) >= k).
  Polynomial shift_down(const std::string& var, int k) const {
    if (k == 0) return *this;
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Monomial r = m;
      auto it = r.find(var);
      int e = it == r.end() ? 0 : it->second;
      if (e < k) throw std::logic_error("shift_down below valuation");
      if (e == k)
        r.erase(var);
      else
        r[var] = e - k;
      out.add_term(r, c);
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = c.abs();
      if (first) {
        if (c.is_negative()) os << "-";
        first = false;
      } else {
        os << (c.is_negative() ? " - " : " + ");
      }
      bool wrote_coeff = false;
      if (m.empty() || !a.is_one()) {
        os << a.str();
        wrote_coeff = true;
      }
      for (const auto& [v, e] : m) {
        if (wrote_coeff) os << "*";
        os << v;
        if (e != 1) os << "^" << e;
        wrote_coeff = true;
      }
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

namespace detail {

/// Pseudo-remainder of a by b with respect to var (b nonzero in var).
inline Polynomial prem(const Polynomial& a, const Polynomial& b, const std::string& var) {
  int db = b.degree_in(var);
  auto bc = b.coefficients_in(var);
  Polynomial lb = bc.rbegin()->second;  // leading coefficient of b in var
  Polynomial r = a;
  int dr = r.degree_in(var);
  while (!r.is_zero() && (dr = r.degree_in(var)) >= db) {
    auto rc = r.coefficients_in(var);
    Polynomial lr = rc.rbegin()->second;
    // r := lb*r - lr*x^(dr-db)*b
    r = lb * r - lr * Polynomial::variable(var, dr - db) * b;
    if (!r.is_zero() && r.degree_in(var) == dr)
      throw std::logic_error("pseudo-division failed to reduce degree");
  }
  return r;
}

inline Polynomial content_in(const Polynomial& p, const std::string& var) {
  Polynomial g;
  for (const auto& [e, c] : p.coefficients_in(var)) g = Polynomial::gcd(g, c);
  return g;
}

}  // namespace detail

inline Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));

  auto va = a.variables(), vb = b.variables();
  std::set<std::string> all;
  all.insert(va.begin(), va.end());
  all.insert(vb.begin(), vb.end());
  const std::string var = *all.rbegin();  // main variable: last in name order

  if (va.find(var) == va.end()) return gcd(a, detail::content_in(b, var));
  if (vb.find(var) == vb.end()) return gcd(b, detail::content_in(a, var));

  Polynomial ca = detail::content_in(a, var);
  Polynomial cb = detail::content_in(b, var);
  Polynomial g = gcd(ca, cb);
  Polynomial u = a.divided_by(ca);
  Polynomial v = b.divided_by(cb);
  if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
  // primitive PRS
  while (!v.is_zero()) {
    Polynomial r = detail::prem(u, v, var);
    u = v;
    if (r.is_zero()) {
      v = r;
    } else {
      v = r.divided_by(detail::content_in(r, var)).primitive_part();
    }
  }
  if (u.degree_in(var) == 0) return g.primitive_part();
  Polynomial pp = u.divided_by(detail::content_in(u, var));
  return (g * pp).primitive_part();
}

}  // namespace degver
