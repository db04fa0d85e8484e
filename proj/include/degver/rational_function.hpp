// Field of fractions of multivariate rational polynomials, canonical reduced form.
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "degver/polynomial.hpp"

namespace degver {

class SubstitutionError : public std::runtime_error {
 public:
  explicit SubstitutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Reduced fraction of polynomials; denominator monic under graded lex,
/// numerator and denominator coprime, zero stored as 0/1. Equality is
/// structural on the canonical form.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}   // NOLINT
  explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  static RationalFunction variable(const std::string& name) {
    return RationalFunction(Polynomial::variable(name));
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
  bool is_polynomial() const { return den_ == Polynomial(Rational(1)); }

  std::set<std::string> variables() const {
    auto v = num_.variables();
    auto w = den_.variables();
    v.insert(w.begin(), w.end());
    return v;
  }

  RationalFunction operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZeroError("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
    return RationalFunction(den_, num_);
  }

  RationalFunction pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(1);
    RationalFunction base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// Exact composition; unassigned variables pass through. Throws
  /// SubstitutionError when the denominator vanishes identically.
  RationalFunction substitute(const std::map<std::string, RationalFunction>& at) const {
    RationalFunction n = substitute_poly(num_, at);
    RationalFunction d = substitute_poly(den_, at);
    if (d.is_zero())
      throw SubstitutionError("denominator vanishes identically after substitution");
    return n / d;
  }

  /// Limit as var -> 0. Writes the value as var^v * u with u regular and
  /// nonzero at var = 0; v > 0 gives 0, v = 0 evaluates, v < 0 is a pole.
  struct LimitResult {
    bool exists;
    RationalFunction value;  // meaningful only when exists
    long valuation;
  };
  LimitResult limit_at_zero(const std::string& var) const {
    if (is_zero()) return {true, RationalFunction(), 0};
    long vn = num_.valuation_in(var);
    long vd = den_.valuation_in(var);
    long v = vn - vd;
    if (v < 0) return {false, RationalFunction(), v};
    if (v > 0) return {true, RationalFunction(), v};
    Polynomial n0 = num_.shift_down(var, static_cast<int>(vn)).at_zero(var);
    Polynomial d0 = den_.shift_down(var, static_cast<int>(vd)).at_zero(var);
    return {true, RationalFunction(n0, d0), 0};
  }

  /// Canonical printed form; parseable by parse_expr.
  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  static RationalFunction substitute_poly(const Polynomial& p,
                                          const std::map<std::string, RationalFunction>& at) {
    RationalFunction out;
    for (const auto& [m, c] : p.terms()) {
      RationalFunction term{c};
      for (const auto& [v, e] : m) {
        auto it = at.find(v);
        RationalFunction base = it == at.end() ? variable(v) : it->second;
        term *= base.pow(e);
      }
      out += term;
    }
    return out;
  }

  void reduce() {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial(Rational(1));
      return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!(g == Polynomial(Rational(1)))) {
      num_ = num_.divided_by(g);
      den_ = den_.divided_by(g);
    }
    Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
      Rational inv = lc.inverse();
      num_ *= inv;
      den_ *= inv;
    }
  }

  Polynomial num_, den_;
};

}  // namespace degver
