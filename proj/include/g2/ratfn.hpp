#pragma once

#include <map>
#include <optional>
#include <string>

#include "g2/poly.hpp"

namespace g2 {

// Rational function in normal form: gcd(num, den) = 1 and den has leading
// coefficient 1. Equality of normal forms is then plain coefficient equality.
class RatFn {
 public:
  RatFn() : num_(0), den_(1) {}
  RatFn(const Rat& c) : num_(c), den_(1) {}    // NOLINT: implicit by design
  RatFn(long n) : num_(Rat(n)), den_(1) {}     // NOLINT
  RatFn(int n) : num_(Rat(n)), den_(1) {}      // NOLINT
  RatFn(const Poly& p) : num_(p), den_(1) {}   // NOLINT
  RatFn(const Poly& num, const Poly& den) : num_(num), den_(den) { reduce(); }

  static RatFn var(Sym v) { return RatFn(Poly::var(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  Rat constant_value() const {
    if (!is_constant()) throw internal_error("constant_value on non-constant function");
    return num_.constant_value();
  }

  RatFn operator-() const { return from_reduced(-num_, den_); }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_.is_one() && b.den_.is_one()) return RatFn(a.num_ + b.num_);
    Poly g = gcd(a.den_, b.den_);
    if (g.is_one())
      return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly da = divexact(a.den_, g).value();
    Poly db = divexact(b.den_, g).value();
    return RatFn(a.num_ * db + b.num_ * da, a.den_ * db);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero() || b.is_zero()) return RatFn();
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly n = divexact(a.num_, g1).value() * divexact(b.num_, g2).value();
    Poly d = divexact(a.den_, g2).value() * divexact(b.den_, g1).value();
    return monicized(n, d);
  }

  RatFn inverse() const {
    if (is_zero()) throw input_error("inverse of the zero function");
    return monicized(den_, num_);
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }

  RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
  RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
  RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }
  RatFn& operator/=(const RatFn& o) { *this = *this / o; return *this; }

  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  RatFn pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFn acc = Rat(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return acc;
  }

  RatFn derivative(Sym v) const {
    Poly n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return RatFn(n, den_ * den_);
  }

  Rat eval(const std::map<Sym, Rat>& point) const {
    Rat d = den_.eval(point);
    if (d.is_zero()) throw input_error("evaluation point lies on the zero set of a denominator");
    return num_.eval(point) / d;
  }

  RatFn substitute(const std::map<Sym, RatFn>& bind) const;

  // Degree of a quasi-homogeneous function, nullopt when num or den fails to
  // be homogeneous for the grading.
  std::optional<long> weighted_degree(const Grading& g) const {
    auto dn = g2::weighted_degree(num_, g);
    auto dd = g2::weighted_degree(den_, g);
    if (!dn || !dd) return std::nullopt;
    return *dn - *dd;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const Poly& p) {
      std::string s = p.str();
      bool atom = p.is_monomial() && p.leading_coeff() == Rat(1);
      return atom ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
  }

  std::string latex() const {
    if (den_.is_one()) return num_.latex();
    return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
  }

 private:
  Poly num_, den_;

  void reduce() {
    if (den_.is_zero()) throw input_error("rational function with zero denominator");
    if (num_.is_zero()) { den_ = Poly(1); return; }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g).value();
      den_ = divexact(den_, g).value();
    }
    monicize();
  }

  void monicize() {
    Rat lc = den_.leading_coeff();
    if (lc != Rat(1)) {
      Rat inv = lc.inverse();
      num_.scale(inv);
      den_.scale(inv);
    }
  }

  // For products of already-coprime parts: only the monic normalization runs.
  static RatFn monicized(Poly n, Poly d) {
    if (d.is_zero()) throw input_error("rational function with zero denominator");
    RatFn f;
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    if (f.num_.is_zero()) { f.den_ = Poly(1); return f; }
    f.monicize();
    return f;
  }

  static RatFn from_reduced(Poly n, Poly d) {
    RatFn f;
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    return f;
  }
};

// Substitutes rational functions for variables in a polynomial.
inline RatFn substitute(const Poly& p, const std::map<Sym, RatFn>& bind) {
  std::array<std::vector<RatFn>, kNumSyms> powers;
  auto power = [&](int i, int e) -> const RatFn& {
    auto& tab = powers[i];
    if (tab.empty()) {
      auto it = bind.find(static_cast<Sym>(i));
      RatFn base = (it != bind.end()) ? it->second : RatFn::var(static_cast<Sym>(i));
      tab.push_back(Rat(1));
      tab.push_back(base);
    }
    while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * tab[1]);
    return tab[e];
  };
  RatFn acc;
  for (const auto& [e, c] : p.terms()) {
    RatFn term = Rat(c);
    for (int i = 0; i < kNumSyms; ++i)
      if (e[i]) term *= power(i, e[i]);
    acc += term;
  }
  return acc;
}

inline RatFn RatFn::substitute(const std::map<Sym, RatFn>& bind) const {
  RatFn d = g2::substitute(den_, bind);
  if (d.is_zero()) throw input_error("substitution lands in the zero set of a denominator");
  return g2::substitute(num_, bind) / d;
}

}  // namespace g2
