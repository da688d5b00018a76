#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "g2/errors.hpp"

namespace g2 {

// Exact rational number, always kept in lowest terms with positive denominator.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}                  // NOLINT: implicit by design
  Rat(int n) : v_(static_cast<long>(n)) {}  // NOLINT
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw input_error("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpz_class& z) : v_(z) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "n" or "n/d" in base 10.
  static Rat parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw input_error("cannot parse rational: " + text);
    if (q.get_den() == 0) throw input_error("rational with zero denominator");
    q.canonicalize();
    return Rat(q);
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw input_error("division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat inverse() const {
    if (is_zero()) throw input_error("inverse of zero rational");
    return Rat(mpq_class(1) / v_);
  }

  Rat pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rat base = *this, acc = 1;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const { return v_.get_str(); }

  std::string latex() const {
    if (is_integer()) return v_.get_str();
    std::string sgn_part = sign() < 0 ? "-" : "";
    mpz_class n = num();
    if (n < 0) n = -n;
    return sgn_part + "\\frac{" + n.get_str() + "}{" + den().get_str() + "}";
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

// p-adic valuation with +infinity (the valuation of zero).
struct PadicVal {
  bool infinite = false;
  long v = 0;

  static PadicVal infinity() { return PadicVal{true, 0}; }
  static PadicVal of(long value) { return PadicVal{false, value}; }

  friend bool operator==(const PadicVal& a, const PadicVal& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.v == b.v;
  }
  friend bool operator!=(const PadicVal& a, const PadicVal& b) { return !(a == b); }

  // a >= b in the valuation order (infinity is the largest element).
  bool at_least(const PadicVal& b) const {
    if (infinite) return true;
    if (b.infinite) return false;
    return v >= b.v;
  }

  friend PadicVal operator+(const PadicVal& a, const PadicVal& b) {
    if (a.infinite || b.infinite) return infinity();
    return of(a.v + b.v);
  }

  friend PadicVal min(const PadicVal& a, const PadicVal& b) {
    if (a.infinite) return b;
    if (b.infinite) return a;
    return of(a.v < b.v ? a.v : b.v);
  }

  std::string str() const { return infinite ? "+inf" : std::to_string(v); }
};

inline bool is_prime(unsigned long p) {
  if (p < 2) return false;
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

// v_p on nonzero rationals; vp(0) = +infinity. Rejects non-prime p.
inline PadicVal vp(const Rat& r, unsigned long p) {
  if (!is_prime(p)) throw input_error("p-adic valuation requires a prime p, got " + std::to_string(p));
  if (r.is_zero()) return PadicVal::infinity();
  mpz_class zp(p), tmp;
  mpz_class n = r.num(), d = r.den();
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), zp.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), d.get_mpz_t(), zp.get_mpz_t()));
  return PadicVal::of(vn - vd);
}

}  // namespace g2
