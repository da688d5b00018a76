#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2/rat.hpp"
#include "g2/symbols.hpp"

namespace g2 {

// Exponent vector over the fixed symbol namespace.
using Expvec = std::array<uint8_t, kNumSyms>;

inline constexpr Expvec kZeroExp{};

inline int exp_total(const Expvec& e) {
  int d = 0;
  for (int i = 0; i < kNumSyms; ++i) d += e[i];
  return d;
}

// Graded lexicographic order, largest first, so map::begin() is the leading term.
struct GrlexGreater {
  bool operator()(const Expvec& a, const Expvec& b) const {
    int da = exp_total(a), db = exp_total(b);
    if (da != db) return da > db;
    for (int i = 0; i < kNumSyms; ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

// Sparse multivariate polynomial with rational coefficients.
// Invariant: no stored coefficient is zero.
class Poly {
 public:
  using TermMap = std::map<Expvec, Rat, GrlexGreater>;

  Poly() = default;
  Poly(const Rat& c) {  // NOLINT: implicit by design
    if (!c.is_zero()) terms_[kZeroExp] = c;
  }
  Poly(long n) : Poly(Rat(n)) {}  // NOLINT
  Poly(int n) : Poly(Rat(n)) {}   // NOLINT

  static Poly var(Sym v) {
    Expvec e{};
    e[sym_index(v)] = 1;
    return monomial(e, 1);
  }

  static Poly monomial(const Expvec& e, const Rat& c) {
    Poly p;
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExp);
  }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == kZeroExp &&
           terms_.begin()->second == Rat(1);
  }

  // Value of a constant polynomial (zero polynomial gives 0).
  Rat constant_value() const {
    if (!is_constant()) throw internal_error("constant_value on non-constant polynomial");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
  }

  int total_degree() const {  // -1 for the zero polynomial
    return terms_.empty() ? -1 : exp_total(terms_.begin()->first);
  }

  int degree_in(Sym v) const {
    int d = 0, i = sym_index(v);
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[i]));
    return d;
  }

  const Expvec& leading_exp() const {
    if (terms_.empty()) throw internal_error("leading_exp of zero polynomial");
    return terms_.begin()->first;
  }
  const Rat& leading_coeff() const {
    if (terms_.empty()) throw internal_error("leading_coeff of zero polynomial");
    return terms_.begin()->second;
  }

  std::vector<Sym> vars() const {
    std::array<bool, kNumSyms> used{};
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < kNumSyms; ++i)
        if (e[i]) used[i] = true;
    std::vector<Sym> out;
    for (int i = 0; i < kNumSyms; ++i)
      if (used[i]) out.push_back(static_cast<Sym>(i));
    return out;
  }

  Poly operator-() const {
    Poly p;
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        p.add_term(exp_add(ea, eb), ca * cb);
    return p;
  }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  Poly& scale(const Rat& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend Poly operator*(const Rat& c, Poly p) { p.scale(c); return p; }
  friend Poly operator*(Poly p, const Rat& c) { p.scale(c); return p; }

  Poly pow(int e) const {
    if (e < 0) throw input_error("negative exponent on polynomial");
    Poly acc = 1, base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Coefficient of v^k, a polynomial in the remaining variables.
  Poly coeff_of(Sym v, int k) const {
    Poly p;
    int i = sym_index(v);
    for (const auto& [e, c] : terms_)
      if (e[i] == k) {
        Expvec e2 = e;
        e2[i] = 0;
        p.terms_[e2] = c;
      }
    return p;
  }

  // Coefficients by v-degree; result[k] does not involve v. Empty for zero.
  std::vector<Poly> univariate_in(Sym v) const {
    if (terms_.empty()) return {};
    std::vector<Poly> out(degree_in(v) + 1);
    int i = sym_index(v);
    for (const auto& [e, c] : terms_) {
      Expvec e2 = e;
      e2[i] = 0;
      out[e[i]].terms_[e2] = c;
    }
    return out;
  }

  static Poly from_univariate(const std::vector<Poly>& coeffs, Sym v) {
    Poly out;
    Poly xv = var(v);
    for (size_t k = 0; k < coeffs.size(); ++k)
      out += coeffs[k] * xv.pow(static_cast<int>(k));
    return out;
  }

  Poly derivative(Sym v) const {
    Poly p;
    int i = sym_index(v);
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        Expvec e2 = e;
        e2[i] -= 1;
        p.add_term(e2, c * Rat(e[i]));
      }
    return p;
  }

  // Full evaluation; every variable that occurs must be bound.
  Rat eval(const std::map<Sym, Rat>& point) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
      Rat m = c;
      for (int i = 0; i < kNumSyms; ++i)
        if (e[i]) {
          auto it = point.find(static_cast<Sym>(i));
          if (it == point.end())
            throw input_error("evaluation point does not bind " + std::string(kSymNames[i]));
          m *= it->second.pow(e[i]);
        }
      acc += m;
    }
    return acc;
  }

  // Positive gcd of all coefficients (0 for the zero polynomial).
  Rat content() const {
    if (terms_.empty()) return 0;
    mpz_class gn = 0, ld = 1;
    for (const auto& [e, c] : terms_) {
      mpz_class n = c.num();
      if (n < 0) n = -n;
      mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), n.get_mpz_t());
      mpz_class d = c.den();
      mpz_lcm(ld.get_mpz_t(), ld.get_mpz_t(), d.get_mpz_t());
    }
    return Rat(mpq_class(mpq_class(gn) / mpq_class(ld)));
  }

  // Divide out content and sign so coefficients are coprime integers with a
  // positive leading coefficient. Zero stays zero.
  Poly canonical() const {
    if (terms_.empty()) return Poly();
    Rat c = content();
    if (leading_coeff().sign() < 0) c = -c;
    Poly p = *this;
    p.scale(c.inverse());
    return p;
  }

  std::string str() const;
  std::string latex() const;

 private:
  TermMap terms_;

  void add_term(const Expvec& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static Expvec exp_add(const Expvec& a, const Expvec& b) {
    Expvec r{};
    for (int i = 0; i < kNumSyms; ++i) {
      int s = a[i] + b[i];
      if (s > 255) throw internal_error("monomial exponent overflow");
      r[i] = static_cast<uint8_t>(s);
    }
    return r;
  }
};

// Exact division: returns a quotient q with a = q*b, or nullopt when b does not
// divide a. Division by zero is an input error.
inline std::optional<Poly> divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw input_error("polynomial division by zero");
  Poly q, r = a;
  const Expvec& lb = b.leading_exp();
  while (!r.is_zero()) {
    const Expvec& lr = r.leading_exp();
    Expvec d{};
    for (int i = 0; i < kNumSyms; ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      d[i] = static_cast<uint8_t>(lr[i] - lb[i]);
    }
    Poly m = Poly::monomial(d, r.leading_coeff() / b.leading_coeff());
    q += m;
    r -= m * b;
  }
  return q;
}

namespace detail {

// Pseudo-remainder of f by g along v: repeatedly kills the leading v-term of f
// using lc_v(g)*f - lc_v(f)*v^(df-dg)*g, which preserves gcds up to content.
inline Poly prem_in(const Poly& f, const Poly& g, Sym v) {
  Poly r = f;
  int dg = g.degree_in(v);
  Poly lg = g.coeff_of(v, dg);
  while (!r.is_zero()) {
    int dr = r.degree_in(v);
    if (dr < dg) break;
    Poly lr = r.coeff_of(v, dr);
    Poly shift = Poly::var(v).pow(dr - dg);
    r = lg * r - lr * shift * g;
    r = r.canonical();
  }
  return r;
}

}  // namespace detail

inline Poly gcd(const Poly& a, const Poly& b);

namespace detail {

// gcd of the v-coefficients, i.e. the content of p viewed in (R[others])[v].
inline Poly content_in(const Poly& p, Sym v) {
  Poly g;
  for (const Poly& c : p.univariate_in(v)) g = gcd(g, c);
  return g;
}

}  // namespace detail

// Polynomial gcd over the rationals, normalized to coprime integer
// coefficients with positive leading coefficient. Primitive PRS on the lowest
// occurring variable, with exact-division fast paths.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.canonical();
  if (a.is_monomial() && b.is_monomial()) {
    Expvec e{};
    const Expvec& ea = a.leading_exp();
    const Expvec& eb = b.leading_exp();
    for (int i = 0; i < kNumSyms; ++i) e[i] = std::min(ea[i], eb[i]);
    return Poly::monomial(e, 1);
  }
  if (divexact(a, b)) return b.canonical();
  if (divexact(b, a)) return a.canonical();

  Sym v = Sym::a;
  bool found = false;
  for (int i = 0; i < kNumSyms && !found; ++i) {
    Sym cand = static_cast<Sym>(i);
    if (a.degree_in(cand) > 0 || b.degree_in(cand) > 0) {
      v = cand;
      found = true;
    }
  }
  if (!found) throw internal_error("gcd: non-constant polynomials without variables");

  if (a.degree_in(v) == 0) return gcd(a, detail::content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(detail::content_in(a, v), b);

  Poly ca = detail::content_in(a, v);
  Poly cb = detail::content_in(b, v);
  Poly c = gcd(ca, cb);
  Poly f = divexact(a, ca).value();
  Poly g = divexact(b, cb).value();
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  while (true) {
    Poly r = detail::prem_in(f, g, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return c.canonical();
    f = g;
    g = divexact(r, detail::content_in(r, v)).value().canonical();
  }
  Poly gp = divexact(g, detail::content_in(g, v)).value();
  return (c * gp).canonical();
}

// Weights for quasi-homogeneity checks; every variable a polynomial uses must
// carry a weight.
struct Grading {
  std::map<Sym, long> weights;

  long weight_of(Sym v) const {
    auto it = weights.find(v);
    if (it == weights.end())
      throw input_error("grading does not assign a weight to " + std::string(sym_name(v)));
    return it->second;
  }
};

// Weighted degree of a homogeneous polynomial; nullopt when the terms do not
// all share one weight. The zero polynomial reports degree 0.
inline std::optional<long> weighted_degree(const Poly& p, const Grading& g) {
  if (p.is_zero()) return 0;
  bool first = true;
  long deg = 0;
  for (const auto& [e, c] : p.terms()) {
    long w = 0;
    for (int i = 0; i < kNumSyms; ++i)
      if (e[i]) w += static_cast<long>(e[i]) * g.weight_of(static_cast<Sym>(i));
    if (first) {
      deg = w;
      first = false;
    } else if (w != deg) {
      return std::nullopt;
    }
  }
  return deg;
}

inline std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat ac = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < kNumSyms; ++i)
      if (e[i]) {
        if (!mono.empty()) mono += "*";
        mono += std::string(kSymNames[i]);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
    if (mono.empty()) {
      out += ac.str();
    } else if (ac == Rat(1)) {
      out += mono;
    } else {
      out += ac.str() + "*" + mono;
    }
  }
  return out;
}

inline std::string Poly::latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat ac = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? "-" : "+";
    }
    std::string mono;
    for (int i = 0; i < kNumSyms; ++i)
      if (e[i]) {
        mono += std::string(kSymLatex[i]);
        if (e[i] > 1) mono += "^{" + std::to_string(e[i]) + "}";
      }
    if (mono.empty()) {
      out += ac.latex();
    } else if (ac == Rat(1)) {
      out += mono;
    } else {
      out += ac.latex() + mono;
    }
  }
  return out;
}

}  // namespace g2
