#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2/bigcell.hpp"

namespace g2 {

// Evaluate a polynomial with values from any of the coefficient rings used
// here (Rat, RatFn, Poly). Missing bindings are an input error.
template <typename R>
R eval_poly_in(const Poly& f, const std::map<Sym, R>& vals) {
  R out = ring_cast<R>(Rat(0));
  for (const auto& [e, c] : f.terms()) {
    R term = ring_cast<R>(c);
    for (int i = 0; i < kNumSyms; ++i) {
      if (e[i] == 0) continue;
      auto it = vals.find(static_cast<Sym>(i));
      if (it == vals.end())
        throw input_error("no value bound for " + std::string(sym_name(static_cast<Sym>(i))));
      for (uint8_t k = 0; k < e[i]; ++k) term = term * it->second;
    }
    out = out + term;
  }
  return out;
}

// Multiplication law of the opposite unipotent radical in exponential
// coordinates: exp(y) exp(y') = exp(z). The five polynomials below were
// computed once from log(exp(y) exp(y')) and are frozen here; the group-law
// certificate recomputes that product and compares.
struct NbarLaw {
  Poly z10, z11, z21, z31, z32;

  std::array<const Poly*, 5> as_array() const { return {&z10, &z11, &z21, &z31, &z32}; }
};

inline const NbarLaw& nbar_law() {
  static const NbarLaw law = [] {
    auto v = [](Sym s) { return Poly::var(s); };
    Rat half(1, 2), three_half(3, 2);
    NbarLaw l;
    l.z10 = v(Sym::y10) + v(Sym::y10p);
    l.z11 = v(Sym::y11) + v(Sym::y11p);
    l.z21 = v(Sym::y21) + v(Sym::y21p) + v(Sym::y11) * v(Sym::y10p) -
            v(Sym::y10) * v(Sym::y11p);
    l.z31 = v(Sym::y31) + v(Sym::y31p) +
            (v(Sym::y10) * v(Sym::y10) * v(Sym::y11p) -
             v(Sym::y10) * v(Sym::y11) * v(Sym::y10p) -
             v(Sym::y10) * v(Sym::y10p) * v(Sym::y11p) +
             v(Sym::y11) * v(Sym::y10p) * v(Sym::y10p))
                .scale(half) +
            (v(Sym::y21) * v(Sym::y10p) - v(Sym::y10) * v(Sym::y21p)).scale(three_half);
    l.z32 = v(Sym::y32) + v(Sym::y32p) +
            (v(Sym::y10) * v(Sym::y11) * v(Sym::y11p) -
             v(Sym::y10) * v(Sym::y11p) * v(Sym::y11p) -
             v(Sym::y11) * v(Sym::y11) * v(Sym::y10p) +
             v(Sym::y11) * v(Sym::y10p) * v(Sym::y11p))
                .scale(half) +
            (v(Sym::y21) * v(Sym::y11p) - v(Sym::y11) * v(Sym::y21p)).scale(three_half);
    return l;
  }();
  return law;
}

namespace detail {

inline const Sym kYSyms[5] = {Sym::y10, Sym::y11, Sym::y21, Sym::y31, Sym::y32};
inline const Sym kYpSyms[5] = {Sym::y10p, Sym::y11p, Sym::y21p, Sym::y31p, Sym::y32p};
inline const Sym kYqSyms[5] = {Sym::y10q, Sym::y11q, Sym::y21q, Sym::y31q, Sym::y32q};

template <typename R>
std::map<Sym, R> law_bindings(const NbarCoords<R>& u, const NbarCoords<R>& v) {
  std::map<Sym, R> m;
  auto ua = u.as_array(), va = v.as_array();
  for (int i = 0; i < 5; ++i) {
    m.emplace(kYSyms[i], *ua[i]);
    m.emplace(kYpSyms[i], *va[i]);
  }
  return m;
}

}  // namespace detail

template <typename R>
NbarCoords<R> nbar_mul(const NbarCoords<R>& u, const NbarCoords<R>& v) {
  auto b = detail::law_bindings(u, v);
  const NbarLaw& l = nbar_law();
  return NbarCoords<R>{eval_poly_in(l.z10, b), eval_poly_in(l.z11, b),
                       eval_poly_in(l.z21, b), eval_poly_in(l.z31, b),
                       eval_poly_in(l.z32, b)};
}

// Inverse in exponential coordinates is negation; certified against the
// multiplication law by the group-law certificate.
template <typename R>
NbarCoords<R> nbar_inverse(const NbarCoords<R>& u) {
  R z = ring_cast<R>(Rat(0));
  return NbarCoords<R>{z - u.y10, z - u.y11, z - u.y21, z - u.y31, z - u.y32};
}

// Two readings of an ambiguous source for the two cubic coordinates of the
// law; exactly one of each pair can satisfy the identity axiom z(y, 0) = y.
struct LawReading {
  std::string name;
  Poly z31, z32;
  bool identity_axiom = false;
  bool matches_frozen = false;
};

inline std::vector<LawReading> law_readings() {
  auto v = [](Sym s) { return Poly::var(s); };
  Rat half(1, 2), three_half(3, 2);
  const NbarLaw& l = nbar_law();

  // common quartet of quadratic-in-two-letters terms for z31 with a pluggable
  // first factor f in place of the ambiguous -1/2 y10 y11 f term
  auto z31_with = [&](const Poly& f) {
    return v(Sym::y31) + v(Sym::y31p) +
           (v(Sym::y11) * v(Sym::y10p) * v(Sym::y10p) +
            v(Sym::y10) * v(Sym::y10) * v(Sym::y11p) -
            v(Sym::y10) * v(Sym::y10p) * v(Sym::y11p) - v(Sym::y10) * v(Sym::y11) * f)
               .scale(half) +
           (v(Sym::y21) * v(Sym::y10p) - v(Sym::y10) * v(Sym::y21p)).scale(three_half);
  };
  // z32 with a pluggable final letter in the -1/2 y11 y21-or-y21' term
  auto z32_with = [&](const Poly& g) {
    return v(Sym::y32) + v(Sym::y32p) +
           (v(Sym::y10) * v(Sym::y11) * v(Sym::y11p) -
            v(Sym::y11) * v(Sym::y11) * v(Sym::y10p) +
            v(Sym::y11) * v(Sym::y10p) * v(Sym::y11p) -
            v(Sym::y10) * v(Sym::y11p) * v(Sym::y11p) - v(Sym::y11) * g)
               .scale(half) +
           v(Sym::y21) * v(Sym::y11p) * Poly(three_half) - v(Sym::y11) * v(Sym::y21p);
  };

  auto check = [&](std::string name, Poly z31, Poly z32) {
    LawReading r;
    r.name = std::move(name);
    r.z31 = std::move(z31);
    r.z32 = std::move(z32);
    std::map<Sym, Poly> at_zero;
    for (int i = 0; i < 5; ++i) {
      at_zero.emplace(detail::kYSyms[i], Poly::var(detail::kYSyms[i]));
      at_zero.emplace(detail::kYpSyms[i], Poly(Rat(0)));
    }
    r.identity_axiom = eval_poly_in(r.z31, at_zero) == Poly::var(Sym::y31) &&
                       eval_poly_in(r.z32, at_zero) == Poly::var(Sym::y32);
    r.matches_frozen = r.z31 == l.z31 && r.z32 == l.z32;
    return r;
  };

  std::vector<LawReading> out;
  out.push_back(check("primed-letter", z31_with(v(Sym::y10p)), z32_with(v(Sym::y21p))));
  out.push_back(check("unprimed-letter", z31_with(v(Sym::y10) + v(Sym::y10p)),
                      z32_with(v(Sym::y21))));
  return out;
}

struct GroupLawCertificate {
  bool matches_exp_route = false;
  bool identity_axiom = false;
  bool inverse_axiom = false;
  bool associative = false;
  std::vector<LawReading> readings;
  bool pass = false;
};

// Recompute the law from the matrix exponentials and check the group axioms
// on the level of polynomial identities. Associativity runs in 15 variables.
inline GroupLawCertificate group_law_certificate() {
  GroupLawCertificate c;
  const NbarLaw& l = nbar_law();

  NbarCoords<RatFn> y{RatFn::var(Sym::y10), RatFn::var(Sym::y11), RatFn::var(Sym::y21),
                      RatFn::var(Sym::y31), RatFn::var(Sym::y32)};
  NbarCoords<RatFn> yp{RatFn::var(Sym::y10p), RatFn::var(Sym::y11p),
                       RatFn::var(Sym::y21p), RatFn::var(Sym::y31p),
                       RatFn::var(Sym::y32p)};
  auto z = nbar_from_group(nbar_group(y) * nbar_group(yp));
  if (!z) throw internal_error("product of opposite-radical elements left the radical");
  auto za = z->as_array();
  auto la = l.as_array();
  c.matches_exp_route = true;
  for (int i = 0; i < 5; ++i)
    c.matches_exp_route =
        c.matches_exp_route && za[i]->is_polynomial() && za[i]->num() == *la[i];

  // identity and inverse axioms, as polynomial identities in five variables
  NbarCoords<Poly> yv{Poly::var(Sym::y10), Poly::var(Sym::y11), Poly::var(Sym::y21),
                      Poly::var(Sym::y31), Poly::var(Sym::y32)};
  NbarCoords<Poly> zero{};
  c.identity_axiom = nbar_mul(yv, zero) == yv && nbar_mul(zero, yv) == yv;
  auto w = nbar_mul(yv, nbar_inverse(yv));
  auto w2 = nbar_mul(nbar_inverse(yv), yv);
  c.inverse_axiom = w == zero && w2 == zero;

  // associativity in 15 variables
  NbarCoords<Poly> ypv{Poly::var(Sym::y10p), Poly::var(Sym::y11p), Poly::var(Sym::y21p),
                       Poly::var(Sym::y31p), Poly::var(Sym::y32p)};
  NbarCoords<Poly> yqv{Poly::var(Sym::y10q), Poly::var(Sym::y11q), Poly::var(Sym::y21q),
                       Poly::var(Sym::y31q), Poly::var(Sym::y32q)};
  c.associative = nbar_mul(nbar_mul(yv, ypv), yqv) == nbar_mul(yv, nbar_mul(ypv, yqv));

  c.readings = law_readings();
  bool readings_ok = false;
  for (const LawReading& r : c.readings)
    readings_ok = readings_ok || (r.identity_axiom && r.matches_frozen);
  c.pass = c.matches_exp_route && c.identity_axiom && c.inverse_axiom &&
           c.associative && readings_ok;
  return c;
}

// ---- valuation boxes

struct ValVec {
  std::array<PadicVal, 5> v;

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < 5; ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
  }
};

inline ValVec nbar_valuations(const NbarCoords<Rat>& y, unsigned long p) {
  return ValVec{{vp(y.y10, p), vp(y.y11, p), vp(y.y21, p), vp(y.y31, p), vp(y.y32, p)}};
}

// Coordinatewise valuation floors (-k^2, -k, -k^3, -k^5, -k^4) defining the
// compact box at level kappa.
struct KappaBox {
  long kappa = 1;
  std::array<long, 5> floors{};

  static KappaBox at(long kappa) {
    if (kappa < 1) throw input_error("box level must be at least 1");
    KappaBox b;
    b.kappa = kappa;
    long k2 = kappa * kappa;
    b.floors = {-k2, -kappa, -k2 * kappa, -k2 * k2 * kappa, -k2 * k2};
    return b;
  }

  bool contains(const ValVec& w) const {
    for (int i = 0; i < 5; ++i)
      if (!w.v[i].at_least(PadicVal::of(floors[i]))) return false;
    return true;
  }
};

enum class TropMode {
  kPlain,          // valuations of the structure constants ignored; p >= 5 only
  kConstantAware,  // valuations of 1/2 and 3/2 included; any p
};

namespace detail {

inline PadicVal scale_val(long e, const PadicVal& v) {
  if (v.infinite) return PadicVal::infinity();
  return PadicVal::of(e * v.v);
}

// Lower bound for the valuation of f at inputs with the given coordinate
// valuations: min over monomials of the sum of contributions.
inline PadicVal trop_poly_bound(const Poly& f, const std::map<Sym, PadicVal>& vals,
                                unsigned long p, TropMode mode) {
  PadicVal best = PadicVal::infinity();
  for (const auto& [e, c] : f.terms()) {
    PadicVal t = mode == TropMode::kConstantAware ? vp(c, p) : PadicVal::of(0);
    for (int i = 0; i < kNumSyms; ++i) {
      if (e[i] == 0) continue;
      auto it = vals.find(static_cast<Sym>(i));
      if (it == vals.end())
        throw internal_error("no valuation bound for " +
                             std::string(sym_name(static_cast<Sym>(i))));
      t = t + scale_val(e[i], it->second);
    }
    best = min(best, t);
  }
  return best;
}

inline void require_plain_ok(unsigned long p, TropMode mode) {
  if (!is_prime(p))
    throw input_error("tropical bounds require a prime p, got " + std::to_string(p));
  if (mode == TropMode::kPlain && p < 5)
    throw input_error("plain tropical bounds need p >= 5 so the structure constants are units");
}

}  // namespace detail

// Coordinatewise lower bound for the valuations of a product, from the frozen
// law alone. Sound: the true valuation of each coordinate of nbar_mul(u, v)
// is >= the bound whenever the inputs meet theirs.
inline ValVec trop_mul_bound(const ValVec& a, const ValVec& b, unsigned long p,
                             TropMode mode) {
  detail::require_plain_ok(p, mode);
  std::map<Sym, PadicVal> vals;
  for (int i = 0; i < 5; ++i) {
    vals.emplace(detail::kYSyms[i], a.v[i]);
    vals.emplace(detail::kYpSyms[i], b.v[i]);
  }
  const NbarLaw& l = nbar_law();
  auto la = l.as_array();
  ValVec out;
  for (int i = 0; i < 5; ++i)
    out.v[i] = detail::trop_poly_bound(*la[i], vals, p, mode);
  return out;
}

// Is the box at this level closed under multiplication, certified purely from
// the tropical bound on the law?
inline bool box_tropically_closed(long kappa, unsigned long p, TropMode mode) {
  KappaBox box = KappaBox::at(kappa);
  ValVec floors;
  for (int i = 0; i < 5; ++i) floors.v[i] = PadicVal::of(box.floors[i]);
  ValVec bound = trop_mul_bound(floors, floors, p, mode);
  return box.contains(bound);
}

// Smallest level from which the boxes stay closed through kappa_max.
inline long minimal_stable_kappa(unsigned long p, TropMode mode, long kappa_max) {
  detail::require_plain_ok(p, mode);
  if (kappa_max < 1) throw input_error("empty level range");
  long first = -1;
  for (long k = kappa_max; k >= 1; --k) {
    if (box_tropically_closed(k, p, mode)) first = k;
    else break;
  }
  if (first < 0)
    throw input_error("no closed level found up to the requested maximum");
  return first;
}

// ---- conjugation actions on the opposite radical

// Conjugation by the central torus of the Levi scales each coordinate by a
// fixed power of t; the weights are derived, not assumed.
struct CentralConjCertificate {
  std::array<long, 5> weights{};  // coordinate i scales by t^{-weights[i]}
  bool derived = false;
};

inline CentralConjCertificate central_conj_certificate() {
  CentralConjCertificate c;
  RatFn t = RatFn::var(Sym::t);
  Mat7<RatFn> z = embed_levi(GL2Elem<RatFn>{t, RatFn(), RatFn(), t});
  Mat7<RatFn> zi = embed_levi(GL2Elem<RatFn>{t, RatFn(), RatFn(), t}.inverse());
  NbarCoords<RatFn> y{RatFn::var(Sym::y10), RatFn::var(Sym::y11), RatFn::var(Sym::y21),
                      RatFn::var(Sym::y31), RatFn::var(Sym::y32)};
  auto conj = nbar_from_group(z * nbar_group(y) * zi);
  if (!conj) throw internal_error("central conjugate left the opposite radical");
  auto ca = conj->as_array();
  auto ya = y.as_array();
  c.derived = true;
  for (int i = 0; i < 5; ++i) {
    bool found = false;
    for (long w = -6; w <= 6 && !found; ++w) {
      if (*ca[i] * t.pow(w) == *ya[i]) {
        c.weights[i] = w;
        found = true;
      }
    }
    c.derived = c.derived && found;
  }
  return c;
}

// Conjugation by a unipotent upper-triangular Levi element, as five
// polynomials in x and the coordinates. Derived once from the matrices.
struct UmConjLaw {
  Poly c10, c11, c21, c31, c32;
  bool identity_at_zero = false;

  std::array<const Poly*, 5> as_array() const { return {&c10, &c11, &c21, &c31, &c32}; }
};

inline const UmConjLaw& um_conj_law() {
  static const UmConjLaw law = [] {
    RatFn x = RatFn::var(Sym::x);
    Mat7<RatFn> u = embed_levi(um_element(x));
    Mat7<RatFn> ui = embed_levi(um_element(RatFn() - x));
    NbarCoords<RatFn> y{RatFn::var(Sym::y10), RatFn::var(Sym::y11), RatFn::var(Sym::y21),
                        RatFn::var(Sym::y31), RatFn::var(Sym::y32)};
    auto conj = nbar_from_group(u * nbar_group(y) * ui);
    if (!conj) throw internal_error("Levi-unipotent conjugate left the opposite radical");
    UmConjLaw l;
    auto ca = conj->as_array();
    Poly* slots[5] = {&l.c10, &l.c11, &l.c21, &l.c31, &l.c32};
    for (int i = 0; i < 5; ++i) {
      if (!ca[i]->is_polynomial())
        throw internal_error("Levi-unipotent conjugation law is not polynomial");
      *slots[i] = ca[i]->num();
    }
    std::map<Sym, Poly> at_zero;
    at_zero.emplace(Sym::x, Poly(Rat(0)));
    for (int i = 0; i < 5; ++i)
      at_zero.emplace(detail::kYSyms[i], Poly::var(detail::kYSyms[i]));
    l.identity_at_zero = true;
    for (int i = 0; i < 5; ++i)
      l.identity_at_zero = l.identity_at_zero &&
                           eval_poly_in(*slots[i], at_zero) ==
                               Poly::var(detail::kYSyms[i]);
    return l;
  }();
  return law;
}

// Conjugation by u(x) with v(x) >= -c maps the box at level kappa into
// itself once kappa is large enough; this finds the smallest level that the
// tropical bound certifies as stable through kappa_max.
inline long um_threshold_kappa(long c, unsigned long p, TropMode mode, long kappa_max) {
  detail::require_plain_ok(p, mode);
  if (c < 0) throw input_error("the compact subgroup bound must be nonnegative");
  const UmConjLaw& law = um_conj_law();
  auto la = law.as_array();
  auto stable = [&](long kappa) {
    KappaBox box = KappaBox::at(kappa);
    std::map<Sym, PadicVal> vals;
    vals.emplace(Sym::x, PadicVal::of(-c));
    for (int i = 0; i < 5; ++i)
      vals.emplace(detail::kYSyms[i], PadicVal::of(box.floors[i]));
    for (int i = 0; i < 5; ++i) {
      PadicVal bound = detail::trop_poly_bound(*la[i], vals, p, mode);
      if (!bound.at_least(PadicVal::of(box.floors[i]))) return false;
    }
    return true;
  };
  long first = -1;
  for (long k = kappa_max; k >= 1; --k) {
    if (stable(k)) first = k;
    else break;
  }
  if (first < 0)
    throw input_error("no stable level found up to the requested maximum");
  return first;
}

}  // namespace g2
