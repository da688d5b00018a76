#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "g2/levi.hpp"

namespace g2 {

namespace detail {

template <typename R>
RatFn lift_impl(const R& v);

template <>
inline RatFn lift_impl<Rat>(const Rat& v) { return RatFn(v); }

template <>
inline RatFn lift_impl<RatFn>(const RatFn& v) { return v; }

template <typename R>
R lower_impl(const RatFn& v);

template <>
inline Rat lower_impl<Rat>(const RatFn& v) {
  if (!v.is_constant()) throw internal_error("expected a constant value");
  return v.constant_value();
}

template <>
inline RatFn lower_impl<RatFn>(const RatFn& v) { return v; }

}  // namespace detail

// Exact embedding of ring values into rational functions and back; numeric
// and symbolic callers share one code path through these.
template <typename R>
RatFn lift(const R& v) { return detail::lift_impl<R>(v); }

template <typename R>
R lower(const RatFn& v) { return detail::lower_impl<R>(v); }

// Coordinates on the Lie algebra of the opposite nilradical.
template <typename R>
struct NbarCoords {
  R y10{}, y11{}, y21{}, y31{}, y32{};

  friend bool operator==(const NbarCoords& p, const NbarCoords& q) {
    return p.y10 == q.y10 && p.y11 == q.y11 && p.y21 == q.y21 && p.y31 == q.y31 &&
           p.y32 == q.y32;
  }

  std::array<const R*, 5> as_array() const { return {&y10, &y11, &y21, &y31, &y32}; }
};

template <typename R>
LieCoords<R> nbar_lie(const NbarCoords<R>& n) {
  LieCoords<R> l;
  l[Sym::y10] = n.y10;
  l[Sym::y11] = n.y11;
  l[Sym::y21] = n.y21;
  l[Sym::y31] = n.y31;
  l[Sym::y32] = n.y32;
  return l;
}

template <typename R>
Mat7<R> nbar_matrix(const NbarCoords<R>& n) {
  return lie_to_matrix(nbar_lie(n));
}

template <typename R>
Mat7<R> nbar_group(const NbarCoords<R>& n) {
  return exp_nilpotent(nbar_matrix(n));
}

template <typename R>
std::optional<NbarCoords<R>> nbar_from_group(const Mat7<R>& u) {
  Mat7<R> x;
  try {
    x = log_unipotent(u);
  } catch (const input_error&) {
    return std::nullopt;
  }
  auto l = lie_from_matrix(x);
  if (!l) return std::nullopt;
  NbarCoords<R> n{(*l)[Sym::y10], (*l)[Sym::y11], (*l)[Sym::y21], (*l)[Sym::y31],
                  (*l)[Sym::y32]};
  if (!(lie_to_matrix(nbar_lie(n)) == x)) return std::nullopt;
  return n;
}

// Zero pattern cut out by the parabolic: 19 forced zeros and a forced 1 in the
// corner. Membership of a group element in P is exactly this shape; see the
// derivation check, which recovers it from a generic Levi times a generic
// nilradical element.
inline const ZeroPattern& parabolic_pattern() {
  static const ZeroPattern p = ZeroPattern::parse({
      "*****0*",
      "*****0*",
      "00*0000",
      "00***00",
      "00***00",
      "*******",
      "00***01",
  });
  return p;
}

// Recompute the parabolic shape from scratch: multiply a symbolic Levi element
// by a symbolic nilradical element and record which entries are forced.
inline ZeroPattern derived_parabolic_pattern() {
  GL2Elem<RatFn> A{RatFn::var(Sym::a), RatFn::var(Sym::x01), RatFn::var(Sym::y01),
                   RatFn::var(Sym::b)};
  NCoords<RatFn> nx{RatFn::var(Sym::x10), RatFn::var(Sym::x11), RatFn::var(Sym::x21),
                    RatFn::var(Sym::x31), RatFn::var(Sym::x32)};
  Mat7<RatFn> p = embed_levi(A) * n_group(nx);
  std::array<std::string, 7> rows;
  for (int i = 0; i < 7; ++i) {
    std::string row;
    for (int j = 0; j < 7; ++j) {
      if (p.at(i, j).is_zero()) row += '0';
      else if (p.at(i, j) == RatFn(Rat(1))) row += '1';
      else row += '*';
    }
    rows[i] = row;
  }
  return ZeroPattern::parse(rows);
}

template <typename R>
Mat7<R> wdot_zero_as() {
  static const Mat7<Rat> w = wdot_zero();
  if constexpr (std::is_same_v<R, Rat>) return w;
  else return to_ratfn(w);
}

template <typename R>
Mat7<R> wdot_zero_inv_as() {
  static const Mat7<Rat> w = wdot_zero().inverse();
  if constexpr (std::is_same_v<R, Rat>) return w;
  else return to_ratfn(w);
}

// Discriminant controlling the big-cell condition on the x10 = 1 slice.
template <typename R>
R discriminant(const R& x21, const R& x32) {
  return x21 * x21 + x32;
}

// The opposite-nilradical component of the decomposition, in closed form on
// the slice x10 = 1:
//   y10 = x32/D, y11 = (x21/2 - x31)/D, y21 = x21/D,
//   y31 = -x32 x21 / (2 D^2), y32 = (3 x21^2/4 + x32 + x21 x31/2)/D^2.
// These are forced by the pattern equations; solve_nbar rederives them from
// scratch.
template <typename R>
NbarCoords<R> nbar_closed_form(const R& x21, const R& x31, const R& x32) {
  R d = discriminant(x21, x32);
  if (d.is_zero()) throw input_error("point lies outside the big cell (zero discriminant)");
  R half = ring_cast<R>(Rat(1, 2));
  R d2 = d * d;
  NbarCoords<R> n;
  n.y10 = x32 / d;
  n.y11 = (half * x21 - x31) / d;
  n.y21 = x21 / d;
  n.y31 = -half * x32 * x21 / d2;
  n.y32 = (ring_cast<R>(Rat(3, 4)) * x21 * x21 + x32 + half * x21 * x31) / d2;
  return n;
}

// The Levi block expressed through the opposite coordinates:
//   a = y10 y11 + y21, b = y10^2,
//   c = -y11^2 + y11 y21 / 2 - y32, d = -y10 y11 + y10 y21 / 2 + y21 - y31.
// The decomposition certificate checks these against the corner of the
// P-component, along with det(m) = 1/D.
template <typename R>
GL2Elem<R> levi_block_formula(const NbarCoords<R>& y) {
  R half = ring_cast<R>(Rat(1, 2));
  GL2Elem<R> m;
  m.a = y.y10 * y.y11 + y.y21;
  m.b = y.y10 * y.y10;
  m.c = half * y.y11 * y.y21 - y.y11 * y.y11 - y.y32;
  m.d = half * y.y10 * y.y21 - y.y10 * y.y11 + y.y21 - y.y31;
  return m;
}

template <typename R>
struct BigCellDecomp {
  GL2Elem<R> m;
  NCoords<R> nprime;
  NbarCoords<R> nbar;
  R disc;
};

// Decomposition w0^-1 n = m n' nbar for n on the x10 = 1 slice. The nbar
// component comes from the closed form; the P component is then read off and
// certified against the parabolic pattern, and the full product identity
// w0^-1 n = levi(m) n' nbar is rechecked entry by entry.
template <typename R>
BigCellDecomp<R> decompose(const DomainPoint<R>& pt) {
  if (pt.kind != DomainKind::D0)
    throw input_error("decomposition is defined on the x10 = 1 slice");
  const NCoords<R>& nc = pt.n;
  R d = discriminant(nc.x21, nc.x32);
  if (d.is_zero()) throw input_error("point lies outside the big cell (zero discriminant)");

  NbarCoords<R> nb = nbar_closed_form(nc.x21, nc.x31, nc.x32);
  Mat7<R> lhs = wdot_zero_inv_as<R>() * n_group(nc);
  Mat7<R> p = lhs * exp_nilpotent(-nbar_matrix(nb));
  if (!matches_pattern(p, parabolic_pattern()))
    throw internal_error("P-component fails the parabolic pattern");

  GL2Elem<R> m{p.at(0, 0), p.at(0, 1), p.at(1, 0), p.at(1, 1)};
  if (m.det().is_zero()) throw internal_error("Levi block of the P-component is singular");
  Mat7<R> rest = embed_levi(m.inverse()) * p;
  auto np = n_from_group(rest);
  if (!np) throw internal_error("unipotent part of the P-component is not in the nilradical");

  if (!(embed_levi(m) * n_group(*np) * nbar_group(nb) == lhs))
    throw internal_error("decomposition does not recompose to w0^-1 n");
  return BigCellDecomp<R>{m, *np, nb, d};
}

// Independent route to the nbar component: treat its five coordinates as
// unknowns and force w0^-1 n exp(-nbar) into the parabolic pattern, solving
// one linear pattern equation at a time. Shares nothing with the closed form.
template <typename R>
NbarCoords<R> solve_nbar(const NCoords<R>& nc) {
  const Sym unknowns[] = {Sym::y10, Sym::y11, Sym::y21, Sym::y31, Sym::y32};
  NCoords<RatFn> nx{lift(nc.x10), lift(nc.x11), lift(nc.x21), lift(nc.x31), lift(nc.x32)};
  NbarCoords<RatFn> ny{RatFn::var(Sym::y10), RatFn::var(Sym::y11), RatFn::var(Sym::y21),
                       RatFn::var(Sym::y31), RatFn::var(Sym::y32)};
  Mat7<RatFn> prod =
      wdot_zero_inv_as<RatFn>() * n_group(nx) * exp_nilpotent(-nbar_matrix(ny));

  std::map<Sym, RatFn> solved;
  auto unsolved_in = [&](const Poly& q) {
    for (Sym y : unknowns)
      if (!solved.count(y) && q.degree_in(y) > 0) return true;
    return false;
  };

  const ZeroPattern& pat = parabolic_pattern();
  bool progress = true;
  while (solved.size() < 5 && progress) {
    progress = false;
    for (int i = 0; i < 7 && solved.size() < 5; ++i)
      for (int j = 0; j < 7 && solved.size() < 5; ++j) {
        if (pat.cell(i, j) != ZeroPattern::kZero) continue;
        RatFn entry = prod.at(i, j).substitute(solved);
        const Poly& q = entry.num();
        for (Sym y : unknowns) {
          if (solved.count(y) || q.degree_in(y) != 1) continue;
          Poly lin = q.coeff_of(y, 1);
          Poly con = q.coeff_of(y, 0);
          if (lin.is_zero() || unsolved_in(lin) || unsolved_in(con)) continue;
          solved[y] = RatFn(-con, lin);
          progress = true;
          break;
        }
      }
  }
  if (solved.size() < 5)
    throw internal_error("pattern equations do not determine the opposite coordinates");

  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (pat.cell(i, j) == ZeroPattern::kFree) continue;
      RatFn entry = prod.at(i, j).substitute(solved);
      RatFn want = pat.cell(i, j) == ZeroPattern::kOne ? RatFn(Rat(1)) : RatFn();
      if (!(entry == want))
        throw input_error("point lies outside the big cell (pattern equation unsatisfiable)");
    }

  return NbarCoords<R>{lower<R>(solved[Sym::y10]), lower<R>(solved[Sym::y11]),
                       lower<R>(solved[Sym::y21]), lower<R>(solved[Sym::y31]),
                       lower<R>(solved[Sym::y32])};
}

// Bruhat factorization of a 2x2 block off the Borel: defined for c != 0, with
// m = u1 * diag(t1, t2) * antidiag(1, -1) * u2 and components
// u1 = a/c, u2 = d/c, t1 = -det(m)/c, t2 = -c.
template <typename R>
struct BruhatGL2 {
  R u1, u2, t1, t2;
};

template <typename R>
BruhatGL2<R> bruhat_gl2(const GL2Elem<R>& m) {
  if (m.c.is_zero())
    throw input_error("Bruhat factorization needs a nonzero lower-left entry");
  R dt = m.det();
  if (dt.is_zero()) throw input_error("2x2 block is singular");
  BruhatGL2<R> b;
  b.u1 = m.a / m.c;
  b.u2 = m.d / m.c;
  b.t1 = -dt / m.c;
  b.t2 = -m.c;
  GL2Elem<R> w{ring_cast<R>(0), ring_cast<R>(1), ring_cast<R>(-1), ring_cast<R>(0)};
  GL2Elem<R> re = um_element(b.u1) *
                  GL2Elem<R>{b.t1, ring_cast<R>(0), ring_cast<R>(0), b.t2} * w *
                  um_element(b.u2);
  if (!(re == m)) throw internal_error("Bruhat components do not recompose");
  return b;
}

// First coordinate of log(w0^-1 nbar w0), the quantity fed to the twisting
// character. It must match (x21/2 - x31)/D.
template <typename R>
R x_alpha_by_conjugation(const R& x21, const R& x31, const R& x32) {
  NbarCoords<R> nb = nbar_closed_form(x21, x31, x32);
  Mat7<R> conj = wdot_zero_inv_as<R>() * nbar_group(nb) * wdot_zero_as<R>();
  auto nc = n_from_group(conj);
  if (!nc) throw internal_error("conjugated opposite element is not in the nilradical");
  return nc->x10;
}

template <typename R>
R x_alpha_formula(const R& x21, const R& x31, const R& x32) {
  R d = discriminant(x21, x32);
  if (d.is_zero()) throw input_error("point lies outside the big cell (zero discriminant)");
  return (ring_cast<R>(Rat(1, 2)) * x21 - x31) / d;
}

// Grading under the scaling (x21, x31, x32) -> (t x21, t x31, t^2 x32).
inline const Grading& bigcell_grading() {
  static const Grading g{{{Sym::x21, 1}, {Sym::x31, 1}, {Sym::x32, 2}}};
  return g;
}

struct HomogeneityItem {
  std::string name;
  long expected = 0;
  std::optional<long> computed;  // nullopt when the function is inhomogeneous
  bool pass = false;
};

// Every decomposition component is quasi-homogeneous for the scaling grading;
// this certificate computes each weight from the symbolic decomposition and
// compares with the expected table. The measure weight is the t-degree of the
// scaling map's jacobian determinant.
struct HomogeneityCertificate {
  std::vector<HomogeneityItem> items;
  long measure_weight = 0;
  long measure_weight_expected = 4;
  bool measure_pass = false;
  bool pass = false;

  long weight_of(const std::string& name) const {
    for (const HomogeneityItem& it : items)
      if (it.name == name) {
        if (!it.computed) throw internal_error("no weight recorded for " + name);
        return *it.computed;
      }
    throw internal_error("no homogeneity item named " + name);
  }
};

inline const HomogeneityCertificate& homogeneity_certificate() {
  static const HomogeneityCertificate cert = [] {
    HomogeneityCertificate c;
    DomainPoint<RatFn> pt = DomainPoint<RatFn>::d0(
        RatFn::var(Sym::x21), RatFn::var(Sym::x31), RatFn::var(Sym::x32));
    BigCellDecomp<RatFn> dec = decompose(pt);
    BruhatGL2<RatFn> br = bruhat_gl2(dec.m);
    RatFn xa = x_alpha_formula(RatFn::var(Sym::x21), RatFn::var(Sym::x31),
                               RatFn::var(Sym::x32));

    const Grading& g = bigcell_grading();
    auto add = [&](const std::string& name, const RatFn& f, long expected) {
      HomogeneityItem it;
      it.name = name;
      it.expected = expected;
      it.computed = f.weighted_degree(g);
      it.pass = it.computed && *it.computed == expected;
      c.items.push_back(it);
    };
    add("nbar.y10", dec.nbar.y10, 0);
    add("nbar.y11", dec.nbar.y11, -1);
    add("nbar.y21", dec.nbar.y21, -1);
    add("nbar.y31", dec.nbar.y31, -1);
    add("nbar.y32", dec.nbar.y32, -2);
    add("m.a", dec.m.a, -1);
    add("m.b", dec.m.b, 0);
    add("m.c", dec.m.c, -2);
    add("m.d", dec.m.d, -1);
    add("m.det", dec.m.det(), -2);
    add("bruhat.u1", br.u1, 1);
    add("bruhat.u2", br.u2, 1);
    add("bruhat.t1", br.t1, 0);
    add("bruhat.t2", br.t2, -2);
    add("x_alpha", xa, -1);

    const Sym vars[] = {Sym::x21, Sym::x31, Sym::x32};
    const long wt[] = {1, 1, 2};
    RatFn t = RatFn::var(Sym::t);
    std::vector<std::vector<RatFn>> jac(3, std::vector<RatFn>(3));
    for (int i = 0; i < 3; ++i) {
      RatFn scaled = t.pow(static_cast<int>(wt[i])) * RatFn::var(vars[i]);
      for (int j = 0; j < 3; ++j) jac[i][j] = scaled.derivative(vars[j]);
    }
    RatFn jdet = det_small(jac);
    c.measure_weight = jdet.num().degree_in(Sym::t) - jdet.den().degree_in(Sym::t);
    c.measure_pass = jdet == t.pow(4) && c.measure_weight == c.measure_weight_expected;

    c.pass = c.measure_pass;
    for (const HomogeneityItem& it : c.items) c.pass = c.pass && it.pass;
    return c;
  }();
  return cert;
}

}  // namespace g2
