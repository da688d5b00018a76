#pragma once

#include <optional>
#include <string>

#include "g2/chars.hpp"

namespace g2 {

// Invertible 2x2 block parametrizing the Levi.
template <typename R>
struct GL2Elem {
  R a, b, c, d;

  GL2Elem() : a(ring_cast<R>(1)), b(ring_cast<R>(0)), c(ring_cast<R>(0)), d(ring_cast<R>(1)) {}
  GL2Elem(R a_, R b_, R c_, R d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  R det() const { return a * d - b * c; }

  GL2Elem inverse() const {
    R dt = det();
    if (dt.is_zero()) throw input_error("2x2 block is singular");
    return GL2Elem{d / dt, -b / dt, -c / dt, a / dt};
  }

  friend GL2Elem operator*(const GL2Elem& x, const GL2Elem& y) {
    return GL2Elem{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend bool operator==(const GL2Elem& x, const GL2Elem& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// Block embedding of the Levi: diag(A, det(A)^-1, transpose(A^-1), det(A), 1).
template <typename R>
Mat7<R> embed_levi(const GL2Elem<R>& g) {
  R dt = g.det();
  if (dt.is_zero()) throw input_error("Levi block must be invertible");
  GL2Elem<R> inv = g.inverse();
  Mat7<R> m;
  m.at(0, 0) = g.a;  m.at(0, 1) = g.b;
  m.at(1, 0) = g.c;  m.at(1, 1) = g.d;
  m.at(2, 2) = ring_cast<R>(1) / dt;
  m.at(3, 3) = inv.a;  m.at(3, 4) = inv.c;
  m.at(4, 3) = inv.b;  m.at(4, 4) = inv.d;
  m.at(5, 5) = dt;
  m.at(6, 6) = ring_cast<R>(1);
  return m;
}

template <typename R>
GL2Elem<R> central_element(const R& t) {
  if (t.is_zero()) throw input_error("central parameter must be nonzero");
  return GL2Elem<R>{t, ring_cast<R>(0), ring_cast<R>(0), t};
}

template <typename R>
GL2Elem<R> um_element(const R& x) {
  return GL2Elem<R>{ring_cast<R>(1), x, ring_cast<R>(0), ring_cast<R>(1)};
}

// Coordinates on the Lie algebra of the nilradical.
template <typename R>
struct NCoords {
  R x10{}, x11{}, x21{}, x31{}, x32{};

  friend bool operator==(const NCoords& p, const NCoords& q) {
    return p.x10 == q.x10 && p.x11 == q.x11 && p.x21 == q.x21 && p.x31 == q.x31 &&
           p.x32 == q.x32;
  }

  std::string str() const {
    return "(" + p_str(x10) + ", " + p_str(x11) + ", " + p_str(x21) + ", " + p_str(x31) +
           ", " + p_str(x32) + ")";
  }

 private:
  static std::string p_str(const R& v) { return v.str(); }
};

template <typename R>
LieCoords<R> n_lie(const NCoords<R>& n) {
  LieCoords<R> l;
  l[Sym::x10] = n.x10;
  l[Sym::x11] = n.x11;
  l[Sym::x21] = n.x21;
  l[Sym::x31] = n.x31;
  l[Sym::x32] = n.x32;
  return l;
}

template <typename R>
Mat7<R> n_matrix(const NCoords<R>& n) {
  return lie_to_matrix(n_lie(n));
}

template <typename R>
Mat7<R> n_group(const NCoords<R>& n) {
  return exp_nilpotent(n_matrix(n));
}

// Recovers nilradical coordinates from a group element; fails off the image.
template <typename R>
std::optional<NCoords<R>> n_from_group(const Mat7<R>& u) {
  Mat7<R> x;
  try {
    x = log_unipotent(u);
  } catch (const input_error&) {
    return std::nullopt;
  }
  auto l = lie_from_matrix(x);
  if (!l) return std::nullopt;
  NCoords<R> n{(*l)[Sym::x10], (*l)[Sym::x11], (*l)[Sym::x21], (*l)[Sym::x31], (*l)[Sym::x32]};
  if (!(lie_to_matrix(n_lie(n)) == x)) return std::nullopt;
  return n;
}

// Conjugation of exp(n) by the upper unipotent of the Levi, computed on
// matrices and read back through the log.
template <typename R>
NCoords<R> conj_um(const R& x, const NCoords<R>& n) {
  Mat7<R> u = embed_levi(um_element(x));
  Mat7<R> g = u * n_group(n) * embed_levi(um_element(-x));
  auto out = n_from_group(g);
  if (!out) throw internal_error("unipotent conjugation left the nilradical");
  return *out;
}

// The closed form it must equal: (x10, x*x10 + x11, x21, x31, x*x31 + x32).
template <typename R>
NCoords<R> conj_um_closed(const R& x, const NCoords<R>& n) {
  return NCoords<R>{n.x10, x * n.x10 + n.x11, n.x21, n.x31, x * n.x31 + n.x32};
}

// Conjugation of exp(n) by the central element diag(t, t).
template <typename R>
NCoords<R> conj_zm(const R& t, const NCoords<R>& n) {
  Mat7<R> z = embed_levi(central_element(t));
  Mat7<R> g = z * n_group(n) * embed_levi(central_element(t).inverse());
  auto out = n_from_group(g);
  if (!out) throw internal_error("central conjugation left the nilradical");
  return *out;
}

// The closed form it must equal: (t*x10, t*x11, t^2*x21, t^3*x31, t^3*x32).
template <typename R>
NCoords<R> conj_zm_closed(const R& t, const NCoords<R>& n) {
  R t2 = t * t;
  R t3 = t2 * t;
  return NCoords<R>{t * n.x10, t * n.x11, t2 * n.x21, t3 * n.x31, t3 * n.x32};
}

// Representative kinds for the conjugation quotients: D fixes x11 = 0, the
// smaller D0 additionally fixes x10 = 1.
enum class DomainKind { D, D0 };

template <typename R>
struct DomainPoint {
  DomainKind kind;
  NCoords<R> n;

  static DomainPoint d(const R& x10, const R& x21, const R& x31, const R& x32) {
    if (x10.is_zero()) throw input_error("representative requires x10 != 0");
    return DomainPoint{DomainKind::D,
                       NCoords<R>{x10, ring_cast<R>(0), x21, x31, x32}};
  }

  static DomainPoint d0(const R& x21, const R& x31, const R& x32) {
    return DomainPoint{DomainKind::D0,
                       NCoords<R>{ring_cast<R>(1), ring_cast<R>(0), x21, x31, x32}};
  }
};

template <typename R>
struct CanonicalRep {
  DomainPoint<R> rep;
  R u;                 // conjugating upper-unipotent parameter
  std::optional<R> t;  // central parameter, present only for D0
};

// Canonical representative of n under the unipotent action (kind D), or under
// the unipotent and central actions together (kind D0). Defined on x10 != 0.
template <typename R>
CanonicalRep<R> canonical_rep(const NCoords<R>& n, DomainKind kind) {
  if (n.x10.is_zero())
    throw input_error("orbit representative requires x10 != 0");
  R x = -n.x11 / n.x10;
  NCoords<R> d = conj_um_closed(x, n);
  if (kind == DomainKind::D)
    return CanonicalRep<R>{DomainPoint<R>{DomainKind::D, d}, x, std::nullopt};
  R tinv = n.x10;  // z = diag(t, t) with t = 1/x10 rescales x10 to 1
  NCoords<R> d0 = conj_zm_closed(ring_cast<R>(1) / tinv, d);
  return CanonicalRep<R>{DomainPoint<R>{DomainKind::D0, d0}, x, ring_cast<R>(1) / tinv};
}

// Jacobian certificate of a coordinate change, stated as the symbolic
// determinant together with the verdict against the expected value.
struct JacobianCertificate {
  std::string name;
  RatFn jacobian;
  std::string expected;
  bool pass = false;
};

// Orbit map (x, x10, x21, x31, x32) -> u(x) n0 u(x)^-1 off the slice x11 = 0;
// the density making the double integral match dn is |x10|.
inline const JacobianCertificate& um_orbit_jacobian() {
  static const JacobianCertificate cert = [] {
    NCoords<RatFn> n0{RatFn::var(Sym::x10), RatFn(Rat(0)), RatFn::var(Sym::x21),
                      RatFn::var(Sym::x31), RatFn::var(Sym::x32)};
    NCoords<RatFn> out = conj_um(RatFn::var(Sym::x), n0);
    const Sym in[] = {Sym::x, Sym::x10, Sym::x21, Sym::x31, Sym::x32};
    const RatFn* rows[] = {&out.x10, &out.x11, &out.x21, &out.x31, &out.x32};
    std::vector<std::vector<RatFn>> jac(5, std::vector<RatFn>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) jac[i][j] = rows[i]->derivative(in[j]);
    JacobianCertificate c;
    c.name = "unipotent orbit map";
    c.jacobian = det_small(jac);
    c.expected = "x10 up to sign";
    RatFn x10 = RatFn::var(Sym::x10);
    c.pass = (c.jacobian == x10) || (c.jacobian == -x10);
    return c;
  }();
  return cert;
}

// Orbit map (t, x, x21, x31, x32) -> z(t) u(x) n0 u(x)^-1 z(t)^-1 based at the
// x10 = 1 slice; the density is |t|^9 against dt dx dx21 dx31 dx32.
inline const JacobianCertificate& zm_orbit_jacobian() {
  static const JacobianCertificate cert = [] {
    NCoords<RatFn> n0{RatFn(Rat(1)), RatFn(Rat(0)), RatFn::var(Sym::x21),
                      RatFn::var(Sym::x31), RatFn::var(Sym::x32)};
    NCoords<RatFn> out =
        conj_zm(RatFn::var(Sym::t), conj_um(RatFn::var(Sym::x), n0));
    const Sym in[] = {Sym::t, Sym::x, Sym::x21, Sym::x31, Sym::x32};
    const RatFn* rows[] = {&out.x10, &out.x11, &out.x21, &out.x31, &out.x32};
    std::vector<std::vector<RatFn>> jac(5, std::vector<RatFn>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) jac[i][j] = rows[i]->derivative(in[j]);
    JacobianCertificate c;
    c.name = "central-by-unipotent orbit map";
    c.jacobian = det_small(jac);
    c.expected = "t^9 up to sign";
    RatFn t9 = RatFn::var(Sym::t).pow(9);
    c.pass = (c.jacobian == t9) || (c.jacobian == -t9);
    return c;
  }();
  return cert;
}

}  // namespace g2
