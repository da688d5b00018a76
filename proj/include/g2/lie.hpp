#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2/mat7.hpp"

namespace g2 {

// Root in the alpha/beta basis. alpha is the short simple root, beta the long
// one; the positive roots are alpha, beta, alpha+beta, 2alpha+beta,
// 3alpha+beta, 3alpha+2beta.
struct Root {
  int ca = 0;
  int cb = 0;

  friend bool operator==(const Root& x, const Root& y) {
    return x.ca == y.ca && x.cb == y.cb;
  }
  friend bool operator!=(const Root& x, const Root& y) { return !(x == y); }

  Root operator-() const { return Root{-ca, -cb}; }
  friend Root operator+(const Root& x, const Root& y) {
    return Root{x.ca + y.ca, x.cb + y.cb};
  }

  std::string str() const {
    return "(" + std::to_string(ca) + "," + std::to_string(cb) + ")";
  }
};

inline constexpr Root kAlpha{1, 0};
inline constexpr Root kBeta{0, 1};

inline const std::vector<Root>& positive_roots() {
  static const std::vector<Root> roots = {
      {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  return roots;
}

inline bool is_root(const Root& r) {
  for (const Root& p : positive_roots())
    if (p == r || p == -r) return true;
  return false;
}

// Coordinate symbol carrying the root space: x_{ij} for i*alpha+j*beta > 0,
// y_{ij} for the negative.
inline Sym root_coord(const Root& r) {
  bool neg = r.ca < 0 || (r.ca == 0 && r.cb < 0);
  Root p = neg ? -r : r;
  std::string name = (neg ? "y" : "x") + std::to_string(p.ca) + std::to_string(p.cb);
  if (!is_root(r)) throw input_error("not a root: " + r.str());
  return sym_named(name);
}

// Element of the Lie algebra in its 14 coordinates (a, b, the six x, the six
// y), indexed by the coordinate symbols.
template <typename R>
struct LieCoords {
  std::array<R, 14> c{};

  R& operator[](Sym v) { return c[check_index(v)]; }
  const R& operator[](Sym v) const { return c[check_index(v)]; }

  friend bool operator==(const LieCoords& x, const LieCoords& y) { return x.c == y.c; }

  static int check_index(Sym v) {
    int i = sym_index(v);
    if (i >= 14) throw internal_error("not a Lie algebra coordinate: " + std::string(sym_name(v)));
    return i;
  }
};

// The defining 7-dimensional realization. Every structural identity in this
// library ultimately reduces to arithmetic on these matrices.
template <typename R>
Mat7<R> lie_to_matrix(const LieCoords<R>& l) {
  const R& a = l[Sym::a];
  const R& b = l[Sym::b];
  const R& x01 = l[Sym::x01];
  const R& x10 = l[Sym::x10];
  const R& x11 = l[Sym::x11];
  const R& x21 = l[Sym::x21];
  const R& x31 = l[Sym::x31];
  const R& x32 = l[Sym::x32];
  const R& y01 = l[Sym::y01];
  const R& y10 = l[Sym::y10];
  const R& y11 = l[Sym::y11];
  const R& y21 = l[Sym::y21];
  const R& y31 = l[Sym::y31];
  const R& y32 = l[Sym::y32];
  R two = ring_cast<R>(2);

  Mat7<R> m;
  m.at(0, 0) = a;        m.at(0, 1) = x01;      m.at(0, 2) = x32;
  m.at(0, 3) = ring_cast<R>(0);                 m.at(0, 4) = -x21;
  m.at(0, 5) = y10;      m.at(0, 6) = two * x11;

  m.at(1, 0) = y01;      m.at(1, 1) = b;        m.at(1, 2) = x31;
  m.at(1, 3) = x21;      m.at(1, 4) = ring_cast<R>(0);
  m.at(1, 5) = -y11;     m.at(1, 6) = two * x10;

  m.at(2, 0) = y32;      m.at(2, 1) = y31;      m.at(2, 2) = -a - b;
  m.at(2, 3) = -y10;     m.at(2, 4) = y11;
  m.at(2, 5) = ring_cast<R>(0);                 m.at(2, 6) = two * y21;

  m.at(3, 0) = ring_cast<R>(0);                 m.at(3, 1) = y21;
  m.at(3, 2) = -x10;     m.at(3, 3) = -a;       m.at(3, 4) = -y01;
  m.at(3, 5) = -y32;     m.at(3, 6) = two * y11;

  m.at(4, 0) = -y21;     m.at(4, 1) = ring_cast<R>(0);
  m.at(4, 2) = x11;      m.at(4, 3) = -x01;     m.at(4, 4) = -b;
  m.at(4, 5) = -y31;     m.at(4, 6) = two * y10;

  m.at(5, 0) = x10;      m.at(5, 1) = -x11;     m.at(5, 2) = ring_cast<R>(0);
  m.at(5, 3) = -x32;     m.at(5, 4) = -x31;     m.at(5, 5) = a + b;
  m.at(5, 6) = two * x21;

  m.at(6, 0) = y11;      m.at(6, 1) = y10;      m.at(6, 2) = x21;
  m.at(6, 3) = x11;      m.at(6, 4) = x10;      m.at(6, 5) = y21;
  m.at(6, 6) = ring_cast<R>(0);
  return m;
}

// Reads coordinates off their defining slots and accepts only if rebuilding
// reproduces the matrix, so membership in the realization is exact.
template <typename R>
std::optional<LieCoords<R>> lie_from_matrix(const Mat7<R>& m) {
  LieCoords<R> l;
  l[Sym::a] = m.at(0, 0);
  l[Sym::b] = m.at(1, 1);
  l[Sym::x01] = m.at(0, 1);
  l[Sym::x10] = m.at(5, 0);
  l[Sym::x11] = m.at(4, 2);
  l[Sym::x21] = m.at(1, 3);
  l[Sym::x31] = m.at(1, 2);
  l[Sym::x32] = m.at(0, 2);
  l[Sym::y01] = m.at(1, 0);
  l[Sym::y10] = m.at(0, 5);
  l[Sym::y11] = m.at(2, 4);
  l[Sym::y21] = m.at(3, 1);
  l[Sym::y31] = m.at(2, 1);
  l[Sym::y32] = m.at(2, 0);
  if (!(lie_to_matrix(l) == m)) return std::nullopt;
  return l;
}

template <typename R>
Mat7<R> bracket(const Mat7<R>& x, const Mat7<R>& y) {
  return x * y - y * x;
}

// Basis vector of the root space of gamma, scaled by c.
template <typename R>
Mat7<R> root_vector(const Root& gamma, const R& c) {
  LieCoords<R> l;
  l[root_coord(gamma)] = c;
  return lie_to_matrix(l);
}

template <typename R>
Mat7<R> cartan_element(const R& a, const R& b) {
  LieCoords<R> l;
  l[Sym::a] = a;
  l[Sym::b] = b;
  return lie_to_matrix(l);
}

// One-parameter root subgroup through the raw basis vector.
template <typename R>
Mat7<R> one_param(const Root& gamma, const R& c) {
  return exp_nilpotent(root_vector(gamma, c));
}

// Torus point with diag(a,b) exponentiated: diag(u, v, 1/(uv), 1/u, 1/v, uv, 1).
template <typename R>
Mat7<R> torus_element(const R& u, const R& v) {
  if (u.is_zero() || v.is_zero()) throw input_error("torus coordinates must be nonzero");
  R uv = u * v;
  Mat7<R> m;
  m.at(0, 0) = u;
  m.at(1, 1) = v;
  m.at(2, 2) = ring_cast<R>(1) / uv;
  m.at(3, 3) = ring_cast<R>(1) / u;
  m.at(4, 4) = ring_cast<R>(1) / v;
  m.at(5, 5) = uv;
  m.at(6, 6) = ring_cast<R>(1);
  return m;
}

// Rational character of the torus, written in the alpha/beta basis.
struct CharLattice {
  Rat ca = 0;
  Rat cb = 0;

  friend bool operator==(const CharLattice& x, const CharLattice& y) {
    return x.ca == y.ca && x.cb == y.cb;
  }
  friend bool operator!=(const CharLattice& x, const CharLattice& y) { return !(x == y); }
  friend CharLattice operator+(const CharLattice& x, const CharLattice& y) {
    return CharLattice{x.ca + y.ca, x.cb + y.cb};
  }
  friend CharLattice operator*(const Rat& c, const CharLattice& x) {
    return CharLattice{c * x.ca, c * x.cb};
  }
  static CharLattice of_root(const Root& r) { return CharLattice{Rat(r.ca), Rat(r.cb)}; }

  std::string str() const { return ca.str() + "*alpha + " + cb.str() + "*beta"; }
};

// The Weyl-invariant form (a alpha + b beta, a' alpha + b' beta) =
// aa' + 3bb' - (3/2)(ab' + a'b).
inline Rat bilinear_form(const CharLattice& x, const CharLattice& y) {
  Rat th(3, 2);
  return x.ca * y.ca + Rat(3) * x.cb * y.cb - th * (x.ca * y.cb + y.ca * x.cb);
}

// Reflection in a root, defined through the form alone.
inline CharLattice reflect(const Root& gamma, const CharLattice& chi) {
  CharLattice g = CharLattice::of_root(gamma);
  Rat coef = Rat(2) * bilinear_form(chi, g) / bilinear_form(g, g);
  return chi + (-coef) * g;
}

// On the torus point with coordinates (u, v), the character i*alpha + j*beta
// takes the value u^j v^(i-j). These exponents identify integral characters.
inline std::pair<long, long> torus_exponents(const CharLattice& chi) {
  if (!chi.ca.is_integer() || !chi.cb.is_integer())
    throw input_error("character is not integral: " + chi.str());
  long i = chi.ca.num().get_si();
  long j = chi.cb.num().get_si();
  return {j, i - j};
}

inline CharLattice char_from_torus_exponents(long p, long q) {
  return CharLattice{Rat(p + q), Rat(p)};
}

enum class SimpleRef { alpha, beta };

using WeylWord = std::vector<SimpleRef>;

inline Root simple_root(SimpleRef s) { return s == SimpleRef::alpha ? kAlpha : kBeta; }

inline std::string word_str(const WeylWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (SimpleRef s : w) out += (s == SimpleRef::alpha) ? 'a' : 'b';
  return out;
}

// Abstract Weyl element as its integer action on the (alpha, beta) basis:
// columns are the images of alpha and beta.
struct WeylElem {
  std::array<int, 4> m = {1, 0, 0, 1};

  static WeylElem identity() { return WeylElem{}; }

  CharLattice apply(const CharLattice& chi) const {
    return CharLattice{Rat(m[0]) * chi.ca + Rat(m[1]) * chi.cb,
                       Rat(m[2]) * chi.ca + Rat(m[3]) * chi.cb};
  }

  friend WeylElem operator*(const WeylElem& x, const WeylElem& y) {
    WeylElem r;
    r.m = {x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
           x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]};
    return r;
  }

  friend bool operator==(const WeylElem& x, const WeylElem& y) { return x.m == y.m; }
  friend bool operator<(const WeylElem& x, const WeylElem& y) { return x.m < y.m; }
};

// Action matrix of a simple reflection, derived from the form.
inline WeylElem simple_action(SimpleRef s) {
  Root g = simple_root(s);
  CharLattice ia = reflect(g, CharLattice::of_root(kAlpha));
  CharLattice ib = reflect(g, CharLattice::of_root(kBeta));
  auto as_int = [](const Rat& r) {
    if (!r.is_integer()) throw internal_error("simple reflection is not integral on the root lattice");
    return static_cast<int>(r.num().get_si());
  };
  WeylElem e;
  e.m = {as_int(ia.ca), as_int(ib.ca), as_int(ia.cb), as_int(ib.cb)};
  return e;
}

inline WeylElem word_action(const WeylWord& w) {
  WeylElem e = WeylElem::identity();
  for (SimpleRef s : w) e = e * simple_action(s);
  return e;
}

inline CharLattice weyl_action(const WeylWord& w, const CharLattice& chi) {
  return word_action(w).apply(chi);
}

}  // namespace g2
