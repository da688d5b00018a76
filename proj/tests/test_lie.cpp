#include "doctest.h"

#include <map>
#include <vector>

#include "g2/lie.hpp"

using namespace g2;

namespace {

using M = Mat7<Rat>;

LieCoords<Rat> coords_from_seed(int s) {
  LieCoords<Rat> l;
  for (int i = 0; i < 14; ++i) l.c[i] = Rat(((s + 3) * (i + 1)) % 7 - 3, 1 + (i % 3));
  return l;
}

}  // namespace

TEST_SUITE("lie") {

TEST_CASE("matrix embedding is injective and exactly characterized") {
  LieCoords<Rat> l = coords_from_seed(2);
  M m = lie_to_matrix(l);
  auto back = lie_from_matrix(m);
  REQUIRE(back);
  CHECK(*back == l);

  // off the realization: perturb a dependent slot
  M bad = m;
  bad.at(0, 6) = bad.at(0, 6) + Rat(1);
  CHECK(!lie_from_matrix(bad));
}

TEST_CASE("realization is trace free and lands in the algebra of the form") {
  // each matrix X satisfies X^t J + J X = 0 for the symmetric form J that the
  // torus diag(u,v,1/(uv),1/u,1/v,uv,1) preserves
  M j;
  for (int i = 0; i < 3; ++i) {
    j.at(i, i + 3) = Rat(1);
    j.at(i + 3, i) = Rat(1);
  }
  j.at(6, 6) = Rat(-2);
  M x = lie_to_matrix(coords_from_seed(5));
  CHECK(x.trace() == Rat(0));
  CHECK((x.transpose() * j + j * x).is_zero());
  M t = torus_element(Rat(3), Rat(-5, 2));
  CHECK(t.transpose() * j * t == j);
}

TEST_CASE("bracket closes and root spaces add") {
  // [x_gamma, x_delta] lies in the realization; when gamma+delta is a root it
  // lands in that root space, and against the Cartan it scales by gamma(h)
  std::vector<Root> all;
  for (const Root& r : positive_roots()) {
    all.push_back(r);
    all.push_back(-r);
  }
  M h = cartan_element(Rat(2), Rat(3));  // a=2, b=3
  for (const Root& g : all) {
    M xg = root_vector(g, Rat(1));
    // alpha(h) = b, beta(h) = a - b
    Rat gh = Rat(g.ca) * Rat(3) + Rat(g.cb) * (Rat(2) - Rat(3));
    CHECK(bracket(h, xg) == gh * xg);
    for (const Root& d : all) {
      M br = bracket(xg, root_vector(d, Rat(1)));
      auto back = lie_from_matrix(br);
      REQUIRE(back);
      if (!is_root(g + d) && !(g + d == Root{0, 0})) CHECK(br.is_zero());
    }
  }
}

TEST_CASE("torus conjugation scales root vectors by the character") {
  Rat u(2), v(3);
  M t = torus_element(u, v);
  for (const Root& r : positive_roots()) {
    for (const Root& g : {r, -r}) {
      // value of i*alpha + j*beta at (u, v) is u^j v^(i-j)
      auto [p, q] = torus_exponents(CharLattice::of_root(g));
      Rat chi = u.pow(p) * v.pow(q);
      M xg = root_vector(g, Rat(5, 7));
      CHECK(t * xg * t.inverse() == chi * xg);
    }
  }
  CHECK_THROWS_AS(torus_element(Rat(0), Rat(1)), input_error);
}

TEST_CASE("frozen structure constants of the simple pair") {
  auto ad = [](const Root& g, const Root& d) {
    return lie_from_matrix(bracket(root_vector(g, Rat(1)), root_vector(d, Rat(1)))).value();
  };
  // the alpha-string through beta: coefficients along beta, a+b, 2a+b, 3a+b
  CHECK(ad(kAlpha, kBeta)[Sym::x11] == Rat(-1));
  CHECK(ad(kAlpha, Root{1, 1})[Sym::x21] == Rat(2));
  CHECK(ad(kAlpha, Root{2, 1})[Sym::x31] == Rat(3));
  CHECK(ad(kAlpha, Root{3, 1}) == LieCoords<Rat>{});
  CHECK(ad(kBeta, Root{3, 1})[Sym::x32] == Rat(1));
  // opposite root spaces pair into the Cartan
  LieCoords<Rat> ha = ad(kAlpha, -kAlpha);
  CHECK(ha[Sym::x01] == Rat(0));
  CHECK((ha[Sym::a] != Rat(0) || ha[Sym::b] != Rat(0)));
}

TEST_CASE("form values and reflections") {
  CharLattice a = CharLattice::of_root(kAlpha);
  CharLattice b = CharLattice::of_root(kBeta);
  CHECK(bilinear_form(a, a) == Rat(1));
  CHECK(bilinear_form(b, b) == Rat(3));
  CHECK(bilinear_form(a, b) == Rat(-3, 2));
  CHECK(reflect(kAlpha, a) == Rat(-1) * a);
  CHECK(reflect(kAlpha, b) == b + Rat(3) * a);  // s_alpha(beta) = beta + 3 alpha
  CHECK(reflect(kBeta, a) == a + b);
  // reflections preserve the form
  for (const Root& g : positive_roots())
    CHECK(bilinear_form(reflect(g, a + b), reflect(g, a + b)) == bilinear_form(a + b, a + b));
  // reflections permute the root system
  for (const Root& g : positive_roots())
    for (const Root& r : positive_roots()) {
      CharLattice img = reflect(g, CharLattice::of_root(r));
      CHECK(img.ca.is_integer());
      CHECK(img.cb.is_integer());
      CHECK(is_root(Root{static_cast<int>(img.ca.num().get_si()),
                         static_cast<int>(img.cb.num().get_si())}));
    }
}

TEST_CASE("torus exponent encoding round trips") {
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q) {
      CharLattice chi = char_from_torus_exponents(p, q);
      CHECK(torus_exponents(chi) == std::pair<long, long>(p, q));
    }
  CHECK_THROWS_AS(torus_exponents(CharLattice{Rat(1, 2), Rat(0)}), input_error);
  CHECK_THROWS_AS(root_coord(Root{2, 2}), input_error);
}

}  // TEST_SUITE
