#include "doctest.h"

#include <map>

#include "g2/ratfn.hpp"

using namespace g2;

namespace {

RatFn X() { return RatFn::var(Sym::x21); }
RatFn Y() { return RatFn::var(Sym::x31); }

// cross-multiplication oracle: f == g as abstract fractions
bool same_fraction(const RatFn& f, const RatFn& g) {
  return f.num() * g.den() == g.num() * f.den();
}

}  // namespace

TEST_SUITE("ratfn") {

TEST_CASE("normal form: different routes, identical representation") {
  // (x^2 - y^2)/(x - y) reduces to x + y
  RatFn f(Poly::var(Sym::x21).pow(2) - Poly::var(Sym::x31).pow(2),
          Poly::var(Sym::x21) - Poly::var(Sym::x31));
  CHECK(f == X() + Y());
  CHECK(f.is_polynomial());

  // denominator gets leading coefficient 1
  RatFn g(Poly(Rat(1)), Rat(2) * Poly::var(Sym::x21));
  CHECK(g.den() == Poly::var(Sym::x21));
  CHECK(g.num() == Poly(Rat(1, 2)));
}

TEST_CASE("field identities survive reduction") {
  RatFn f = X() / (X() + 1);
  RatFn g = (X() - 1) / X().pow(2);
  RatFn h = 1 / (Y() + X());
  CHECK(same_fraction(f + g, g + f));
  CHECK(f * (g + h) == f * g + f * h);
  CHECK(f * f.inverse() == RatFn(1));
  CHECK((f - f).is_zero());
  CHECK(f / g == f * g.inverse());
  CHECK(f.pow(-2) == f.inverse().pow(2));
  CHECK_THROWS_AS(RatFn().inverse(), input_error);
}

TEST_CASE("evaluation commutes with arithmetic") {
  RatFn f = (X() + 2) / (X() - 1);
  RatFn g = X() / (X() + 3);
  std::map<Sym, Rat> pt{{Sym::x21, Rat(5, 2)}};
  CHECK((f * g).eval(pt) == f.eval(pt) * g.eval(pt));
  CHECK((f + g).eval(pt) == f.eval(pt) + g.eval(pt));
  CHECK(f.inverse().eval(pt) == Rat(1) / f.eval(pt));
  CHECK_THROWS_AS(f.eval({{Sym::x21, Rat(1)}}), input_error);
}

TEST_CASE("derivative obeys the quotient rule") {
  RatFn f = (X().pow(2) + Y()) / (X() - Y());
  RatFn n(f.num()), d(f.den());
  CHECK(f.derivative(Sym::x21) ==
        (n.derivative(Sym::x21) * d - n * d.derivative(Sym::x21)) / d.pow(2));
  // d/dx (1/x) = -1/x^2
  CHECK(X().inverse().derivative(Sym::x21) == -X().pow(-2));
}

TEST_CASE("substitution is composition") {
  RatFn f = X() / (X() + 1);
  RatFn inner = Y().pow(2) - 1;
  RatFn composed = f.substitute({{Sym::x21, inner}});
  CHECK(composed == (Y().pow(2) - 1) / Y().pow(2));
  // numeric cross-check at y = 3
  std::map<Sym, Rat> pt{{Sym::x31, Rat(3)}};
  CHECK(composed.eval(pt) == f.eval({{Sym::x21, inner.eval(pt)}}));
  // unbound variables pass through untouched
  RatFn g = X() + Y();
  CHECK(g.substitute({{Sym::x21, RatFn(Rat(0))}}) == Y());
}

TEST_CASE("weighted degree of a quotient") {
  Grading gr;
  gr.weights = {{Sym::x21, 1}, {Sym::x31, 2}};
  RatFn f = X().pow(2) / Y();  // 2 - 2 = 0
  CHECK(f.weighted_degree(gr) == 0);
  RatFn g = (X().pow(2) + Y()) / X();  // homogeneous over homogeneous
  CHECK(g.weighted_degree(gr) == 1);
  RatFn h = (X() + Y()) / X();
  CHECK(!h.weighted_degree(gr));
}

}  // TEST_SUITE
