#include "doctest.h"

#include <map>

#include "g2/poly.hpp"

using namespace g2;

namespace {

Poly x() { return Poly::var(Sym::x21); }
Poly y() { return Poly::var(Sym::x31); }
Poly z() { return Poly::var(Sym::x32); }

Rat at(const Poly& p, const Rat& a, const Rat& b, const Rat& c) {
  return p.eval({{Sym::x21, a}, {Sym::x31, b}, {Sym::x32, c}});
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("ring identities") {
  Poly f = x() * x() - y() * z() + Poly(Rat(1, 2));
  Poly g = x() + z().pow(2);
  Poly h = y() - Poly(Rat(3));
  CHECK(f * g == g * f);
  CHECK(f * (g + h) == f * g + f * h);
  CHECK((f - f).is_zero());
  CHECK(f * Poly(Rat(1)) == f);
  CHECK(f.pow(3) == f * f * f);
}

TEST_CASE("evaluation agrees with arithmetic, point by point") {
  // (x + 2y)(x - y) expanded through the ring must evaluate like the factors
  Poly f = (x() + Rat(2) * y()) * (x() - y());
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      Rat lhs = at(f, Rat(a), Rat(b), Rat(0));
      Rat rhs = (Rat(a) + Rat(2) * Rat(b)) * (Rat(a) - Rat(b));
      CHECK(lhs == rhs);
    }
  CHECK_THROWS_AS(f.eval({{Sym::x21, Rat(1)}}), input_error);
}

TEST_CASE("derivative satisfies the product rule") {
  Poly f = x().pow(3) - Rat(2) * x() * y() + z();
  Poly g = y() * z() + x();
  for (Sym v : {Sym::x21, Sym::x31, Sym::x32})
    CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
  CHECK(x().pow(4).derivative(Sym::x21) == Rat(4) * x().pow(3));
  CHECK(Poly(Rat(7)).derivative(Sym::x21).is_zero());
}

TEST_CASE("coefficient extraction reassembles the polynomial") {
  Poly f = x().pow(2) * y() + Rat(1, 2) * x() * z() - y() + Poly(Rat(5));
  CHECK(Poly::from_univariate(f.univariate_in(Sym::x21), Sym::x21) == f);
  CHECK(f.coeff_of(Sym::x21, 2) == y());
  CHECK(f.coeff_of(Sym::x21, 1) == Rat(1, 2) * z());
  CHECK(f.degree_in(Sym::x21) == 2);
  CHECK(f.degree_in(Sym::x32) == 1);
  CHECK(f.total_degree() == 3);
}

TEST_CASE("gcd divides both inputs") {
  Poly f = x() + y();
  Poly g = x() - y();
  Poly d = gcd(f * g, f * f);
  // d must be a scalar multiple of f: f divides d and d divides f
  CHECK(d.degree_in(Sym::x21) == 1);
  CHECK(d.coeff_of(Sym::x21, 1).is_constant());
  Rat c = d.coeff_of(Sym::x21, 1).constant_value();
  CHECK(d == c * f);
}

TEST_CASE("weighted degree under a grading") {
  Grading g;
  g.weights = {{Sym::x21, 1}, {Sym::x31, 1}, {Sym::x32, 2}};
  CHECK(weighted_degree(x() * x() + z(), g) == 2);
  CHECK(weighted_degree(x() * z(), g) == 3);
  CHECK(!weighted_degree(x() + z(), g));  // inhomogeneous
  CHECK(weighted_degree(Poly(), g) == 0);
}

}  // TEST_SUITE
