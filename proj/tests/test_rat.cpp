#include "doctest.h"

#include "g2/rat.hpp"

using namespace g2;

namespace {

// trial-division oracle for v_p on positive integers
long vp_int(long n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Rat pow5(int e) {
  Rat r(1);
  for (int k = 0; k < (e < 0 ? -e : e); ++k) r = e > 0 ? r * Rat(5) : r / Rat(5);
  return r;
}

}  // namespace

TEST_SUITE("rat") {

TEST_CASE("field axioms on a small grid") {
  for (int an = -3; an <= 3; ++an)
    for (int bn = -3; bn <= 3; ++bn) {
      Rat a(an, 2), b(bn, 3);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + Rat(1)) == a * b + a);
      CHECK(a - a == Rat(0));
      if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("parse and print round trip") {
  const char* ws[] = {"0", "1", "-1", "22/7", "-355/113",
                      "1000000000000000000000000/7"};
  for (const char* w : ws) CHECK(Rat::parse(w).str() == w);
  CHECK(Rat::parse("4/6") == Rat(2, 3));  // normalized on entry
  CHECK_THROWS_AS(Rat::parse("1/0"), input_error);
  CHECK_THROWS_AS(Rat::parse("pi"), input_error);
}

TEST_CASE("vp against trial division") {
  for (long n = 1; n <= 360; ++n)
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
      CHECK(vp(Rat(n), p) == PadicVal::of(vp_int(n, p)));
      CHECK(vp(Rat(1, n), p) == PadicVal::of(-vp_int(n, p)));
    }
  CHECK(vp(Rat(0), 5) == PadicVal::infinity());
  CHECK_THROWS_AS(vp(Rat(1), 6), input_error);
  CHECK_THROWS_AS(vp(Rat(1), 1), input_error);
}

TEST_CASE("valuations are ultrametric") {
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) {
      Rat a = Rat(7) * pow5(i);
      Rat b = Rat(3) * pow5(j);
      CHECK(vp(a * b, 5) == vp(a, 5) + vp(b, 5));
      CHECK(vp(a + b, 5).at_least(min(vp(a, 5), vp(b, 5))));
      if (i != j) CHECK(vp(a + b, 5) == min(vp(a, 5), vp(b, 5)));
    }
}

TEST_CASE("PadicVal ordering and infinity") {
  CHECK(min(PadicVal::of(2), PadicVal::infinity()) == PadicVal::of(2));
  CHECK(PadicVal::infinity().at_least(PadicVal::of(100)));
  CHECK(PadicVal::of(3) + PadicVal::infinity() == PadicVal::infinity());
  CHECK(PadicVal::of(-2).at_least(PadicVal::of(-2)));
  CHECK_FALSE(PadicVal::of(1).at_least(PadicVal::of(2)));
}

}  // TEST_SUITE
