#include "doctest.h"

#include "g2/mat7.hpp"

using namespace g2;

namespace {

using M = Mat7<Rat>;

// deterministic small-integer fill, unit upper-triangular
M unit_upper(int salt) {
  M m = M::identity();
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) m.at(i, j) = Rat(((i + 2) * (j + 3) + salt) % 5 - 2);
  return m;
}

M strict_upper(int salt) { return unit_upper(salt) - M::identity(); }

}  // namespace

TEST_SUITE("mat7") {

TEST_CASE("product against direct triple-sum oracle") {
  M a = unit_upper(1), b = unit_upper(4).transpose();
  M ab = a * b;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      Rat s = 0;
      for (int k = 0; k < 7; ++k) s += a.at(i, k) * b.at(k, j);
      CHECK(ab.at(i, j) == s);
    }
}

TEST_CASE("determinant and inverse") {
  M u = unit_upper(0);
  CHECK(u.det() == Rat(1));
  CHECK(u * u.inverse() == M::identity());
  CHECK(u.inverse() * u == M::identity());

  M d;
  for (int i = 0; i < 7; ++i) d.at(i, i) = Rat(i + 1);
  CHECK(d.det() == Rat(5040));

  M general = u * d * unit_upper(2).transpose();
  CHECK(general.det() == Rat(5040));
  CHECK(general * general.inverse() == M::identity());

  M singular;  // rank 1
  for (int j = 0; j < 7; ++j) singular.at(0, j) = Rat(j + 1);
  CHECK(singular.det() == Rat(0));
  CHECK_THROWS_AS(singular.inverse(), input_error);
}

TEST_CASE("det is multiplicative, trace is conjugation invariant") {
  M a = unit_upper(1) * unit_upper(3).transpose();
  M b = unit_upper(5);
  CHECK((a * b).det() == a.det() * b.det());
  M c = b * a * b.inverse();
  CHECK(c.trace() == a.trace());
  CHECK(c.det() == a.det());
}

TEST_CASE("exp and log are mutually inverse on the triangular cone") {
  M n = strict_upper(3);
  M u = exp_nilpotent(n);
  CHECK(u.at(0, 0) == Rat(1));
  CHECK(log_unipotent(u) == n);
  CHECK(exp_nilpotent(log_unipotent(unit_upper(6))) == unit_upper(6));

  // exp turns sums of commuting matrices into products: n and n^2 commute
  M n2 = n * n;
  CHECK(exp_nilpotent(n + n2) == exp_nilpotent(n) * exp_nilpotent(n2));

  CHECK_THROWS_AS(exp_nilpotent(M::identity()), input_error);
  M not_unipotent = M::identity();
  not_unipotent.at(0, 0) = Rat(2);
  CHECK_THROWS_AS(log_unipotent(not_unipotent), input_error);
}

TEST_CASE("zero pattern parsing and matching") {
  std::array<std::string, 7> rows{"1000000", "0100000", "0010000", "0001000",
                                  "0000100", "0000010", "000000*"};
  ZeroPattern p = ZeroPattern::parse(rows);
  CHECK(p.constrained_cells() == 48);
  CHECK(p.cell(6, 6) == ZeroPattern::kFree);
  CHECK(matches_pattern(M::identity(), p));

  M off = M::identity();
  off.at(6, 6) = Rat(9);
  CHECK(matches_pattern(off, p));  // free cell accepts anything
  off.at(0, 0) = Rat(2);
  CHECK(!matches_pattern(off, p));  // one-cell rejects 2
  off.at(0, 0) = Rat(1);
  off.at(0, 1) = Rat(1);
  CHECK(!matches_pattern(off, p));  // zero-cell rejects 1

  CHECK_THROWS_AS(ZeroPattern::parse({"10", "", "", "", "", "", ""}), input_error);
  CHECK_THROWS_AS(
      ZeroPattern::parse({"x000000", "0000000", "0000000", "0000000", "0000000",
                          "0000000", "0000000"}),
      input_error);
}

TEST_CASE("symbolic entries go through the same kernels") {
  Mat7<RatFn> n;
  n.at(0, 1) = RatFn::var(Sym::x21);
  n.at(1, 2) = RatFn::var(Sym::x32);
  Mat7<RatFn> u = exp_nilpotent(n);
  CHECK(u.at(0, 2) == RatFn(Rat(1, 2)) * RatFn::var(Sym::x21) * RatFn::var(Sym::x32));
  CHECK(log_unipotent(u) == n);
  CHECK(u.det() == RatFn(1));
}

}  // TEST_SUITE
