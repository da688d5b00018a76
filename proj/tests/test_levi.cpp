#include "doctest.h"

#include "g2/levi.hpp"

using namespace g2;

namespace {

using M = Mat7<Rat>;
using N = NCoords<Rat>;

const N kSample{Rat(2), Rat(3), Rat(-1), Rat(5), Rat(7, 2)};

}  // namespace

TEST_SUITE("levi") {

TEST_CASE("block embedding is a homomorphism into the group") {
  GL2Elem<Rat> g{Rat(2), Rat(1), Rat(3), Rat(2)};  // det 1
  GL2Elem<Rat> h{Rat(1), Rat(-2), Rat(0), Rat(3)};  // det 3
  CHECK(embed_levi(g * h) == embed_levi(g) * embed_levi(h));
  CHECK(embed_levi(g.inverse()) == embed_levi(g).inverse());
  CHECK(embed_levi(h).det() == Rat(1));
  CHECK(embed_levi(h).at(5, 5) == Rat(3));   // det slot
  CHECK(embed_levi(h).at(2, 2) == Rat(1, 3));
  GL2Elem<Rat> sing{Rat(1), Rat(2), Rat(2), Rat(4)};
  CHECK_THROWS_AS(embed_levi(sing), input_error);
  CHECK_THROWS_AS(central_element(Rat(0)), input_error);
}

TEST_CASE("nilradical coordinates round trip through exp and log") {
  M u = n_group(kSample);
  auto back = n_from_group(u);
  REQUIRE(back);
  CHECK(*back == kSample);
  // a matrix off the image is rejected
  M off = u;
  off.at(0, 6) = off.at(0, 6) + Rat(1);
  CHECK(!n_from_group(off));
}

TEST_CASE("unipotent conjugation has the stated closed form") {
  for (int xi = -2; xi <= 2; ++xi) {
    Rat x(xi, 2);
    N lhs = conj_um(x, kSample);
    N rhs = conj_um_closed(x, kSample);
    CHECK(lhs == rhs);
    CHECK(rhs.x11 == x * kSample.x10 + kSample.x11);
    CHECK(rhs.x32 == x * kSample.x31 + kSample.x32);
    CHECK(rhs.x10 == kSample.x10);
  }
  // closed form composes like the group: conj by x then y is conj by x + y
  Rat x(1, 3), y(5, 2);
  CHECK(conj_um_closed(y, conj_um_closed(x, kSample)) == conj_um_closed(x + y, kSample));
}

TEST_CASE("central conjugation has the stated weights 1,1,2,3,3") {
  for (int ti : {-3, -1, 1, 2, 5}) {
    Rat t(ti);
    N lhs = conj_zm(t, kSample);
    N rhs = conj_zm_closed(t, kSample);
    CHECK(lhs == rhs);
    CHECK(rhs.x10 == t * kSample.x10);
    CHECK(rhs.x11 == t * kSample.x11);
    CHECK(rhs.x21 == t.pow(2) * kSample.x21);
    CHECK(rhs.x31 == t.pow(3) * kSample.x31);
    CHECK(rhs.x32 == t.pow(3) * kSample.x32);
  }
  // diag(t, t) is central in the Levi, so the two actions commute on the nose
  Rat t(3), x(1, 2);
  CHECK(conj_zm_closed(t, conj_um_closed(x, kSample)) ==
        conj_um_closed(x, conj_zm_closed(t, kSample)));
}

TEST_CASE("canonical representative kills x11, then rescales x10 to 1") {
  auto rd = canonical_rep(kSample, DomainKind::D);
  CHECK(rd.rep.n.x11 == Rat(0));
  CHECK(rd.rep.n.x10 == kSample.x10);
  CHECK(!rd.t);
  CHECK(conj_um_closed(rd.u, kSample) == rd.rep.n);

  auto r0 = canonical_rep(kSample, DomainKind::D0);
  CHECK(r0.rep.n.x10 == Rat(1));
  CHECK(r0.rep.n.x11 == Rat(0));
  REQUIRE(r0.t);
  CHECK(conj_zm_closed(*r0.t, conj_um_closed(r0.u, kSample)) == r0.rep.n);

  // frozen point: (2,3,1,5,7) reduces to (1, 0, 1/4, 5/8, -1/16)
  N p{Rat(2), Rat(3), Rat(1), Rat(5), Rat(7)};
  auto r = canonical_rep(p, DomainKind::D0);
  CHECK(r.rep.n == N{Rat(1), Rat(0), Rat(1, 4), Rat(5, 8), Rat(-1, 16)});
  CHECK(r.u == Rat(-3, 2));
  CHECK(*r.t == Rat(1, 2));

  N stuck{Rat(0), Rat(1), Rat(1), Rat(1), Rat(1)};
  CHECK_THROWS_AS(canonical_rep(stuck, DomainKind::D), input_error);
  CHECK_THROWS_AS(DomainPoint<Rat>::d(Rat(0), Rat(1), Rat(1), Rat(1)), input_error);
}

TEST_CASE("orbit map jacobians carry the certified densities") {
  const auto& um = um_orbit_jacobian();
  CHECK(um.pass);
  CHECK((um.jacobian == RatFn::var(Sym::x10) || um.jacobian == -RatFn::var(Sym::x10)));

  const auto& zm = zm_orbit_jacobian();
  CHECK(zm.pass);
  RatFn t9 = RatFn::var(Sym::t).pow(9);
  CHECK((zm.jacobian == t9 || zm.jacobian == -t9));
}

}  // TEST_SUITE
