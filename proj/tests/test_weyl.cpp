#include "doctest.h"

#include <set>

#include "g2/weyl.hpp"

using namespace g2;

namespace {

using M = Mat7<Rat>;

const WeylWord kA{SimpleRef::alpha};
const WeylWord kB{SimpleRef::beta};

M stated(std::initializer_list<std::array<int, 3>> entries) {
  M m;
  for (const auto& [r, c, v] : entries) m.at(r - 1, c - 1) = Rat(v);  // 1-indexed
  return m;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("group table: order, lengths, involutions") {
  const auto& g = weyl_group();
  CHECK(g.entries.size() == 12);
  std::multiset<int> lengths;
  for (const auto& e : g.entries) lengths.insert(e.length);
  CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6});
  for (const auto& e : g.entries) {
    CHECK(word_action(e.word) == e.elem);
    CHECK(static_cast<int>(e.word.size()) == e.length);
  }
  // simple reflections square to the identity, and the braid relation holds
  WeylElem sa = word_action(kA), sb = word_action(kB);
  CHECK(sa * sa == WeylElem::identity());
  CHECK(sb * sb == WeylElem::identity());
  WeylElem ab = sa * sb;
  WeylElem p = WeylElem::identity();
  for (int i = 0; i < 6; ++i) p = p * ab;
  CHECK(p == WeylElem::identity());
}

TEST_CASE("negative root vector normalization is forced to -1") {
  CHECK(neg_vector_coeff(SimpleRef::alpha) == Rat(-1));
  CHECK(neg_vector_coeff(SimpleRef::beta) == Rat(-1));
}

TEST_CASE("representatives of the simple reflections, frozen") {
  CHECK(wdot(SimpleRef::alpha) == stated({{1, 6, -1},
                                          {2, 5, 1},
                                          {3, 4, 1},
                                          {4, 3, -1},
                                          {5, 2, 1},
                                          {6, 1, 1},
                                          {7, 7, -1}}));
  CHECK(wdot(SimpleRef::beta) == stated({{1, 2, 1},
                                         {2, 1, -1},
                                         {3, 3, 1},
                                         {4, 5, 1},
                                         {5, 4, -1},
                                         {6, 6, 1},
                                         {7, 7, 1}}));
}

TEST_CASE("long element and the beta-fixing element, frozen") {
  CHECK(wdot_long() == stated({{1, 4, 1},
                               {2, 5, 1},
                               {3, 6, 1},
                               {4, 1, 1},
                               {5, 2, 1},
                               {6, 3, 1},
                               {7, 7, -1}}));
  CHECK(wdot_zero() == stated({{1, 5, -1},
                               {2, 4, 1},
                               {3, 6, 1},
                               {4, 2, -1},
                               {5, 1, 1},
                               {6, 3, 1},
                               {7, 7, -1}}));
  CHECK(wdot_zero() == wdot_long() * wdot(SimpleRef::beta).inverse());
  // the abstract long element negates every character
  const WeylElem wl = weyl_group().find(word_action(
      WeylWord{SimpleRef::alpha, SimpleRef::beta, SimpleRef::alpha,
               SimpleRef::beta, SimpleRef::alpha, SimpleRef::beta})).elem;
  CharLattice ab{Rat(2), Rat(5)};
  CHECK(wl.apply(ab) == Rat(-1) * ab);
}

TEST_CASE("representative of a word is independent of the reduced word chosen") {
  for (const WeylTableEntry& t : weyl_table()) {
    auto words = reduced_words(t.elem);
    CHECK(!words.empty());
    for (const WeylWord& w : words) CHECK(weyl_rep(w) == t.rep);
  }
  // the table itself is closed under the defining products
  CHECK(weyl_rep(WeylWord{SimpleRef::alpha, SimpleRef::beta}) ==
        wdot(SimpleRef::alpha) * wdot(SimpleRef::beta));
}

TEST_CASE("non-reduced words are rejected, with a usable message") {
  WeylWord aa{SimpleRef::alpha, SimpleRef::alpha};
  CHECK_THROWS_AS(weyl_rep(aa), input_error);
  bool caught = false;
  try {
    weyl_rep(WeylWord{SimpleRef::alpha, SimpleRef::beta, SimpleRef::beta});
  } catch (const input_error& e) {
    caught = true;
    CHECK(std::string(e.what()).find("abb") != std::string::npos);
  }
  CHECK(caught);
}

TEST_CASE("matrix route and lattice route agree on characters") {
  for (const WeylTableEntry& t : weyl_table())
    for (long p = -2; p <= 2; ++p)
      for (long q = -2; q <= 2; ++q) {
        CharLattice chi = char_from_torus_exponents(p, q);
        CHECK(weyl_action_by_matrix(t.rep, chi) == t.elem.apply(chi));
      }
  M not_normalizing = M::identity();
  not_normalizing.at(0, 1) = Rat(1);
  CHECK_THROWS_AS(weyl_action_by_matrix(not_normalizing, CharLattice::of_root(kAlpha)),
                  input_error);
}

TEST_CASE("representatives normalize the torus and respect lengths") {
  // squared simple representatives are the order-2 torus points, not identity
  M wa2 = wdot(SimpleRef::alpha) * wdot(SimpleRef::alpha);
  CHECK(wa2 * wa2 == M::identity());
  CHECK(wa2 != M::identity());
  for (const WeylTableEntry& t : weyl_table()) CHECK(t.rep.det() == Rat(1));
}

}  // TEST_SUITE
