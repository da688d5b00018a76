#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "g2/lie.hpp"

namespace g2 {

// Full Weyl group as abstract elements, ordered by length then by the
// lexicographically smallest reduced word (alpha before beta). Dihedral of
// order 12: the identity, ten words alternating in the two letters, and the
// long element.
struct WeylGroup {
  struct Entry {
    WeylElem elem;
    WeylWord word;  // lexicographically smallest reduced word
    int length = 0;
  };
  std::vector<Entry> entries;

  const Entry& find(const WeylElem& e) const {
    for (const Entry& en : entries)
      if (en.elem == e) return en;
    throw internal_error("element is not in the Weyl group table");
  }
};

inline const WeylGroup& weyl_group() {
  static const WeylGroup table = [] {
    WeylGroup g;
    std::map<WeylElem, WeylGroup::Entry> seen;
    std::vector<WeylWord> frontier = {WeylWord{}};
    seen[WeylElem::identity()] = {WeylElem::identity(), {}, 0};
    int length = 0;
    while (!frontier.empty()) {
      ++length;
      std::vector<WeylWord> next;
      for (const WeylWord& w : frontier)
        for (SimpleRef s : {SimpleRef::alpha, SimpleRef::beta}) {
          WeylWord w2 = w;
          w2.push_back(s);
          WeylElem e = word_action(w2);
          if (seen.emplace(e, WeylGroup::Entry{e, w2, length}).second)
            next.push_back(w2);
        }
      frontier = std::move(next);
    }
    for (auto& [e, en] : seen) g.entries.push_back(en);
    std::sort(g.entries.begin(), g.entries.end(), [](const auto& x, const auto& y) {
      if (x.length != y.length) return x.length < y.length;
      return x.word < y.word;
    });
    if (g.entries.size() != 12) throw internal_error("Weyl group closure is not of order 12");
    return g;
  }();
  return table;
}

inline int coxeter_length(const WeylElem& e) { return weyl_group().find(e).length; }

// All reduced words of an element: words of its length that multiply to it.
inline std::vector<WeylWord> reduced_words(const WeylElem& e) {
  int len = coxeter_length(e);
  std::vector<WeylWord> out;
  std::vector<WeylWord> stack = {WeylWord{}};
  for (int i = 0; i < len; ++i) {
    std::vector<WeylWord> next;
    for (const WeylWord& w : stack)
      for (SimpleRef s : {SimpleRef::alpha, SimpleRef::beta}) {
        WeylWord w2 = w;
        w2.push_back(s);
        if (coxeter_length(word_action(w2)) == static_cast<int>(w2.size())) next.push_back(w2);
      }
    stack = std::move(next);
  }
  for (const WeylWord& w : stack)
    if (word_action(w) == e) out.push_back(w);
  return out;
}

namespace detail {

// Normalization of the negative simple root vector: the unique lambda making
// x_gamma(1) exp(lambda Y_gamma) x_gamma(1) normalize the torus. Found by
// collecting the off-diagonal entries of the conjugated Cartan generators as
// polynomials in one unknown and requiring a common root.
inline Rat solve_neg_vector_coeff(SimpleRef s) {
  Root g = simple_root(s);
  RatFn lam = RatFn::var(Sym::x);
  Mat7<RatFn> xg = one_param(g, RatFn(Rat(1)));
  Mat7<RatFn> yg = exp_nilpotent(root_vector(-g, lam));
  Mat7<RatFn> w = xg * yg * xg;
  Mat7<RatFn> winv = w.inverse();

  Poly common;
  for (int basis = 0; basis < 2; ++basis) {
    Mat7<RatFn> h = cartan_element(ring_cast<RatFn>(basis == 0 ? 1 : 0),
                                   ring_cast<RatFn>(basis == 0 ? 0 : 1));
    Mat7<RatFn> c = w * h * winv;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (i != j && !c.at(i, j).is_zero()) common = gcd(common, c.at(i, j).num());
  }
  if (common.is_zero())
    throw internal_error("normalizer condition is vacuous for a simple root");
  if (common.degree_in(Sym::x) != 1 || common.total_degree() != 1)
    throw internal_error("normalizer condition does not pin a unique coefficient");
  Rat c1 = common.coeff_of(Sym::x, 1).constant_value();
  Rat c0 = common.coeff_of(Sym::x, 0).constant_value();
  return -c0 / c1;
}

}  // namespace detail

// Coefficient lambda of the normalized negative simple root vector
// x_{-gamma}(t) = exp(lambda t Y_gamma).
inline Rat neg_vector_coeff(SimpleRef s) {
  static const Rat la = detail::solve_neg_vector_coeff(SimpleRef::alpha);
  static const Rat lb = detail::solve_neg_vector_coeff(SimpleRef::beta);
  return s == SimpleRef::alpha ? la : lb;
}

// Normalized negative simple root subgroup.
template <typename R>
Mat7<R> one_param_neg(SimpleRef s, const R& t) {
  return exp_nilpotent(root_vector(-simple_root(s), ring_cast<R>(neg_vector_coeff(s)) * t));
}

// Canonical representative of a simple reflection.
inline const Mat7<Rat>& wdot(SimpleRef s) {
  static const Mat7<Rat> wa = [] {
    Mat7<Rat> x = one_param(kAlpha, Rat(1));
    return x * one_param_neg(SimpleRef::alpha, Rat(1)) * x;
  }();
  static const Mat7<Rat> wb = [] {
    Mat7<Rat> x = one_param(kBeta, Rat(1));
    return x * one_param_neg(SimpleRef::beta, Rat(1)) * x;
  }();
  return s == SimpleRef::alpha ? wa : wb;
}

// Representative of a word, after checking the word is reduced. A non-reduced
// word would silently give a torus multiple of the canonical representative,
// so it is rejected, naming a reduced word for the same element.
inline Mat7<Rat> weyl_rep(const WeylWord& w) {
  WeylElem e = word_action(w);
  if (coxeter_length(e) != static_cast<int>(w.size()))
    throw input_error("word " + word_str(w) + " is not reduced; a reduced word for its element is " +
                      word_str(weyl_group().find(e).word));
  Mat7<Rat> m = Mat7<Rat>::identity();
  for (SimpleRef s : w) m = m * wdot(s);
  return m;
}

struct WeylTableEntry {
  WeylElem elem;
  WeylWord word;
  int length = 0;
  Mat7<Rat> rep;
};

// Canonical representatives of all 12 elements. Built once; construction
// verifies that every reduced word of an element yields the same matrix and
// that each representative normalizes the torus.
inline const std::vector<WeylTableEntry>& weyl_table() {
  static const std::vector<WeylTableEntry> table = [] {
    std::vector<WeylTableEntry> out;
    for (const WeylGroup::Entry& en : weyl_group().entries) {
      WeylTableEntry t{en.elem, en.word, en.length, weyl_rep(en.word)};
      for (const WeylWord& w : reduced_words(en.elem))
        if (!(weyl_rep(w) == t.rep))
          throw internal_error("representative of " + word_str(en.word) +
                               " depends on the reduced word " + word_str(w));
      out.push_back(t);
    }
    return out;
  }();
  return table;
}

inline const Mat7<Rat>& wdot_long() {
  static const Mat7<Rat> wl = [] {
    for (const WeylTableEntry& t : weyl_table())
      if (t.length == 6) return t.rep;
    throw internal_error("no length-6 element in the Weyl table");
  }();
  return wl;
}

// Representative of the element sending beta to itself and alpha to a
// negative root: w_long composed with the beta reflection.
inline const Mat7<Rat>& wdot_zero() {
  static const Mat7<Rat> w0 = wdot_long() * wdot(SimpleRef::beta).inverse();
  return w0;
}

// Torus conjugation route for the Weyl action on integral characters:
// (w.chi)(t) = chi(n^-1 t n) for a representative n.
inline CharLattice weyl_action_by_matrix(const Mat7<Rat>& rep, const CharLattice& chi) {
  auto [p, q] = torus_exponents(chi);
  Mat7<RatFn> t = torus_element(RatFn::var(Sym::a), RatFn::var(Sym::b));
  Mat7<RatFn> c = to_ratfn(rep.inverse()) * t * to_ratfn(rep);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (i != j && !c.at(i, j).is_zero())
        throw input_error("matrix does not normalize the torus");
  auto exponents = [](const RatFn& entry) {
    const Poly& n = entry.num();
    const Poly& d = entry.den();
    if (!n.is_monomial() || !(n.leading_coeff() == Rat(1)))
      throw internal_error("conjugated torus entry is not a plain monomial");
    long eu = n.leading_exp()[sym_index(Sym::a)] - d.degree_in(Sym::a);
    long ev = n.leading_exp()[sym_index(Sym::b)] - d.degree_in(Sym::b);
    return std::pair<long, long>{eu, ev};
  };
  auto [u1, v1] = exponents(c.at(0, 0));
  auto [u2, v2] = exponents(c.at(1, 1));
  // chi evaluated at the conjugated point: u^(p*u1 + q*u2) v^(p*v1 + q*v2).
  return char_from_torus_exponents(p * u1 + q * u2, p * v1 + q * v2);
}

}  // namespace g2
