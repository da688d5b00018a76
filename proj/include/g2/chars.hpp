#pragma once

#include <string>
#include <vector>

#include "g2/weyl.hpp"

namespace g2 {

// Roots of the torus in the unipotent radical of the standard parabolic: all
// positive roots except beta itself.
inline const std::vector<Root>& nilradical_roots() {
  static const std::vector<Root> roots = [] {
    std::vector<Root> out;
    for (const Root& r : positive_roots())
      if (!(r == kBeta)) out.push_back(r);
    return out;
  }();
  return roots;
}

// Character of the Levi torus acting by u*v on diag(u, v), i.e. the
// determinant, located in the alpha/beta basis by its torus exponents.
inline CharLattice det_char() { return char_from_torus_exponents(1, 1); }

// Value exponent of an integral character on the central cocharacter
// t -> diag(t, t) of the Levi.
inline long central_exponent(const CharLattice& chi) {
  auto [p, q] = torus_exponents(chi);
  return p + q;
}

// The exponent table behind the unramified-character bookkeeping. Everything
// here is computed from the root data; the claimed fields record the stated
// constants they are checked against.
struct CharacterConstants {
  CharLattice two_rho;           // sum of the nilradical roots
  CharLattice det_character;     // determinant as a torus character
  Rat rho_det_multiple;          // two_rho = rho_det_multiple * det_character
  long z_scaling_exponent;       // two_rho on the central cocharacter
  long tilde_alpha_central;      // 4*rho on the central cocharacter (Tate argument / 2s)
  Rat det_power_s_coeff;         // |det|^(det_power_s_coeff * s + det_power_const)
  Rat det_power_const;
  Rat pairing_two_rho_alpha;     // 2(rho, alpha)/(alpha, alpha)
  Rat claimed_tilde_alpha_multiple;  // the stated scalar in tilde_alpha = c * rho
};

inline const CharacterConstants& character_constants() {
  static const CharacterConstants k = [] {
    CharacterConstants c;
    c.two_rho = CharLattice{};
    for (const Root& r : nilradical_roots()) c.two_rho = c.two_rho + CharLattice::of_root(r);
    c.det_character = det_char();

    // two_rho is a rational multiple of det_character; solve for it and check.
    c.rho_det_multiple = c.two_rho.ca / c.det_character.ca;
    if (!(c.rho_det_multiple * c.det_character == c.two_rho))
      throw internal_error("sum of nilradical roots is not proportional to the determinant character");

    c.z_scaling_exponent = central_exponent(c.two_rho);
    c.tilde_alpha_central = central_exponent(Rat(2) * c.two_rho);  // 4 rho = 2 * (2 rho)

    // |det|^(10 s + 5/2) comes from s * tilde_alpha + rho paired with H_M:
    // tilde_alpha = 4 rho contributes (2 * rho_det_multiple) * s per unit of
    // v(det m), and rho itself contributes rho_det_multiple / 2.
    c.det_power_s_coeff = Rat(2) * c.rho_det_multiple;
    c.det_power_const = c.rho_det_multiple / Rat(2);

    CharLattice rho = Rat(1, 2) * c.two_rho;
    CharLattice alpha = CharLattice::of_root(kAlpha);
    c.pairing_two_rho_alpha = Rat(2) * bilinear_form(rho, alpha) / bilinear_form(alpha, alpha);
    c.claimed_tilde_alpha_multiple = Rat(4);
    return c;
  }();
  return k;
}

// The additive functional behind the generic character psi(x01 + x10): the sum
// of the two simple-root coordinates of log(u). Defined on the unipotent
// radical of the Borel, i.e. log(u) must have x-coordinates only.
template <typename R>
R generic_character_functional(const Mat7<R>& u) {
  Mat7<R> x = log_unipotent(u);
  auto l = lie_from_matrix(x);
  if (!l) throw input_error("element is not in the realization image");
  static const Sym nonx[] = {Sym::a, Sym::b, Sym::y01, Sym::y10,
                             Sym::y11, Sym::y21, Sym::y31, Sym::y32};
  for (Sym v : nonx)
    if (!(*l)[v].is_zero())
      throw input_error("element is not in the unipotent radical of the Borel");
  return (*l)[Sym::x01] + (*l)[Sym::x10];
}

}  // namespace g2
