#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "g2/bigcell.hpp"
#include "g2/chars.hpp"

namespace g2 {

// Response of one multiplicative factor of the orbit-space integrand to the
// substitution (x21, x31, x32) -> (t x21, t x31, t^2 x32):
//   factor -> omega_pi(t)^e_omega_pi * omega(t)^e_omega * |t|^(t_const + s t_s_coeff) * factor.
struct LedgerRow {
  std::string factor;
  long e_omega_pi = 0;
  long e_omega = 0;
  long t_const = 0;
  long t_s_coeff = 0;
  std::string source;
};

struct IntegrandLedger {
  std::vector<LedgerRow> rows;
  long net_e_omega_pi = 0;
  long net_e_omega = 0;
  long net_t_const = 0;
  long net_t_s_coeff = 0;
};

// Assemble the ledger from certified inputs only: the scaling weights of the
// decomposition components and the character-theoretic constants. Refuses to
// run if the homogeneity certificate did not pass.
inline IntegrandLedger build_ledger() {
  const HomogeneityCertificate& hc = homogeneity_certificate();
  if (!hc.pass)
    throw input_error("homogeneity certificate failed; the ledger would be unsound");
  const CharacterConstants& cc = character_constants();

  long w_det = hc.weight_of("m.det");     // -2
  long w_xa = hc.weight_of("x_alpha");    // -1
  long w_meas = hc.measure_weight;        // +4
  if (!cc.det_power_s_coeff.is_integer() || !(cc.det_power_const * Rat(2)).is_integer())
    throw internal_error("determinant power is not of the expected shape");
  long det_s = cc.det_power_s_coeff.num().get_si();        // 10
  long det_c2 = (cc.det_power_const * Rat(2)).num().get_si();  // 5 = 2 * 5/2

  IntegrandLedger led;
  led.rows.push_back({"gamma(40s, omega_pi^2 omega^2, psi)^-1", 0, 0, 0, 0,
                      "no dependence on (x21, x31, x32)"});
  led.rows.push_back({"J(n, f1^0) - J(n, f2^0)", 0, 0, 0, 0,
                      "invariant for t in a small unit subgroup H (smoothness)"});
  // omega(det m): det m picks up t^w_det
  led.rows.push_back({"omega(det m)", 0, w_det, 0, 0,
                      "certified weight of m.det = " + std::to_string(w_det)});
  // (omega_pi omega^2)^{-2}(x_alpha): x_alpha picks up t^w_xa
  led.rows.push_back({"(omega_pi omega^2)^-2(x_alpha)", -2 * w_xa, -4 * w_xa, 0, 0,
                      "certified weight of x_alpha = " + std::to_string(w_xa)});
  // |det m|^{10 s + 5/2}
  if ((w_det * det_c2) % 2 != 0)
    throw internal_error("determinant-power response is not an integer |t|-exponent");
  led.rows.push_back({"|det m|^(10s + 5/2)", 0, 0, w_det * det_c2 / 2, w_det * det_s,
                      "certified weight of m.det and the derived determinant power"});
  led.rows.push_back({"dx21 dx31 dx32", 0, 0, w_meas, 0,
                      "certified scaling-map jacobian weight = " + std::to_string(w_meas)});

  for (const LedgerRow& r : led.rows) {
    led.net_e_omega_pi += r.e_omega_pi;
    led.net_e_omega += r.e_omega;
    led.net_t_const += r.t_const;
    led.net_t_s_coeff += r.t_s_coeff;
  }
  return led;
}

// Outcome of the change-of-variables argument. The difference of local
// coefficients equals its own multiple by the net factor; a choice of t with
// nontrivial character value then forces the difference to vanish.
struct StabilityAudit {
  IntegrandLedger ledger;
  bool unit_scaling = true;     // t ranges over a compact unit subgroup
  long char_exp_omega_pi = 0;   // net character factor (omega_pi omega)(t^2): (2, 2)
  long char_exp_omega = 0;
  long residual_t_const = 0;    // |t| exponent remaining after the unit assumption
  long residual_t_s_coeff = 0;
  bool vanishing_forced = false;
  std::string conclusion;
};

inline StabilityAudit stability_audit(bool unit_scaling) {
  StabilityAudit a;
  a.ledger = build_ledger();
  a.unit_scaling = unit_scaling;
  a.char_exp_omega_pi = a.ledger.net_e_omega_pi;
  a.char_exp_omega = a.ledger.net_e_omega;
  a.residual_t_const = unit_scaling ? 0 : a.ledger.net_t_const;
  a.residual_t_s_coeff = unit_scaling ? 0 : a.ledger.net_t_s_coeff;

  bool char_nontrivial_possible =
      a.char_exp_omega_pi != 0 && a.char_exp_omega == a.char_exp_omega_pi;
  bool absolute_value_neutral = a.residual_t_const == 0 && a.residual_t_s_coeff == 0;
  a.vanishing_forced = char_nontrivial_possible && absolute_value_neutral;

  if (a.vanishing_forced)
    a.conclusion =
        "difference = (omega_pi omega)(t^" + std::to_string(a.char_exp_omega_pi) +
        ") * difference; a highly ramified omega admits t with value != 1, so the "
        "difference vanishes";
  else if (!absolute_value_neutral)
    a.conclusion =
        "an absolute-value factor |t|^(" + std::to_string(a.residual_t_const) +
        (a.residual_t_s_coeff < 0 ? " - " : " + ") +
        std::to_string(std::abs(a.residual_t_s_coeff)) +
        " s) survives; without the unit restriction on t the argument does not close";
  else
    a.conclusion = "net character factor is trivial; no vanishing can be forced";
  return a;
}

}  // namespace g2
