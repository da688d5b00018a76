#include "doctest.h"

#include "g2/nbar.hpp"
#include "g2/stability.hpp"

using namespace g2;

TEST_SUITE("stability") {

TEST_CASE("character constants come out of the root data") {
  const auto& cc = character_constants();
  CHECK(cc.rho_det_multiple == Rat(5));
  CHECK(cc.two_rho == Rat(5) * det_char());
  CHECK(cc.z_scaling_exponent == 10);
  CHECK(cc.tilde_alpha_central == 20);
  CHECK(cc.det_power_s_coeff == Rat(10));
  CHECK(cc.det_power_const == Rat(5, 2));
  CHECK(cc.pairing_two_rho_alpha == Rat(5, 2));
  // the stated scalar and the computed pairing disagree; both are recorded
  CHECK(cc.claimed_tilde_alpha_multiple == Rat(4));
  CHECK(cc.pairing_two_rho_alpha != cc.claimed_tilde_alpha_multiple);
  // central exponent of 2rho equals the sum of the derived scaling weights
  auto zc = central_conj_certificate();
  long sum = 0;
  for (long w : zc.weights) sum += w;
  CHECK(cc.z_scaling_exponent == sum);
}

TEST_CASE("ledger rows carry the frozen responses") {
  IntegrandLedger led = build_ledger();
  REQUIRE(led.rows.size() == 6);
  const long expected[6][4] = {
      {0, 0, 0, 0},     // inverse gamma factor
      {0, 0, 0, 0},     // difference of Bessel-type integrals
      {0, -2, 0, 0},    // omega(det m)
      {2, 4, 0, 0},     // (omega_pi omega^2)^-2(x_alpha)
      {0, 0, -5, -20},  // |det m|^(10s + 5/2)
      {0, 0, 4, 0},     // measure
  };
  for (int i = 0; i < 6; ++i) {
    CHECK(led.rows[i].e_omega_pi == expected[i][0]);
    CHECK(led.rows[i].e_omega == expected[i][1]);
    CHECK(led.rows[i].t_const == expected[i][2]);
    CHECK(led.rows[i].t_s_coeff == expected[i][3]);
  }
  CHECK(led.net_e_omega_pi == 2);
  CHECK(led.net_e_omega == 2);
  CHECK(led.net_t_const == -1);
  CHECK(led.net_t_s_coeff == -20);
}

TEST_CASE("net |t| exponent is tied to the determinant weight") {
  IntegrandLedger led = build_ledger();
  const auto& hc = homogeneity_certificate();
  const auto& cc = character_constants();
  long w_det = hc.weight_of("m.det");
  CHECK(led.net_t_s_coeff == w_det * cc.det_power_s_coeff.num().get_si());
  // constant part: w_det * 5/2 plus the measure weight 4
  CHECK(Rat(led.net_t_const) ==
        Rat(w_det) * cc.det_power_const + Rat(hc.measure_weight));
}

TEST_CASE("with unit scaling the vanishing is forced") {
  StabilityAudit a = stability_audit(true);
  CHECK(a.vanishing_forced);
  CHECK(a.char_exp_omega_pi == 2);
  CHECK(a.char_exp_omega == 2);
  CHECK(a.residual_t_const == 0);
  CHECK(a.residual_t_s_coeff == 0);
  CHECK(a.conclusion.find("vanishes") != std::string::npos);
  CHECK(a.conclusion.find("t^2") != std::string::npos);
}

TEST_CASE("without unit scaling an absolute-value factor survives") {
  StabilityAudit a = stability_audit(false);
  CHECK(!a.vanishing_forced);
  CHECK(a.residual_t_const == -1);
  CHECK(a.residual_t_s_coeff == -20);
  CHECK(a.conclusion.find("|t|^(-1 - 20 s)") != std::string::npos);
  CHECK(a.conclusion.find("does not close") != std::string::npos);
}

TEST_CASE("generic character functional reads the two simple coordinates") {
  // u = exp(x01 X01) exp(x10 X10) has functional value x01 + x10
  Mat7<Rat> u = one_param(kBeta, Rat(3)) * one_param(kAlpha, Rat(5));
  CHECK(generic_character_functional(u) == Rat(8));
  // additive on the one-parameter factors even though they do not commute
  Mat7<Rat> v = one_param(kAlpha, Rat(-2)) * one_param(kBeta, Rat(7));
  CHECK(generic_character_functional(v) == Rat(5));
  CHECK_THROWS_AS(generic_character_functional(nbar_group(
                      NbarCoords<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)})),
                  input_error);
}

}  // TEST_SUITE
