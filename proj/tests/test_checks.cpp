#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "g2/checks.hpp"
#include "g2/report.hpp"

using namespace g2;

TEST_SUITE("checks") {

TEST_CASE("registry manifest is frozen, ids in order") {
  const std::vector<std::string> expected = {
      "realization.bracket_closure",
      "realization.jacobi_identity",
      "realization.cartan_grading",
      "form.simple_root_values",
      "form.weyl_invariance",
      "weyl.order_twelve",
      "weyl.braid_independence",
      "weyl.negative_coefficient_forced",
      "weyl.displayed_representatives",
      "weyl.longest_element_factorization",
      "weyl.character_action_two_routes",
      "orbit.levi_embedding",
      "orbit.unipotent_conjugation_closed_form",
      "orbit.central_conjugation_closed_form",
      "orbit.unipotent_jacobian",
      "orbit.central_jacobian",
      "orbit.modulus_matches_central_exponent",
      "orbit.reconstruction_sampled",
      "bigcell.pattern_derived",
      "bigcell.decomposition_identity",
      "bigcell.solver_agreement",
      "bigcell.levi_block_formula",
      "bigcell.bruhat_factorization",
      "bigcell.x_alpha_two_routes",
      "bigcell.homogeneity_table",
      "bigcell.displayed_sign_readings",
      "nbar.group_law_certificate",
      "nbar.group_law_sampled",
      "nbar.central_weights",
      "nbar.box_minimal_level",
      "nbar.tropical_soundness",
      "nbar.levi_unipotent_threshold",
      "chars.constants_chain",
      "stability.ledger_rows",
      "stability.net_factor",
  };
  const auto& reg = all_checks();
  REQUIRE(reg.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(reg[i].id == expected[i]);
    CHECK(!reg[i].title.empty());
    CHECK(reg[i].run != nullptr);
  }
  std::set<std::string> unique;
  for (const auto& c : reg) unique.insert(c.id);
  CHECK(unique.size() == reg.size());
}

TEST_CASE("selection by id, by prefix, and the whole registry") {
  CHECK(select_checks("all").size() == all_checks().size());
  auto one = select_checks("weyl.order_twelve");
  REQUIRE(one.size() == 1);
  CHECK(one[0]->id == "weyl.order_twelve");
  auto fam = select_checks("stability");
  REQUIRE(fam.size() == 2);
  CHECK(fam[0]->id == "stability.ledger_rows");
  CHECK(fam[1]->id == "stability.net_factor");
  CHECK(select_checks("realization").size() == 3);
  CHECK_THROWS_AS(select_checks("nosuchfamily"), input_error);
  CHECK_THROWS_AS(select_checks("weyl.order_thirteen"), input_error);
  CHECK_THROWS_AS(select_checks(""), input_error);
}

TEST_CASE("a cheap family runs green and reports deterministically") {
  CheckContext ctx;
  ctx.samples = 20;
  auto res = run_selected("form", ctx);
  REQUIRE(res.size() == 2);
  for (const auto& r : res) {
    CHECK(r.pass);
    CHECK(!r.detail.empty());
  }
  CHECK(report_json(res, ctx) == report_json(run_selected("form", ctx), ctx));
  std::string text = report_text(res, ctx);
  CHECK(text.find("PASS  form.simple_root_values") != std::string::npos);
  CHECK(text.find("2/2 checks passed") != std::string::npos);
}

TEST_CASE("report shape: context echoed, one entry per check") {
  CheckContext ctx;
  ctx.seed = 11;
  ctx.samples = 10;
  auto res = run_selected("weyl.order_twelve", ctx);
  std::string js = report_json(res, ctx);
  CHECK(js.find("\"seed\": 11") != std::string::npos);
  CHECK(js.find("\"samples\": 10") != std::string::npos);
  CHECK(js.find("\"weyl.order_twelve\"") != std::string::npos);
  CHECK(js.find("\"schema_version\": 1") != std::string::npos);
  CHECK(js.back() == '\n');
}

TEST_CASE("failures carry details instead of throwing") {
  // a context with an impossible kappa range makes the box scan throw inside
  // the check; run_selected converts that into a failing result
  CheckContext ctx;
  ctx.kappa_max = 0;
  auto res = run_selected("nbar.box_minimal_level", ctx);
  REQUIRE(res.size() == 1);
  CHECK(!res[0].pass);
  CHECK(!res[0].detail.empty());
}

}  // TEST_SUITE
