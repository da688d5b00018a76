// Acceptance gate for the library: eleven criteria, each with a time budget
// pinned here. One verdict line per criterion; exit status 0 only when all
// pass. Sampled kernels run under OpenMP with per-sample streams, so their
// statistics do not depend on the thread count.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "g2/checks.hpp"
#include "g2/report.hpp"
#include "g2/sampling.hpp"
#include "g2/stability.hpp"

using namespace g2;

namespace {

struct Verdict {
  bool pass = false;
  std::string note;
};

CheckContext gate_context() {
  CheckContext ctx;
  ctx.seed = 7;
  ctx.p = 5;
  ctx.kappa_min = 1;
  ctx.kappa_max = 6;
  ctx.samples = 200;
  ctx.exec = ExecPolicy{true, 0};
  return ctx;
}

// Runs the named checks; failing ids and their details go into the note.
bool run_ids(const std::vector<std::string>& ids, const CheckContext& ctx,
             std::string& note) {
  bool ok = true;
  for (const std::string& id : ids) {
    auto res = run_selected(id, ctx);
    for (const CheckResult& r : res)
      if (!r.pass) {
        ok = false;
        note += (note.empty() ? "" : "; ") + r.id + ": " + r.detail;
      }
  }
  return ok;
}

int g_passed = 0;
int g_total = 0;

void criterion(int no, const std::string& title, long budget_ms,
               const std::function<Verdict()>& body) {
  ++g_total;
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.note = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  bool in_budget = ms <= budget_ms;
  bool pass = v.pass && in_budget;
  if (pass) ++g_passed;
  std::string line = std::string(pass ? "PASS" : "FAIL") + " criterion " +
                     (no < 10 ? " " : "") + std::to_string(no) + " [" +
                     std::to_string(ms) + " ms / " + std::to_string(budget_ms) +
                     " ms]: " + title;
  if (!v.note.empty()) line += " -- " + v.note;
  if (!in_budget) line += " -- over budget";
  std::printf("%s\n", line.c_str());
  std::fflush(stdout);
}

Verdict from_checks(const std::vector<std::string>& ids, const CheckContext& ctx) {
  Verdict v;
  v.pass = run_ids(ids, ctx, v.note);
  return v;
}

}  // namespace

int main() {
  const CheckContext ctx = gate_context();

  criterion(1, "defining realization closes under brackets with the Jacobi identity and the Cartan grading",
            1000, [&] { return from_checks({"realization"}, ctx); });

  criterion(2, "Weyl group table of order 12 and the four displayed representatives, including w0",
            1000, [&] { return from_checks({"weyl"}, ctx); });

  criterion(3, "invariant form takes the stated simple-root values and survives the full Weyl action",
            1000, [&] { return from_checks({"form"}, ctx); });

  criterion(4, "Levi embedding is a homomorphism and both conjugation actions have their closed forms symbolically",
            1000, [&] {
              return from_checks({"orbit.levi_embedding",
                                  "orbit.unipotent_conjugation_closed_form",
                                  "orbit.central_conjugation_closed_form"},
                                 ctx);
            });

  criterion(5, "orbit-map jacobians are x10 and t^9 up to sign, matching the |t|^10 dt/|t| bookkeeping",
            1000, [&] {
              return from_checks({"orbit.unipotent_jacobian", "orbit.central_jacobian",
                                  "orbit.modulus_matches_central_exponent"},
                                 ctx);
            });

  criterion(6, "big-cell decomposition holds as 49 rational-function identities; the pattern solver and the closed form agree symbolically and at 200 random points; x_alpha matches through both routes",
            30000, [&] {
              Verdict v = from_checks({"bigcell.pattern_derived",
                                       "bigcell.decomposition_identity",
                                       "bigcell.solver_agreement",
                                       "bigcell.levi_block_formula",
                                       "bigcell.bruhat_factorization",
                                       "bigcell.x_alpha_two_routes",
                                       "bigcell.displayed_sign_readings"},
                                      ctx);
              SampleStats st = sample_solver_agreement(ctx.seed, 200, ctx.exec);
              if (st.total != 200 || !st.pass()) {
                v.pass = false;
                v.note += (v.note.empty() ? "" : "; ") + std::string("sampled solver agreement: ") +
                          std::to_string(st.failures) + "/" + std::to_string(st.total) +
                          " failures" +
                          (st.first_failure.empty() ? "" : " (" + st.first_failure + ")");
              }
              return v;
            });

  criterion(7, "all fifteen homogeneity weights and the measure weight are computed from the symbolic decomposition",
            5000, [&] { return from_checks({"bigcell.homogeneity_table"}, ctx); });

  criterion(8, "group law of the opposite radical is certified symbolically, associativity in 15 variables included",
            60000, [&] {
              Verdict v = from_checks({"nbar.group_law_certificate"}, ctx);
              // the cubic terms admit two readings; record which one survives
              for (const LawReading& r : law_readings())
                if (r.identity_axiom && r.matches_frozen)
                  v.note += (v.note.empty() ? "" : "; ") + std::string("the ") + r.name +
                            " reading alone satisfies the identity axiom and is the law in force";
              return v;
            });

  criterion(9, "at p = 5 the least stable box level is 2 within 1..6, central weights are (1,1,2,3,3), and 10000 boundary products respect the tropical bound",
            60000, [&] {
              Verdict v = from_checks({"nbar.box_minimal_level", "nbar.central_weights",
                                       "nbar.levi_unipotent_threshold"},
                                      ctx);
              long level = minimal_stable_kappa(ctx.p, TropMode::kPlain, ctx.kappa_max);
              SampleStats st =
                  sample_trop_soundness(ctx.seed, ctx.p, level, 10000, TropMode::kPlain, ctx.exec);
              if (st.total != 10000 || !st.pass()) {
                v.pass = false;
                v.note += (v.note.empty() ? "" : "; ") + std::string("tropical soundness: ") +
                          std::to_string(st.failures) + "/" + std::to_string(st.total) +
                          " violations" +
                          (st.first_failure.empty() ? "" : " (" + st.first_failure + ")");
              }
              return v;
            });

  criterion(10, "scaling ledger nets to the character factor (2, 2) with no |t| residue, weights imported from the homogeneity certificate",
            1000, [&] {
              Verdict v = from_checks({"stability.ledger_rows", "stability.net_factor"}, ctx);
              StabilityAudit a = stability_audit(true);
              if (!a.vanishing_forced || a.char_exp_omega_pi != 2 || a.char_exp_omega != 2) {
                v.pass = false;
                v.note += (v.note.empty() ? "" : "; ") + std::string("audit: ") + a.conclusion;
              }
              return v;
            });

  criterion(11, "two full verification runs with the same seed produce byte-identical reports",
            120000, [&] {
              Verdict v;
              CheckContext full = gate_context();
              auto r1 = run_selected("all", full);
              auto r2 = run_selected("all", full);
              std::string j1 = report_json(r1, full);
              std::string j2 = report_json(r2, full);
              bool all_pass = true;
              for (const CheckResult& r : r1) all_pass = all_pass && r.pass;
              v.pass = all_pass && j1 == j2;
              if (j1 != j2) v.note = "reports differ between runs";
              else if (!all_pass) v.note = "a check failed inside the full run";
              return v;
            });

  std::printf("%d/%d criteria passed\n", g_passed, g_total);
  return g_passed == g_total ? 0 : 1;
}
