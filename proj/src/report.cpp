#include "g2/report.hpp"

#include "json.hpp"

namespace g2 {

std::string report_json(const std::vector<CheckResult>& results, const CheckContext& ctx) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["context"] = {{"seed", ctx.seed},
                  {"p", ctx.p},
                  {"kappa_min", ctx.kappa_min},
                  {"kappa_max", ctx.kappa_max},
                  {"samples", ctx.samples}};
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  size_t passed = 0;
  for (const CheckResult& r : results) {
    rs.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    passed += r.pass;
  }
  j["results"] = std::move(rs);
  j["summary"] = {{"total", results.size()}, {"passed", passed}};
  return j.dump(2) + "\n";
}

std::string report_text(const std::vector<CheckResult>& results, const CheckContext& ctx) {
  std::string out;
  size_t passed = 0;
  for (const CheckResult& r : results) {
    out += (r.pass ? "PASS  " : "FAIL  ") + r.id + "\n";
    if (!r.pass) out += "      " + r.detail + "\n";
    passed += r.pass;
  }
  out += std::to_string(passed) + "/" + std::to_string(results.size()) +
         " checks passed (seed " + std::to_string(ctx.seed) + ", p " +
         std::to_string(ctx.p) + ", " + std::to_string(ctx.samples) +
         " samples)\n";
  return out;
}

}  // namespace g2
