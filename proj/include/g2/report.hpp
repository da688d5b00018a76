#pragma once

#include <string>
#include <vector>

#include "g2/checks.hpp"

namespace g2 {

// Machine-readable report of a verification run. Deterministic by design:
// the same selection and context give byte-identical output, so no clocks,
// timings or host details appear here.
std::string report_json(const std::vector<CheckResult>& results, const CheckContext& ctx);

// One line per check plus a summary; details are shown for failures only.
std::string report_text(const std::vector<CheckResult>& results, const CheckContext& ctx);

}  // namespace g2
