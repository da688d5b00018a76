#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "g2/sampling.hpp"

namespace g2 {

// Knobs shared by every registered check. Sampled checks read seed, samples
// and exec; the box checks read p and the kappa scan bounds.
struct CheckContext {
  uint64_t seed = 7;
  unsigned long p = 5;
  long kappa_min = 1;
  long kappa_max = 6;
  long samples = 1000;
  // sampled checks always run serially once, then again under this policy and
  // require identical statistics
  ExecPolicy exec{true, 0};
};

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Check {
  std::string id;
  std::string title;
  bool (*run)(const CheckContext& ctx, std::string& detail);
};

// The full registry in its fixed order. Ids are stable; tooling and tests key
// on them.
const std::vector<Check>& all_checks();

// Selection by exact id, by dotted prefix ("bigcell" picks bigcell.*), or the
// whole registry via "all". Unknown selectors throw input_error.
std::vector<const Check*> select_checks(const std::string& selector);

// Run the selection; exceptions escaping a check become failures with the
// message in the detail field.
std::vector<CheckResult> run_selected(const std::string& selector, const CheckContext& ctx);

}  // namespace g2
