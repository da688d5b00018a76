#pragma once

#include <cstdint>
#include <string>

#include "g2/nbar.hpp"

namespace g2 {

// How a sampled kernel executes. Parallel runs use OpenMP; results are
// identical to serial runs because every sample draws from its own stream.
struct ExecPolicy {
  bool parallel = false;
  int threads = 0;  // 0 = library default
};

struct SampleStats {
  long total = 0;
  long failures = 0;
  long first_failure_index = -1;
  std::string first_failure;

  bool pass() const { return failures == 0; }
};

// Products of box elements: exact coordinate valuations must meet the
// tropical bound, and the product must land back in the box.
SampleStats sample_trop_soundness(uint64_t seed, unsigned long p, long kappa,
                                  long samples, TropMode mode, ExecPolicy pol);

// Numeric decompositions: the pattern solver must agree with the closed form,
// and the recomposition identity must hold.
SampleStats sample_solver_agreement(uint64_t seed, long samples, ExecPolicy pol);

// The frozen multiplication law against the matrix product, plus
// associativity, at random rational triples.
SampleStats sample_group_law(uint64_t seed, long samples, ExecPolicy pol);

// Exponential-coordinate roundtrips and canonical orbit representatives.
SampleStats sample_reconstruction(uint64_t seed, long samples, ExecPolicy pol);

}  // namespace g2
