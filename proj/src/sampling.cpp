#include "g2/sampling.hpp"

#include <optional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "g2/rng.hpp"

namespace g2 {

namespace {

// Run one deterministic trial per index, serially or under OpenMP. The
// reported failure is always the one with the smallest index, so both modes
// and all thread counts produce identical stats.
template <typename Trial>
SampleStats run_trials(long samples, ExecPolicy pol, const Trial& trial) {
  SampleStats st;
  st.total = samples;
  if (!pol.parallel) {
    for (long i = 0; i < samples; ++i) {
      std::optional<std::string> bad;
      try {
        bad = trial(i);
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      if (bad) {
        ++st.failures;
        if (st.first_failure_index < 0) {
          st.first_failure_index = i;
          st.first_failure = *bad;
        }
      }
    }
    return st;
  }

#ifdef _OPENMP
  int want = pol.threads > 0 ? pol.threads : omp_get_max_threads();
  long failures = 0;
  long first_idx = -1;
  std::string first_msg;
#pragma omp parallel for schedule(dynamic, 8) num_threads(want) \
    reduction(+ : failures)
  for (long i = 0; i < samples; ++i) {
    std::optional<std::string> bad;
    try {
      bad = trial(i);
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    if (bad) {
      ++failures;
#pragma omp critical(g2_sampling_first)
      {
        if (first_idx < 0 || i < first_idx) {
          first_idx = i;
          first_msg = *bad;
        }
      }
    }
  }
  st.failures = failures;
  st.first_failure_index = first_idx;
  st.first_failure = first_msg;
  return st;
#else
  ExecPolicy serial;
  return run_trials(samples, serial, trial);
#endif
}

std::string describe(const char* what, long index) {
  return std::string(what) + " at sample " + std::to_string(index);
}

}  // namespace

SampleStats sample_trop_soundness(uint64_t seed, unsigned long p, long kappa,
                                  long samples, TropMode mode, ExecPolicy pol) {
  KappaBox box = KappaBox::at(kappa);
  return run_trials(samples, pol, [&](long i) -> std::optional<std::string> {
    Rng rng(seed, "trop-soundness/" + std::to_string(i));
    // even indices sit exactly on the valuation floors, odd ones above
    bool boundary = i % 2 == 0;
    auto draw = [&](long floor_v) {
      return boundary ? rng.with_valuation(p, floor_v, 40)
                      : rng.at_least_valuation(p, floor_v, 3, 40);
    };
    NbarCoords<Rat> u{draw(box.floors[0]), draw(box.floors[1]), draw(box.floors[2]),
                      draw(box.floors[3]), draw(box.floors[4])};
    NbarCoords<Rat> v{draw(box.floors[0]), draw(box.floors[1]), draw(box.floors[2]),
                      draw(box.floors[3]), draw(box.floors[4])};
    ValVec vu = nbar_valuations(u, p);
    ValVec vv = nbar_valuations(v, p);
    if (!box.contains(vu) || !box.contains(vv))
      return describe("drew a sample outside the box", i);
    NbarCoords<Rat> w = nbar_mul(u, v);
    ValVec bound = trop_mul_bound(vu, vv, p, mode);
    ValVec vw = nbar_valuations(w, p);
    for (int k = 0; k < 5; ++k)
      if (!vw.v[k].at_least(bound.v[k]))
        return describe("product valuation beat the tropical bound", i);
    if (!box.contains(vw)) return describe("product escaped the box", i);
    // inverses stay in the box as well
    if (!box.contains(nbar_valuations(nbar_inverse(u), p)))
      return describe("inverse escaped the box", i);
    return std::nullopt;
  });
}

SampleStats sample_solver_agreement(uint64_t seed, long samples, ExecPolicy pol) {
  return run_trials(samples, pol, [&](long i) -> std::optional<std::string> {
    Rng rng(seed, "solver-agreement/" + std::to_string(i));
    Rat x21, x31, x32;
    do {
      x21 = rng.rational(20, 8);
      x31 = rng.rational(20, 8);
      x32 = rng.rational(20, 8);
    } while (discriminant(x21, x32).is_zero());
    auto pt = DomainPoint<Rat>::d0(x21, x31, x32);
    BigCellDecomp<Rat> dec = decompose(pt);  // recomposition checked inside
    NbarCoords<Rat> solved = solve_nbar(pt.n);
    if (!(solved == dec.nbar))
      return describe("pattern solver disagrees with the closed form", i);
    if (!(dec.m.det() * dec.disc == Rat(1)))
      return describe("det(m) * D != 1", i);
    if (!(levi_block_formula(dec.nbar) == dec.m))
      return describe("Levi block formula mismatch", i);
    return std::nullopt;
  });
}

SampleStats sample_group_law(uint64_t seed, long samples, ExecPolicy pol) {
  return run_trials(samples, pol, [&](long i) -> std::optional<std::string> {
    Rng rng(seed, "group-law/" + std::to_string(i));
    auto draw = [&] {
      return NbarCoords<Rat>{rng.rational(12, 6), rng.rational(12, 6),
                             rng.rational(12, 6), rng.rational(12, 6),
                             rng.rational(12, 6)};
    };
    NbarCoords<Rat> a = draw(), b = draw(), c = draw();
    if (!(nbar_group(nbar_mul(a, b)) == nbar_group(a) * nbar_group(b)))
      return describe("law disagrees with the matrix product", i);
    if (!(nbar_mul(nbar_mul(a, b), c) == nbar_mul(a, nbar_mul(b, c))))
      return describe("associativity failed", i);
    if (!(nbar_group(nbar_inverse(a)) == nbar_group(a).inverse()))
      return describe("inverse law disagrees with the matrix inverse", i);
    return std::nullopt;
  });
}

SampleStats sample_reconstruction(uint64_t seed, long samples, ExecPolicy pol) {
  return run_trials(samples, pol, [&](long i) -> std::optional<std::string> {
    Rng rng(seed, "reconstruction/" + std::to_string(i));
    NCoords<Rat> n{rng.nonzero_rational(12, 6), rng.rational(12, 6),
                   rng.rational(12, 6), rng.rational(12, 6), rng.rational(12, 6)};
    auto back = n_from_group(n_group(n));
    if (!back || !(*back == n)) return describe("nilradical roundtrip failed", i);

    NbarCoords<Rat> y{rng.rational(12, 6), rng.rational(12, 6), rng.rational(12, 6),
                      rng.rational(12, 6), rng.rational(12, 6)};
    auto yback = nbar_from_group(nbar_group(y));
    if (!yback || !(*yback == y))
      return describe("opposite-radical roundtrip failed", i);

    // canonical representative: conjugating back recovers the point
    CanonicalRep<Rat> cr = canonical_rep(n, DomainKind::D0);
    if (!cr.t) return describe("missing central parameter", i);
    NCoords<Rat> again = conj_um(-cr.u, conj_zm(Rat(1) / *cr.t, cr.rep.n));
    if (!(again == n)) return describe("orbit representative roundtrip failed", i);
    if (!(cr.rep.n.x10 == Rat(1)) || !cr.rep.n.x11.is_zero())
      return describe("representative not in the slice", i);
    return std::nullopt;
  });
}

}  // namespace g2
