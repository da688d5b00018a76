// Times the sampling kernels serially and under OpenMP. Every sample draws
// from its own counter-based stream, so the two runs must report identical
// statistics; the benchmark fails loudly if they ever diverge.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "g2/sampling.hpp"

using namespace g2;

namespace {

using Kernel = std::function<SampleStats(long samples, ExecPolicy pol)>;

long run_ms(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
}

bool bench(const std::string& name, const Kernel& k, long samples) {
  SampleStats serial, parallel;
  long ms_serial = run_ms([&] { serial = k(samples, ExecPolicy{false, 0}); });
  long ms_parallel = run_ms([&] { parallel = k(samples, ExecPolicy{true, 0}); });
  bool same = serial.total == parallel.total && serial.failures == parallel.failures &&
              serial.first_failure_index == parallel.first_failure_index;
  double speedup = ms_parallel > 0 ? static_cast<double>(ms_serial) / ms_parallel : 0.0;
  std::printf("%-24s %8ld %10ld %10ld %9.2fx %8s %s\n", name.c_str(), samples,
              ms_serial, ms_parallel, speedup, serial.pass() ? "clean" : "FAIL",
              same ? "identical" : "DIVERGED");
  return same && serial.pass();
}

}  // namespace

int main() {
  const uint64_t seed = 7;
  std::printf("%-24s %8s %10s %10s %10s %8s %s\n", "kernel", "samples", "serial",
              "openmp", "speedup", "status", "stats");
  std::printf("%-24s %8s %10s %10s %10s %8s %s\n", "", "", "(ms)", "(ms)", "", "", "");

  bool ok = true;
  for (long n : {2000L, 8000L})
    ok &= bench("group_law", [&](long s, ExecPolicy p) {
      return sample_group_law(seed, s, p);
    }, n);
  for (long n : {5000L, 20000L})
    ok &= bench("trop_soundness", [&](long s, ExecPolicy p) {
      return sample_trop_soundness(seed, 5, 2, s, TropMode::kPlain, p);
    }, n);
  for (long n : {2000L, 8000L})
    ok &= bench("reconstruction", [&](long s, ExecPolicy p) {
      return sample_reconstruction(seed, s, p);
    }, n);
  for (long n : {100L, 400L})
    ok &= bench("solver_agreement", [&](long s, ExecPolicy p) {
      return sample_solver_agreement(seed, s, p);
    }, n);

  if (!ok) {
    std::printf("benchmark detected a kernel failure or a serial/parallel divergence\n");
    return 1;
  }
  return 0;
}
