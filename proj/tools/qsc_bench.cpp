// Benchmark comparing the serial reference path against the OpenMP-parallel
// driver on representative verification workloads. Results must agree
// exactly (the arithmetic is exact); timings go to stdout.

#include <chrono>
#include <iostream>

#include "qsc/parallel.hpp"
#include "qsc/verify.hpp"

using namespace qsc;
using Clock = std::chrono::steady_clock;

namespace {

double run_once(const std::string& check, VerifyConfig cfg, int threads,
                CheckResult& out) {
  cfg.threads = threads;
  auto t0 = Clock::now();
  out = run_check(check, cfg);
  return std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0)
      .count();
}

} // namespace

int main(int argc, char** argv) {
  int threads = hardware_threads();
  if (argc > 1) threads = std::atoi(argv[1]);

  struct Workload {
    std::string check;
    VerifyConfig cfg;
  };
  std::vector<Workload> workloads = {
      {"pbw-rank", {.type = "B2", .height = 9}},
      {"pbw-rank", {.type = "A3", .height = 7}},
      {"normal-classify", {.type = "A2", .height = 8}},
      {"separation", {.type = "A2", .height = 8}},
      {"center-torus", {.type = "B2"}},
  };
  // warm the engine/Weyl caches so both timed runs see identical state
  for (auto& wl : workloads) {
    VerifyConfig warm = wl.cfg;
    warm.height = 1;
    CheckResult sink;
    run_once(wl.check, warm, 1, sink);
  }

  std::printf("%-18s %-5s %10s %10s %8s  %s\n", "workload", "type", "serial(s)",
              "omp(s)", "speedup", "agree");
  for (auto& wl : workloads) {
    CheckResult serial, parallel;
    double ts = run_once(wl.check, wl.cfg, 1, serial);
    double tp = run_once(wl.check, wl.cfg, threads, parallel);
    bool agree = serial.passed == parallel.passed &&
                 serial.instances == parallel.instances &&
                 serial.failures == parallel.failures;
    std::printf("%-18s %-5s %10.2f %10.2f %8.2fx  %s\n", wl.check.c_str(),
                wl.cfg.type.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0,
                agree ? "yes" : "NO");
    if (!agree) return 1;
  }
  std::printf("threads used: %d\n", threads);
  return 0;
}
