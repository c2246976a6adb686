#include <doctest.h>

#include <numeric>

#include "qsc/parallel.hpp"
#include "qsc/verify.hpp"

using namespace qsc;

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(257, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 257);
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("exceptions propagate out of the parallel region") {
  auto boom = [&](std::size_t i) {
    if (i == 3) throw std::runtime_error("boom");
  };
  CHECK_THROWS_AS(parallel_for(8, 2, boom), std::runtime_error);
  CHECK_THROWS_AS(parallel_for(8, 1, boom), std::runtime_error);
}

TEST_CASE("serial reference and OpenMP driver agree exactly") {
  for (const char* name : {"root-lattice", "pbw-rank", "normal-classify", "separation",
                           "center-torus"}) {
    VerifyConfig serial_cfg{.type = "A2", .height = 4, .threads = 1};
    VerifyConfig parallel_cfg{.type = "A2", .height = 4, .threads = hardware_threads()};
    CheckResult a = run_check(name, serial_cfg);
    CheckResult b = run_check(name, parallel_cfg);
    CHECK(a.passed == b.passed);
    CHECK(a.instances == b.instances);
    CHECK(a.failures == b.failures);
    CHECK(a.counterexamples == b.counterexamples);
  }
}
