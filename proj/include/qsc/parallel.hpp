#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsc {

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs fn(0..n-1). threads <= 1 gives the serial reference path; otherwise
/// the iterations run under OpenMP with dynamic scheduling. All results must
/// be written to disjoint slots, so serial and parallel runs agree exactly.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
  if (threads > 1 && n > 1) {
    std::exception_ptr err = nullptr;
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < (long)n; ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        fn((std::size_t)i);
      } catch (...) {
#pragma omp critical(qsc_parallel_for_err)
        {
          if (!failed.exchange(true)) err = std::current_exception();
        }
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  (void)threads;
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

} // namespace qsc
