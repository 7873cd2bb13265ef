#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace quadunit {

enum class Exec { Serial, Parallel };

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Fills out[i] = fn(i) for i in [0, n).  Parallel runs keep the same output
// order as serial ones; the first exception (by index) is rethrown so both
// execution modes report identical failures.
template <typename R, typename F>
std::vector<R> indexed_map(std::size_t n, Exec exec, F&& fn) {
  std::vector<R> out(n);
  std::vector<std::exception_ptr> errs(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
      } catch (...) {
        errs[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errs) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace quadunit
