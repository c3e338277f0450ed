// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swapnet {

// threads <= 0 means machine parallelism.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// OpenMP-parallel index loop. Every iteration must be independent; callers
// get schedule-independent results by writing into slot i and reducing in
// index order afterwards.
template <class F>
void parallel_for_index(std::size_t n, int threads, F&& body) {
  const int t = resolve_threads(threads);
#ifdef _OPENMP
  if (t > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(t)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)t;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// Plain loop twin; the reference path the tests compare against.
template <class F>
void serial_for_index(std::size_t n, F&& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace swapnet
