#pragma once

#include <cstddef>
#include <vector>

#include "ebi/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ebi::par {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs f(i) for i in [0, n). Row outputs must be disjoint; results are then
/// identical between serial and parallel execution.
template <class F>
void for_each_index(std::size_t n, Exec exec, F&& f) {
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) f(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) f(i);
  }
}

/// Blocked reduction with a fixed block size. Per-block partials are summed
/// in block order, so the result does not depend on the thread count.
template <class F>
double block_sum(std::size_t n, Exec exec, F&& term) {
  constexpr std::size_t kBlock = 256;
  const std::size_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(nblocks, 0.0);
  for_each_index(nblocks, exec, [&](std::size_t b) {
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[b] = s;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace ebi::par
