#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isocs::par {

// Deterministic reductions. The iteration space is cut into fixed-size
// blocks; each block is summed serially and the block results are combined
// in block order, so the result is bit-identical for any thread count
// (including the serial build). All report-facing accumulations go through
// these.

inline constexpr std::size_t kBlock = 512;

// Serial reference. Kept for tests and the benchmark target.
template <class F>
double sum_serial(std::size_t n, F&& term) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += term(i);
  return acc;
}

template <class F>
double blocked_sum(std::size_t n, F&& term, std::size_t block = kBlock) {
  if (n == 0) return 0.0;
  const std::size_t nblocks = (n + block - 1) / block;
  std::vector<double> partial(nblocks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * block;
    const std::size_t hi = lo + block < n ? lo + block : n;
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
}

// Row-vector variant: emit(i, acc) adds term i into acc[0..dim).
template <class F>
std::vector<double> blocked_sum_rows(std::size_t n, std::size_t dim, F&& emit,
                                     std::size_t block = kBlock) {
  std::vector<double> out(dim, 0.0);
  if (n == 0) return out;
  const std::size_t nblocks = (n + block - 1) / block;
  std::vector<std::vector<double>> partial(nblocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * block;
    const std::size_t hi = lo + block < n ? lo + block : n;
    std::vector<double> acc(dim, 0.0);
    for (std::size_t i = lo; i < hi; ++i) emit(i, acc.data());
    partial[static_cast<std::size_t>(b)] = std::move(acc);
  }
  for (const auto& p : partial)
    for (std::size_t d = 0; d < dim; ++d) out[d] += p[d];
  return out;
}

// Independent iterations writing to disjoint slots.
template <class F>
void parallel_for(std::size_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    body(static_cast<std::size_t>(i));
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace isocs::par
