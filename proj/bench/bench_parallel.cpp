// Timing comparison between the serial reference reduction and the blocked
// OpenMP path, on a synthetic kernel and on the library's real workloads.
//
//   cmake --build build --target bench_parallel && ./build/bench/bench_parallel

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "isocs/claims.hpp"
#include "isocs/measures.hpp"
#include "isocs/parallel.hpp"
#include "isocs/specfun.hpp"

namespace {

double seconds(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_num_procs();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

volatile double g_sink = 0.0;

void row(const std::string& name, const std::function<void()>& work) {
  set_threads(1);
  const double serial = seconds(work);
  set_threads(hardware_threads());
  const double parallel = seconds(work);
  std::printf("%-38s %10.3fs %10.3fs %8.2fx\n", name.c_str(), serial,
              parallel, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  const int hw = hardware_threads();
#else
  const int hw = 1;
#endif
  std::printf("threads available: %d\n", hw);
  std::printf("%-38s %11s %11s %9s\n", "workload", "serial", "parallel",
              "speedup");

  row("blocked reduction, 5e7 terms", [] {
    g_sink = isocs::par::blocked_sum(50'000'000, [](std::size_t i) {
      return std::sin(1e-6 * static_cast<double>(i));
    });
  });

  row("Mellin-Barnes contour grid (120 pts)", [] {
    std::vector<double> out(120);
    isocs::par::parallel_for(out.size(), [&](std::size_t i) {
      const double x = 0.05 * static_cast<double>(i + 1);
      out[i] = isocs::specfun::meijer_g20_12(x, {-1.0, -1.0, 1.0});
    });
    g_sink = out[7];
  });

  row("resolution-of-identity diagonal", [] {
    const isocs::fock::FockSpace s{2.0, 64, isocs::fock::Sector::full};
    const isocs::measures::RadialMeasure m{
        isocs::measures::Form::elementary_gk, 2.0, 4.0};
    isocs::measures::ResolutionOptions opt;
    opt.n_max = 28;
    opt.panels = 1024;
    opt.nodes = 16;
    g_sink = isocs::measures::identity_resolution_residual(
        isocs::states::Family::gkcs, m, s, opt);
  });

  row("full claim suite", [] {
    const auto ids = isocs::claims::all_ids();
    g_sink = static_cast<double>(
        isocs::claims::run(ids, isocs::claims::Config{}).size());
  });

  return 0;
}
