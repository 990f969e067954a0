// Wall-time comparison of the OpenMP grid kernels against the serial
// reference on a transform-of-convolution workload.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "canonx/convolution.hpp"
#include "canonx/transforms.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace canonx;

namespace {

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 3;
  if (argc > 1) reps = std::max(1, std::atoi(argv[1]));

#ifdef _OPENMP
  if (const char* cap = std::getenv("CANON_XFORM_THREADS")) {
    const int n = std::atoi(cap);
    if (n > 0) omp_set_num_threads(std::min(n, omp_get_max_threads()));
  }
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif

  const auto A = CanonicalParams::validate(1.0, 2.0, 1.0, 3.0);
  const auto cfg = QuadratureConfig::make(12.0, 4096, 1e-8);
  const auto f = fs::gaussian(1.0, 0.0);
  const auto g = fs::gaussian(2.0, 0.0);
  const auto sgrid = linspace(-4.0, 4.0, 129);

  std::printf("threads: %d, grid: %zu points, N = %d\n", threads, sgrid.size(),
              cfg.points);
  std::printf("%-34s %12s %12s %9s\n", "workload", "serial [s]", "openmp [s]", "speedup");

  struct Case {
    std::string name;
    FunctionSpec spec;
  };
  const std::vector<Case> cases = {
      {"cct of gaussian", f},
      {"cct of star-convolution", conv_star(f, g, A)},
  };

  for (const Case& c : cases) {
    SampledField serial_out, omp_out;
    const double ts = time_best_of(reps, [&] {
      serial_out = transform_grid_serial(c.spec, A, TransformKind::cct, sgrid, cfg);
    });
    const double tp = time_best_of(reps, [&] {
      omp_out = transform_grid(c.spec, A, TransformKind::cct, sgrid, cfg);
    });
    double diff = 0.0;
    for (std::size_t i = 0; i < sgrid.size(); ++i)
      diff = std::max(diff, std::abs(serial_out.values[i] - omp_out.values[i]));
    std::printf("%-34s %12.4f %12.4f %8.2fx   (max |serial-omp| = %.3g)\n",
                c.name.c_str(), ts, tp, ts / tp, diff);
  }
  return 0;
}
