// Serial vs OpenMP comparison for the two data-parallel kernels: the
// sublevel counting pass and the oscillatory quadrature grid. Results must
// agree bit for bit; the table reports timing and speedup.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "radon/multipoly.hpp"
#include "radon/oscillatory.hpp"
#include "radon/sublevel.hpp"

using namespace radon;
namespace chrono = std::chrono;

namespace {

double seconds(chrono::steady_clock::time_point a, chrono::steady_clock::time_point b) {
  return chrono::duration_cast<chrono::microseconds>(b - a).count() * 1e-6;
}

void bench_sublevel() {
  MultiPoly S = parse_poly("t1^2 t2 + t1 t2^3", 2);
  EvalTable f(S);
  RegionSpec region{RegionSpec::Kind::Ball, 2, 0.5};
  std::vector<double> thresholds;
  for (int k = 6; k <= 18; ++k) thresholds.push_back(std::ldexp(1.0, -k));
  const long long samples = 4'000'000;
  const std::uint64_t key = 42;

  auto t0 = chrono::steady_clock::now();
  auto serial = sublevel_count_serial(f, region, thresholds, samples, key, 256);
  auto t1 = chrono::steady_clock::now();
  auto parallel = sublevel_count_parallel(f, region, thresholds, samples, key, 256);
  auto t2 = chrono::steady_clock::now();

  bool identical = serial.hits == parallel.hits && serial.region_hits == parallel.region_hits;
  double ts = seconds(t0, t1), tp = seconds(t1, t2);
  std::printf("sublevel count  %8.3fs serial  %8.3fs openmp  speedup %.2fx  identical=%s\n",
              ts, tp, ts / tp, identical ? "yes" : "NO");
}

void bench_quadrature() {
  MultiPoly S = parse_poly("t1 t2", 2);
  CutoffSpec phi;
  phi.radius = 0.5;
  std::vector<double> dir = {0.0, 0.0, 1.0};
  std::vector<double> lambdas = {512.0, 537.6, 563.2};
  QuadOptions opt;

  opt.parallel = false;
  auto t0 = chrono::steady_clock::now();
  auto serial = fourier_magnitudes(S, phi, dir, lambdas, opt);
  auto t1 = chrono::steady_clock::now();
  opt.parallel = true;
  auto parallel = fourier_magnitudes(S, phi, dir, lambdas, opt);
  auto t2 = chrono::steady_clock::now();

  bool identical = serial == parallel;
  double ts = seconds(t0, t1), tp = seconds(t1, t2);
  std::printf("quadrature grid %8.3fs serial  %8.3fs openmp  speedup %.2fx  identical=%s\n",
              ts, tp, ts / tp, identical ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both columns run serially\n");
#endif
  bench_sublevel();
  bench_quadrature();
  return 0;
}
