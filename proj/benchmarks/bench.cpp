#include <benchmark/benchmark.h>

#include "mahler/mahler.hpp"

using namespace mahler;

static void BM_Li2(benchmark::State& state) {
  std::complex<double> z(0.3, 0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(li2(z));
    z *= std::polar(1.0, 0.01);
  }
}
BENCHMARK(BM_Li2);

static void BM_BlochWigner(benchmark::State& state) {
  std::complex<double> z(1.7, -0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bloch_wigner(z));
    z *= std::polar(1.0, 0.01);
  }
}
BENCHMARK(BM_BlochWigner);

static void BM_Roots(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  std::vector<Complex> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k) c[static_cast<std::size_t>(k)] = Complex(1.0 + k % 3, 0.5 * (k % 2));
  for (auto _ : state) benchmark::DoNotOptimize(roots_complex(c));
}
BENCHMARK(BM_Roots)->Arg(2)->Arg(8)->Arg(32);

static void BM_Direct(benchmark::State& state) {
  const auto p = parse_poly("x + y + 1");
  const GridSpec g = GridSpec::uniform(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mahler_direct(p, Torus::unit(2), g));
}
BENCHMARK(BM_Direct)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_Jensen(benchmark::State& state) {
  const auto p = family_member(tempered_family_base(), 6);
  for (auto _ : state) benchmark::DoNotOptimize(mahler_jensen(p, Torus({1.2, 1.1})));
}
BENCHMARK(BM_Jensen)->Unit(benchmark::kMillisecond);

static void BM_Region(benchmark::State& state) {
  const auto base = tempered_family_base();
  for (auto _ : state) benchmark::DoNotOptimize(build_region(base, 10, 4, 256, 512));
}
BENCHMARK(BM_Region)->Unit(benchmark::kMillisecond);

static void BM_SeriesCoefficients(benchmark::State& state) {
  const auto q = tempered_family_base() * Complex(-1);
  for (auto _ : state) benchmark::DoNotOptimize(series_coefficients(q, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SeriesCoefficients)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
