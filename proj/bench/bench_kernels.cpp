// Serial reference against the OpenMP sweeps. Pass --benchmark_filter to narrow.
#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "bidisk/kernels.hpp"

using namespace bidisk;

namespace {

MatrixPolynomial2D filter(int d, int n, int m) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MatrixPolynomial2D p(d, n, m);
  const double scale = 0.6 / ((n + 1) * (m + 1) * d);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= m; ++j) {
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) p(i, j)(r, c) = scale * cd(u(rng), u(rng));
    }
  }
  p(0, 0) += Mat::Identity(d, d);
  return p;
}

Exec mode(const benchmark::State& s) { return s.range(1) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& s) { s.SetLabel(s.range(1) == 0 ? "serial" : "parallel"); }

void BM_TorusInverseSpectrum(benchmark::State& s) {
  const auto p = filter(2, 2, 2);
  const int N = static_cast<int>(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(torus_inverse_spectrum(p, N, mode(s)));
  s.SetItemsProcessed(s.iterations() * N * N);
  label(s);
}

void BM_StabilitySweeps(benchmark::State& s) {
  const auto p = filter(2, 2, 2);
  const int N = static_cast<int>(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(stability_sweeps(p, N, mode(s)));
  s.SetItemsProcessed(s.iterations() * 2 * N);
  label(s);
}

void BM_SymbolSupNorm(benchmark::State& s) {
  std::map<Index2, Mat> g;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) g[{i, j}] = Mat::Constant(1, 1, cd(u(rng), u(rng)));
  const int N = static_cast<int>(s.range(0));
  for (auto _ : s) benchmark::DoNotOptimize(symbol_sup_norm(g, N, mode(s)));
  s.SetItemsProcessed(s.iterations() * N * N);
  label(s);
}

}  // namespace

BENCHMARK(BM_TorusInverseSpectrum)->ArgsProduct({{128, 512}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilitySweeps)->ArgsProduct({{256, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolSupNorm)->ArgsProduct({{128, 256}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
