#include <benchmark/benchmark.h>

#include "stabring/bounds.hpp"
#include "stabring/fourier.hpp"
#include "stabring/halfgraph.hpp"
#include "stabring/stability.hpp"

namespace {

void BM_StabilityIndex(benchmark::State& state) {
  const auto g = stabring::FiniteAbelianGroup::cyclic(state.range(0));
  std::vector<std::int64_t> members;
  for (std::int64_t x = 0; x < g.order(); ++x)
    if ((x * x + x) % 5 < 2) members.push_back(x);
  const stabring::GroupSubset a(g, members);
  for (auto _ : state) {
    const auto r = stabring::stability_index(a);
    benchmark::DoNotOptimize(r.stability_index);
  }
}
BENCHMARK(BM_StabilityIndex)->Arg(10)->Arg(13)->Arg(16);

void BM_BgNorm(benchmark::State& state) {
  const auto g = stabring::FiniteAbelianGroup::cyclic(state.range(0));
  std::vector<std::int64_t> members;
  for (std::int64_t x = 0; x < g.order(); x += 3) members.push_back(x);
  const stabring::GroupSubset a(g, members);
  for (auto _ : state) {
    const auto r = stabring::bg_norm(a);
    benchmark::DoNotOptimize(r.norm);
  }
}
BENCHMARK(BM_BgNorm)->Arg(64)->Arg(256)->Arg(1024);

void BM_TraceNorm(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        stabring::half_graph_trace_norm(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TraceNorm)->Arg(1000)->Arg(100000);

void BM_SpectrumNumeric(benchmark::State& state) {
  for (auto _ : state) {
    const auto s = stabring::half_graph_spectrum(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(s.numeric.back());
  }
}
BENCHMARK(BM_SpectrumNumeric)->Arg(50)->Arg(200);

void BM_SzegoSeries(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        stabring::szego_series(static_cast<int>(state.range(0)), 1e-9));
}
BENCHMARK(BM_SzegoSeries)->Arg(1)->Arg(64);

void BM_IntervalQuadrature(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        stabring::interval_norm_quadrature(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IntervalQuadrature)->Arg(64)->Arg(1024);

void BM_Multinomial(benchmark::State& state) {
  const std::vector<std::int64_t> ks(static_cast<std::size_t>(state.range(0)), 40);
  for (auto _ : state) {
    const auto b = stabring::multinomial_ramsey_bound(ks);
    benchmark::DoNotOptimize(b.value.get_ui());
  }
}
BENCHMARK(BM_Multinomial)->Arg(3)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
