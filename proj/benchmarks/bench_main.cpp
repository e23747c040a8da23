#include <benchmark/benchmark.h>

#include "pseudoham/constructions.hpp"
#include "pseudoham/generators.hpp"
#include "pseudoham/hamilton.hpp"
#include "pseudoham/permanent.hpp"
#include "pseudoham/rotation.hpp"
#include "pseudoham/spectral.hpp"

using namespace pseudoham;

static void BM_BuildQuadrangle(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_generalized_quadrangle(q));
}
BENCHMARK(BM_BuildQuadrangle)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SpectrumRandomRegular(benchmark::State& state) {
  const Graph g = random_regular(static_cast<std::size_t>(state.range(0)), 6, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectrumRandomRegular)->RangeMultiplier(2)->Range(64, 512)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_SpectrumLps(benchmark::State& state) {
  const Graph g = build_lps(5, 13).graph;
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g));
}
BENCHMARK(BM_SpectrumLps)->Iterations(1)->Unit(benchmark::kSecond);

static void BM_MixingSamples(benchmark::State& state) {
  const Graph g = build_furedi(2, 9).graph;
  for (auto _ : state) benchmark::DoNotOptimize(verify_mixing_irregular(g, 10.0, 1000, 0));
}
BENCHMARK(BM_MixingSamples)->Unit(benchmark::kMillisecond);

static void BM_Ryser(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = BinaryMatrix::adjacency(random_gnp(n, 0.5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(permanent_exact(m));
}
BENCHMARK(BM_Ryser)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_HamiltonDp(benchmark::State& state) {
  const Graph g = build_generalized_quadrangle(2).graph;
  HamiltonCountOptions o;
  o.method = CountMethod::SubsetDp;
  for (auto _ : state) benchmark::DoNotOptimize(count_hamilton_cycles(g, o));
}
BENCHMARK(BM_HamiltonDp)->Unit(benchmark::kMillisecond);

static void BM_HamiltonBranchAndBound(benchmark::State& state) {
  const Graph g = build_generalized_quadrangle(2).graph;
  HamiltonCountOptions o;
  o.method = CountMethod::BranchAndBound;
  for (auto _ : state) benchmark::DoNotOptimize(count_hamilton_cycles(g, o));
}
BENCHMARK(BM_HamiltonBranchAndBound)->Unit(benchmark::kMillisecond);

static void BM_Rotation(benchmark::State& state) {
  const Graph g = random_regular(static_cast<std::size_t>(state.range(0)), 3, 7);
  const auto f = random_two_factor(g, 1);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rotate_to_hamilton(g, *f, 500, seed++));
}
BENCHMARK(BM_Rotation)->Arg(30)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
