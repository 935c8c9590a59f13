#include <benchmark/benchmark.h>

#include <random>

#include "hkfl/discriminant.hpp"
#include "hkfl/e8.hpp"
#include "hkfl/embeddings.hpp"
#include "hkfl/quiver.hpp"
#include "hkfl/snf.hpp"
#include "hkfl/strata.hpp"

namespace {

void BM_E8ShortVectors(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hkfl::e8_short_vectors(state.range(0)));
}
BENCHMARK(BM_E8ShortVectors)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ClassCoverage(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hkfl::class_coverage(8));
}
BENCHMARK(BM_ClassCoverage)->Unit(benchmark::kMillisecond);

void BM_K3Formula(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hkfl::strata_k3_formula(state.range(0)));
}
BENCHMARK(BM_K3Formula)->Arg(60)->Arg(10000);

void BM_K3Oracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hkfl::strata_k3_oracle(state.range(0)));
}
BENCHMARK(BM_K3Oracle)->Arg(10)->Arg(60)->Arg(200);

void BM_KummerOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hkfl::strata_kummer_oracle(state.range(0)));
}
BENCHMARK(BM_KummerOracle)->Arg(3)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_SnfRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> entry(-50, 50);
  hkfl::IntMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hkfl::smith_normal_form(m));
}
BENCHMARK(BM_SnfRandom)->Arg(4)->Arg(8)->Arg(16);

void BM_DiscriminantLn(benchmark::State& state) {
  const auto l = hkfl::lattice_ln(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hkfl::discriminant_profile(l));
}
BENCHMARK(BM_DiscriminantLn)->Arg(2)->Arg(20);

void BM_ClassifyEmbeddings(benchmark::State& state) {
  const auto ctx = hkfl::E8m2Context::build();
  for (auto _ : state) benchmark::DoNotOptimize(hkfl::classify_embeddings(state.range(0), ctx));
}
BENCHMARK(BM_ClassifyEmbeddings)->Arg(2)->Arg(3)->Arg(41);

void BM_Partitions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hkfl::d_range_report(state.range(0)));
}
BENCHMARK(BM_Partitions)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
