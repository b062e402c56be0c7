#include <benchmark/benchmark.h>

#include "demorgan/catalog.hpp"
#include "demorgan/frames.hpp"
#include "demorgan/subobjects.hpp"
#include "demorgan/topology.hpp"

using namespace demorgan;

namespace {


void BM_SieveSpace(benchmark::State& state) {
  const auto C = fixtures::ordinal_injections_op();
  for (auto _ : state) benchmark::DoNotOptimize(SieveSpace::build(C));
}
BENCHMARK(BM_SieveSpace);

void BM_DemorganTopology(benchmark::State& state) {
  const auto space = SieveSpace::build(fixtures::commutative_square());
  for (auto _ : state) benchmark::DoNotOptimize(demorgan_topology(space));
}
BENCHMARK(BM_DemorganTopology);

void BM_DenseTopology(benchmark::State& state) {
  const auto space = SieveSpace::build(fixtures::commutative_square());
  for (auto _ : state) benchmark::DoNotOptimize(dense_topology(space));
}
BENCHMARK(BM_DenseTopology);

void BM_EnumerateTopologies(benchmark::State& state) {
  const auto space = SieveSpace::build(fixtures::three_cospan());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(space));
}
BENCHMARK(BM_EnumerateTopologies);

void BM_DecideDemorgan(benchmark::State& state) {
  const auto J = trivial_topology(SieveSpace::build(fixtures::ordinal_injections_op()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_demorgan_general(J));
    benchmark::DoNotOptimize(is_demorgan_reduced(J));
  }
}
BENCHMARK(BM_DecideDemorgan);

void BM_OracleDemorgan(benchmark::State& state) {
  const auto J = trivial_topology(SieveSpace::build(fixtures::ordinal_injections_op()));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_is_demorgan(J));
}
BENCHMARK(BM_OracleDemorgan);

void BM_SmallCategories(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_small_categories(n, n));
}
BENCHMARK(BM_SmallCategories)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EnumerateNuclei(benchmark::State& state) {
  const auto frames = frame_catalog(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& F : frames) benchmark::DoNotOptimize(enumerate_nuclei(F));
  }
}
BENCHMARK(BM_EnumerateNuclei)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_DemorganizeFrame(benchmark::State& state) {
  const auto F = fixtures::frm5();
  for (auto _ : state) benchmark::DoNotOptimize(demorganize_frame(F));
}
BENCHMARK(BM_DemorganizeFrame);

}  // namespace

BENCHMARK_MAIN();
