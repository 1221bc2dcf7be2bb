#include "rtint/fusion.hpp"
#include "rtint/modular.hpp"
#include "rtint/surgery.hpp"

#include <benchmark/benchmark.h>

using namespace rtint;

namespace {

const char* const kTypes[] = {"A1", "A2", "A3", "B2"};

void BM_FusionTable(benchmark::State& state) {
  const RootSystem rs(LieType::parse(kTypes[state.range(0)]));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fusion_table(rs, r));
  state.SetLabel(std::string(kTypes[state.range(0)]) + " r=" + std::to_string(r));
}
BENCHMARK(BM_FusionTable)->Args({0, 11})->Args({1, 7})->Args({1, 11})->Args({3, 11})->Unit(benchmark::kMillisecond);

void BM_ModularBuild(benchmark::State& state) {
  const RootSystem rs(LieType::parse(kTypes[state.range(0)]));
  const int r = static_cast<int>(state.range(1));
  const FusionTable table = fusion_table(rs, r);
  for (auto _ : state) benchmark::DoNotOptimize(ModularData::build(table));
  state.SetLabel(std::string(kTypes[state.range(0)]) + " r=" + std::to_string(r));
}
BENCHMARK(BM_ModularBuild)->Args({0, 11})->Args({1, 7})->Args({1, 11})->Unit(benchmark::kMillisecond);

void BM_Determinant(benchmark::State& state) {
  const RootSystem rs(LieType::parse("A2"));
  const ModularData md = ModularData::build(fusion_table(rs, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(md.S()));
  state.SetLabel("A2 S-matrix, " + std::to_string(md.size()) + " labels");
}
BENCHMARK(BM_Determinant)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_LensInvariant(benchmark::State& state) {
  const RootSystem rs(LieType::parse("A2"));
  const ModularData md = ModularData::build(fusion_table(rs, 7));
  const SurgeryPresentation p = lens_space(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(invariant(md, p));
}
BENCHMARK(BM_LensInvariant)->Arg(3)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
