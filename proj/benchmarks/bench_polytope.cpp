#include <benchmark/benchmark.h>

#include "symcut/center.hpp"
#include "symcut/polytope.hpp"

using namespace symcut;

namespace {

const char* const kTypes[] = {"A4", "A8", "D6", "E6", "E7", "E8"};

void BM_CenterGroup(benchmark::State& state) {
  const RootDatum d = build_datum(RootSystemType::parse(kTypes[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(build_center_group(d));
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_CenterGroup)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_Vertices(benchmark::State& state) {
  const CenterGroup g = build_center_group(build_datum(RootSystemType::parse(kTypes[state.range(0)])));
  const CutPolytope p = cut_polytope(g, parse_subgroup(g, "full"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(p));
  state.SetLabel(std::string(kTypes[state.range(0)]) + " full");
}
BENCHMARK(BM_Vertices)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Diameter(benchmark::State& state) {
  const CenterGroup g = build_center_group(build_datum(RootSystemType::parse("A7")));
  const CutPolytope p = cut_polytope(g, parse_subgroup(g, "Z" + std::to_string(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_value(p));
  state.SetLabel("A7 Z" + std::to_string(state.range(0)));
}
BENCHMARK(BM_Diameter)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
