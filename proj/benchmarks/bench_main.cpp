#include <benchmark/benchmark.h>

#include "riskframe/optimize.hpp"
#include "riskframe/study.hpp"

using namespace riskframe;

namespace {

Scenario frame(int stories, int bays) {
    Scenario s = Scenario::reference();
    s.geometry.n_s = stories;
    s.geometry.n_c = bays + 1;
    return s;
}

void BM_TotalExpectedCost(benchmark::State& state) {
    const Scenario s = frame(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const ExpectedCostModel m(s, design_members(s));
    double lb = 0.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(m.total({lb, 1.3}));
        lb = lb < 1.5 ? lb + 1e-4 : 0.9;
    }
}
BENCHMARK(BM_TotalExpectedCost)->Args({16, 4})->Args({8, 8})->Args({4, 16});

void BM_ModelConstruction(benchmark::State& state) {
    const Scenario s = Scenario::reference();
    const MemberDesign d = design_members(s);
    for (auto _ : state) benchmark::DoNotOptimize(ExpectedCostModel(s, d));
}
BENCHMARK(BM_ModelConstruction);

void BM_Optimize(benchmark::State& state) {
    const Scenario s = frame(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const ExpectedCostModel m(s, design_members(s));
    for (auto _ : state) benchmark::DoNotOptimize(minimize_total_cost(m, 0.1));
}
BENCHMARK(BM_Optimize)->Args({16, 4})->Args({8, 8})->Args({4, 16})->Unit(benchmark::kMillisecond);

void BM_Threshold(benchmark::State& state) {
    const Scenario s = frame(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const MemberDesign d = design_members(s);
    for (auto _ : state) benchmark::DoNotOptimize(threshold_probability(s, d));
}
BENCHMARK(BM_Threshold)->Args({16, 4})->Args({4, 16})->Unit(benchmark::kMillisecond);

void BM_StudyFrames(benchmark::State& state) {
    StudyDefinition study = catalog_study("frames");
    study.threshold = false;
    for (auto _ : state) benchmark::DoNotOptimize(run_study(study, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_StudyFrames)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
