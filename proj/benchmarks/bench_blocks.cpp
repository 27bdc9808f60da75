#include <benchmark/benchmark.h>

#include "tensorshift/indexcomb.hpp"
#include "tensorshift/specnorm.hpp"

namespace {

using namespace tensorshift;

void BM_BuildSymBlock(benchmark::State& state) {
    const auto w = WeightSequence::constant(1.0);
    const ExponentTuple l({1, 1, -1});
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto block = build_sym_block(w, l, k);
        benchmark::DoNotOptimize(block);
    }
}
BENCHMARK(BM_BuildSymBlock)->Arg(20)->Arg(40)->Arg(60);

void BM_BuildWedgeBlock(benchmark::State& state) {
    const auto w = WeightSequence::constant(1.0);
    const ExponentTuple l({1, 1, -1});
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto block = build_wedge_block(w, l, k);
        benchmark::DoNotOptimize(block);
    }
}
BENCHMARK(BM_BuildWedgeBlock)->Arg(20)->Arg(40)->Arg(60);

void BM_DenseSingularValue(benchmark::State& state) {
    const auto w = WeightSequence::constant(1.0);
    const ExponentTuple l({1, -1});
    const auto block = build_sym_block(w, l, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto sv = largest_singular_value(block);
        benchmark::DoNotOptimize(sv);
    }
}
BENCHMARK(BM_DenseSingularValue)->Arg(100)->Arg(200)->Arg(300);

void BM_PowerIterationSingularValue(benchmark::State& state) {
    const auto w = WeightSequence::constant(1.0);
    const ExponentTuple l({1, -1});
    const auto block = build_sym_block(w, l, static_cast<int>(state.range(0)));
    SvOptions opt;
    opt.dense_threshold = 0;
    for (auto _ : state) {
        auto sv = largest_singular_value(block, opt);
        benchmark::DoNotOptimize(sv);
    }
}
BENCHMARK(BM_PowerIterationSingularValue)->Arg(100)->Arg(200)->Arg(300);

void BM_Census(benchmark::State& state) {
    const auto w = WeightSequence::constant(1.0);
    const ExponentTuple l({1, 1, -1});
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto report = census(3, l, 0, k, 0.1, w);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_Census)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
