#include <benchmark/benchmark.h>

#include "jscc/cognitive.hpp"
#include "jscc/mc_oracle.hpp"
#include "jscc/optimizer.hpp"
#include "jscc/schemes.hpp"

namespace {

using namespace jscc;

const SourceModel kModel{1.0, 1.0, 0.3};
const ChannelSpec kChannel{10.0, 1.0};
const Allocation kAlloc{1.0, 2.0};

void BM_DigitalDistortion(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(digital_dpc_distortion(kModel, kChannel, kAlloc));
    }
}
BENCHMARK(BM_DigitalDistortion);

void BM_HdaDistortion(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hda_distortion(kModel, kChannel, kAlloc));
    }
}
BENCHMARK(BM_HdaDistortion);

void BM_OptimizeScheme(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_scheme(kModel, kChannel, Scheme::DigitalDpc));
    }
}
BENCHMARK(BM_OptimizeScheme);

void BM_ParetoFilter(benchmark::State& state) {
    Xoshiro256pp rng(1);
    std::vector<ParetoPoint<int>> pts;
    pts.reserve(state.range(0));
    for (int i = 0; i < state.range(0); ++i) {
        pts.push_back({rng.uniform(), rng.uniform(), i});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(pareto_filter(pts));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ParetoFilter)->Range(1 << 10, 1 << 16)->Complexity();

void BM_GaussianThroughput(benchmark::State& state) {
    GaussianSampler gauss(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss.next());
    }
}
BENCHMARK(BM_GaussianThroughput);

void BM_SimulateLinearMmse(benchmark::State& state) {
    const McConfig mc{1, static_cast<std::size_t>(state.range(0)), 3.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_linear_mmse(kModel, kChannel, kAlloc, mc));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateLinearMmse)->Arg(100'000);

void BM_InnerRegion(benchmark::State& state) {
    const CognitiveConfig cfg{1.0, 1.0, 0.5, 0.5, 1.0, 1.0, 0.25};
    RegionGrid grid;
    for (auto _ : state) {
        benchmark::DoNotOptimize(inner_region(cfg, grid));
    }
}
BENCHMARK(BM_InnerRegion);

}  // namespace

BENCHMARK_MAIN();
