#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "seifert/cup.hpp"

using namespace seifert;

namespace {

const std::vector<std::string> kInputs = {
    "e=0;type=o1;g=1",
    "e=-1;type=o1;g=0;fibers=(2,1),(3,1),(5,1)",
    "e=-1;type=n2;g=2;fibers=(3,1),(3,2)",
    "e=0;type=n4;g=4;fibers=(2,1),(4,3)",
};

void BM_DeltaComplex(benchmark::State& state) {
    const auto inv = parse(kInputs[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) benchmark::DoNotOptimize(build_delta_complex(inv));
}

void BM_Cohomology(benchmark::State& state) {
    const auto cx = build_delta_complex(parse(kInputs[static_cast<std::size_t>(state.range(0))]));
    for (auto _ : state) benchmark::DoNotOptimize(simplicial_cohomology(cx, 3));
}

void BM_Workbench(benchmark::State& state) {
    const auto inv = parse(kInputs[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) benchmark::DoNotOptimize(Workbench(inv, 3));
}

void BM_AssembleRing(benchmark::State& state) {
    const Workbench wb(parse(kInputs[static_cast<std::size_t>(state.range(0))]), 3);
    for (auto _ : state) benchmark::DoNotOptimize(assemble_ring(wb, {Variant::Theorem, true}));
}

}  // namespace

BENCHMARK(BM_DeltaComplex)->DenseRange(0, 3);
BENCHMARK(BM_Cohomology)->DenseRange(0, 3);
BENCHMARK(BM_Workbench)->DenseRange(0, 3);
BENCHMARK(BM_AssembleRing)->DenseRange(0, 3);
BENCHMARK_MAIN();
