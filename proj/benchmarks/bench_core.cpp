// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "csgeom/cs_models.hpp"
#include "csgeom/embed.hpp"
#include "csgeom/lie_core.hpp"
#include "csgeom/numerics.hpp"
#include "csgeom/rng.hpp"
#include "csgeom/verify.hpp"

using namespace csgeom;

namespace {

void BM_KernelProjSpace(benchmark::State& state) {
    const Model model = parse_model("cp:n=" + std::to_string(state.range(0)) + ",m=3");
    RngStream rng(1, 0);
    const ChartPoint z1 = sample_point(model, rng);
    const ChartPoint z2 = sample_point(model, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kernel(model, z1, z2));
}
BENCHMARK(BM_KernelProjSpace)->Arg(1)->Arg(2)->Arg(4);

void BM_KernelGrassmann(benchmark::State& state) {
    const Model model = parse_model("gr:k=2,n=" + std::to_string(state.range(0)));
    RngStream rng(1, 0);
    const ChartPoint z1 = sample_point(model, rng);
    const ChartPoint z2 = sample_point(model, rng);
    for (auto _ : state) benchmark::DoNotOptimize(kernel(model, z1, z2));
}
BENCHMARK(BM_KernelGrassmann)->Arg(4)->Arg(6);

void BM_Iota(benchmark::State& state) {
    const Model model = parse_model("cp:n=2,m=" + std::to_string(state.range(0)));
    RngStream rng(1, 0);
    const ChartPoint z = sample_point(model, rng);
    for (auto _ : state) benchmark::DoNotOptimize(iota(model, z));
}
BENCHMARK(BM_Iota)->Arg(1)->Arg(3)->Arg(5);

void BM_SingularValues(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(2, 0);
    CMatrix m(static_cast<std::size_t>(10 * n), static_cast<std::size_t>(n));
    for (Complex& x : m.data()) x = rng.complex_gaussian();
    for (auto _ : state) benchmark::DoNotOptimize(singular_values(m));
}
BENCHMARK(BM_SingularValues)->Arg(4)->Arg(8)->Arg(20);

void BM_WeylOrder(benchmark::State& state) {
    const int rank = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(weyl_order(LieType::A, rank));
}
BENCHMARK(BM_WeylOrder)->Arg(3)->Arg(5)->Arg(6);

void BM_SchubertCells(benchmark::State& state) {
    FlagSpec spec;
    spec.type = LieType::A;
    spec.rank = static_cast<int>(state.range(0));
    spec.crossed = {1};
    spec.weight.assign(static_cast<std::size_t>(spec.rank), 0);
    spec.weight[0] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(schubert_cell_count(spec));
}
BENCHMARK(BM_SchubertCells)->Arg(3)->Arg(5);

void BM_CauchyCampaign(benchmark::State& state) {
    const Model model = parse_model("gr:k=2,n=4");
    for (auto _ : state)
        benchmark::DoNotOptimize(verify::check_cauchy(model, state.range(0), 42));
}
BENCHMARK(BM_CauchyCampaign)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
