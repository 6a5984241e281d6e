#include <benchmark/benchmark.h>

#include <random>

#include "affnet/census.hpp"
#include "affnet/datasets.hpp"
#include "affnet/nullmodels.hpp"
#include "affnet/wedges.hpp"

namespace {

affnet::BipartiteGraph sparse_graph(int actors, int events, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    affnet::GraphBuilder b;
    for (int a = 0; a < actors; ++a) b.add_actor("a" + std::to_string(a));
    for (int e = 0; e < events; ++e) b.add_event("e" + std::to_string(e));
    for (int a = 0; a < actors; ++a)
        for (int e = 0; e < events; ++e)
            if (coin(rng) < p) b.add_attendance(a, e);
    return b.build();
}

// mean actor degree held at 8 while the graph grows
affnet::BipartiteGraph grown(int actors, std::uint64_t seed) {
    return sparse_graph(actors, actors, 8.0 / actors, seed);
}

void BM_FullCensus(benchmark::State& state) {
    const auto g = grown(static_cast<int>(state.range(0)), 99);
    for (auto _ : state) benchmark::DoNotOptimize(affnet::full_census(g));
}
BENCHMARK(BM_FullCensus)->Arg(100)->Arg(400)->Arg(1600);

void BM_GlobalExclusive(benchmark::State& state) {
    const auto g = grown(static_cast<int>(state.range(0)), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(affnet::global_cc(g, affnet::exclusive_scheme()));
}
BENCHMARK(BM_GlobalExclusive)->Arg(100)->Arg(400)->Arg(1600);

void BM_GlobalOpsahl(benchmark::State& state) {
    const auto g = grown(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(affnet::global_cc(g, affnet::opsahl_scheme()));
}
BENCHMARK(BM_GlobalOpsahl)->Arg(400);

void BM_CensusFormulation(benchmark::State& state) {
    const auto census = affnet::full_census(grown(400, 7));
    for (auto _ : state)
        benchmark::DoNotOptimize(affnet::census_cc(census, affnet::exclusive_scheme()));
}
BENCHMARK(BM_CensusFormulation);

void BM_SwapChain(benchmark::State& state) {
    const auto g = affnet::datasets::load("dg1");
    for (auto _ : state) benchmark::DoNotOptimize(affnet::randomize(g, 100000, 3));
}
BENCHMARK(BM_SwapChain);

void BM_WedgeArithmetic(benchmark::State& state) {
    const affnet::TriadSlots slots{3, 2, 1, 2};
    for (auto _ : state) {
        for (auto cat : {affnet::WedgeScheme::Category::All,
                         affnet::WedgeScheme::Category::Injective,
                         affnet::WedgeScheme::Category::Induced})
            for (auto cong : {affnet::WedgeScheme::Congruence::None,
                              affnet::WedgeScheme::Congruence::Structural,
                              affnet::WedgeScheme::Congruence::Actor})
                benchmark::DoNotOptimize(affnet::wedge_count(slots, cat, cong));
    }
}
BENCHMARK(BM_WedgeArithmetic);

}  // namespace

BENCHMARK_MAIN();
