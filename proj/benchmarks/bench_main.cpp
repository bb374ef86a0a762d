// Microbenchmarks for the hot paths: redistribution evaluation, network
// construction and the perturbation operators.

#include <benchmark/benchmark.h>

#include "absorbnet/absorptivity.hpp"
#include "absorbnet/builder.hpp"
#include "absorbnet/metrics.hpp"
#include "absorbnet/rng.hpp"
#include "absorbnet/scenario.hpp"
#include "absorbnet/synth.hpp"

using namespace absorbnet;

namespace {

FlowNetwork bench_network(std::size_t n, double edge_prob, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<RegionId> nodes;
    for (std::size_t i = 0; i < n; ++i) {
        char zip[16];
        std::snprintf(zip, sizeof(zip), "%03u", static_cast<unsigned>(100 + i));
        nodes.emplace_back(zip, "NY");
    }
    std::vector<double> weights(n * n, 0.0);
    for (std::size_t i = 0; i < n * n; ++i) {
        if (rng.next_unit() < edge_prob) weights[i] = rng.next_unit() * 40.0 + 0.5;
    }
    std::vector<double> totals(n);
    for (std::size_t i = 0; i < n; ++i) totals[i] = 200.0 + rng.next_unit() * 400.0;
    return FlowNetwork("bench", std::move(nodes), std::move(weights), std::move(totals));
}

StressProfile bench_profile(const FlowNetwork& net, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = net.size();
    std::vector<double> load(n), capacity(n);
    for (std::size_t i = 0; i < n; ++i) {
        load[i] = rng.next_unit() * 300.0;
        capacity[i] = rng.next_unit() * 300.0;
    }
    return StressProfile(net.nodes(), {MonthIndex(2020, 1)}, std::move(load),
                         std::move(capacity));
}

void BM_networked_stress(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const FlowNetwork net = bench_network(n, 0.2, 7);
    const StressProfile profile = bench_profile(net, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(networked_stress(net, profile, 0, true));
    }
}
BENCHMARK(BM_networked_stress)->Arg(10)->Arg(50)->Arg(200);

void BM_build_flow_network(benchmark::State& state) {
    SynthParams params;
    params.n_patients = static_cast<int>(state.range(0));
    params.n_regions = 10;
    params.n_months = 12;
    params.seed = 3;
    const SynthCorpus corpus = generate_corpus(params);
    const auto matrices = build_visit_matrices(corpus.visits, {});
    const MonthIndex mid = params.start_month.plus_months(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_flow_network(matrices, mid, 3));
    }
}
BENCHMARK(BM_build_flow_network)->Arg(200)->Arg(1000);

void BM_identical_stress_rep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const FlowNetwork net = bench_network(n, 0.25, 13);
    std::vector<double> capacities(n, 500.0);
    ScenarioConfig cfg;
    cfg.repetitions = 1;
    std::uint64_t k = 0;
    for (auto _ : state) {
        Rng rng(derive_seed(17, {k++}));
        benchmark::DoNotOptimize(identical_stress_once(net, capacities, cfg, rng));
    }
}
BENCHMARK(BM_identical_stress_rep)->Arg(20)->Arg(100);

void BM_perturb_heterogeneity(benchmark::State& state) {
    const FlowNetwork net = bench_network(30, 0.2, 23);
    for (auto _ : state) {
        benchmark::DoNotOptimize(perturb_heterogeneity(net, 50, 5));
    }
}
BENCHMARK(BM_perturb_heterogeneity);

}  // namespace

BENCHMARK_MAIN();
