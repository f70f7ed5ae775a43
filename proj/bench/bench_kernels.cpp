// Serial reference vs OpenMP kernel, and the month-level integration loop.

#include <benchmark/benchmark.h>

#include "migrasim/dynamics.hpp"
#include "migrasim/graph.hpp"

using namespace migrasim;

namespace {

SocialGraph make_graph(std::size_t n) {
    RandomStream rng(12345);
    return random_graph(n, 0.1, 0.09, rng);
}

std::vector<double> make_state(std::size_t n) {
    RandomStream rng(6789);
    std::vector<double> x(n);
    for (double& xi : x) xi = 2.0 * rng.uniform01() - 1.0;
    return x;
}

const DynamicsParams kParams{.a = 0.0008, .f = 0.001, .input_gain = 0.02};

void BM_rhs_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SocialGraph g = make_graph(n);
    const std::vector<double> x = make_state(n);
    std::vector<double> out(n);
    for (auto _ : state) {
        rhs_serial(x, g, kParams, 0.05, out);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_rhs_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SocialGraph g = make_graph(n);
    const std::vector<double> x = make_state(n);
    std::vector<double> out(n);
    for (auto _ : state) {
        rhs_parallel(x, g, kParams, 0.05, out);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_month_integration(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SocialGraph g = make_graph(n);
    for (auto _ : state) {
        IntentionState s{make_state(n), 0.0};
        for (int k = 0; k < 120; ++k) step(s, g, kParams, 0.05, 0.25);
        benchmark::DoNotOptimize(s.x.data());
    }
}

} // namespace

BENCHMARK(BM_rhs_serial)->Arg(100)->Arg(400)->Arg(1000);
BENCHMARK(BM_rhs_parallel)->Arg(100)->Arg(400)->Arg(1000);
BENCHMARK(BM_month_integration)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
