#include "burn/exact.hpp"
#include "burn/gadget.hpp"
#include "burn/generators.hpp"
#include "burn/greedy.hpp"
#include "burn/ptas.hpp"
#include "burn/random_burn.hpp"

#include <benchmark/benchmark.h>

namespace {

burn::Graph path(int n) {
    burn::GenParams p;
    p.n = n;
    return burn::generate(burn::InstanceKind::path, p, 0).graph;
}

burn::Graph tree(int n, std::uint64_t seed) {
    burn::GenParams p;
    p.n = n;
    return burn::generate(burn::InstanceKind::random_tree, p, seed).graph;
}

void BM_ball(benchmark::State& state) {
    burn::Graph g = path(int(state.range(0)));
    int center = g.vertex_count() / 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(burn::ball(g, center, 10));
}
BENCHMARK(BM_ball)->Arg(400)->Arg(2500);

void BM_greedy(benchmark::State& state) {
    burn::Graph g = path(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(burn::greedy_burning(g));
}
BENCHMARK(BM_greedy)->Arg(400)->Arg(2500);

void BM_exact_path(benchmark::State& state) {
    burn::Graph g = path(int(state.range(0)));
    for (auto _ : state) {
        auto res = burn::exact_burning_number(g, g.vertex_count());
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_exact_path)->Arg(9)->Arg(17)->Arg(25);

void BM_exact_tree(benchmark::State& state) {
    burn::Graph g = tree(int(state.range(0)), 11);
    for (auto _ : state) {
        auto res = burn::exact_burning_number(g, g.vertex_count());
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_exact_tree)->Arg(14)->Arg(20);

void BM_random_trial(benchmark::State& state) {
    burn::Graph g = path(int(state.range(0)));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(burn::random_trial(g, 12.0, ++seed));
}
BENCHMARK(BM_random_trial)->Arg(100)->Arg(400);

void BM_randomized_sweep(benchmark::State& state) {
    burn::Graph g = path(int(state.range(0)));
    burn::RandomizedConfig config;
    config.seed = 3;
    for (auto _ : state)
        benchmark::DoNotOptimize(burn::randomized_approx(g, config));
}
BENCHMARK(BM_randomized_sweep)->Arg(100)->Arg(400);

void BM_ptas(benchmark::State& state) {
    burn::Graph g = tree(int(state.range(0)), 5);
    burn::PtasOptions opts;
    opts.a = int(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(burn::ptas_burning(g, opts));
}
BENCHMARK(BM_ptas)->Args({16, 1})->Args({40, 2})->Args({80, 2});

void BM_gadget_build(benchmark::State& state) {
    burn::GenParams p;
    p.n = int(state.range(0));
    p.p = 0.3;
    burn::Graph g = burn::generate(burn::InstanceKind::gnp, p, 2).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(burn::build_gadget(g, 2));
}
BENCHMARK(BM_gadget_build)->Arg(10)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
