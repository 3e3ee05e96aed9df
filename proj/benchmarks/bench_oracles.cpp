#include "chibound/graph.hpp"
#include "chibound/oracles.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace chibound;

namespace {

Graph random_graph(int n, double p, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    uint64_t threshold = static_cast<uint64_t>(p * 18446744073709551615.0L);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold)
                g.add_edge_unchecked(u, v);
    return g;
}

Graph blowup(int classes, int size)
{
    Graph g(classes * size);
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (u / size != v / size)
                g.add_edge_unchecked(u, v);
    return g;
}

void bm_clique_number(benchmark::State& state)
{
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(clique_number(g).size);
}
BENCHMARK(bm_clique_number)->Arg(20)->Arg(40)->Arg(60);

void bm_chromatic_exact(benchmark::State& state)
{
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 23);
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_number_exact(g, 18).chi);
}
BENCHMARK(bm_chromatic_exact)->Arg(12)->Arg(16);

void bm_double_star_free(benchmark::State& state)
{
    Graph g = blowup(static_cast<int>(state.range(0)), 4); // always H_s-free
    for (auto _ : state)
        benchmark::DoNotOptimize(find_induced_double_star(g, 1).has_value());
}
BENCHMARK(bm_double_star_free)->Arg(8)->Arg(15)->Arg(30);

void bm_double_star_hit(benchmark::State& state)
{
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.2, 31);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_induced_double_star(g, 2).has_value());
}
BENCHMARK(bm_double_star_hit)->Arg(30)->Arg(60);

void bm_biclique(benchmark::State& state)
{
    Graph g = random_graph(60, 0.3, 47);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_biclique_subgraph(g, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_biclique)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
