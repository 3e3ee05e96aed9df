#include "chibound/pipeline.hpp"
#include "chibound/s_template.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace chibound;

namespace {

Graph random_blowup(int target_n, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<int> sizes;
    int n = 0;
    while (n < target_n) {
        int s = 1 + static_cast<int>(rng() % 8);
        if (n + s > target_n)
            s = target_n - n;
        sizes.push_back(s);
        n += s;
    }
    Graph g(n);
    int at = 0;
    std::vector<int> cls(n);
    for (size_t c = 0; c < sizes.size(); ++c)
        for (int i = 0; i < sizes[c]; ++i)
            cls[at++] = static_cast<int>(c);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cls[u] != cls[v])
                g.add_edge_unchecked(u, v);
    return g;
}

void bm_colour_graph(benchmark::State& state)
{
    Graph g = random_blowup(static_cast<int>(state.range(0)), 7);
    auto profile = ThresholdProfile::desk1();
    for (auto _ : state) {
        auto r = colour_graph(g, profile);
        benchmark::DoNotOptimize(r.colouring.k);
    }
}
BENCHMARK(bm_colour_graph)->Arg(40)->Arg(80)->Arg(120)->Unit(benchmark::kMillisecond);

void bm_find_max_template(benchmark::State& state)
{
    Graph g = random_blowup(static_cast<int>(state.range(0)), 11);
    auto profile = ThresholdProfile::desk1();
    VertexSet all = g.all_vertices();
    for (auto _ : state)
        benchmark::DoNotOptimize(find_max_template(g, all, profile, 8).value);
}
BENCHMARK(bm_find_max_template)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);

} // namespace
