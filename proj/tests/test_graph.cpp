#include "test_helpers.hpp"

#include "chibound/graph.hpp"

#include <doctest.h>

#include <sstream>

using namespace chibound;
using namespace testutil;

TEST_SUITE("graph")
{
    TEST_CASE("build validates and dedups")
    {
        Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
        CHECK(p3.m() == 2);
        CHECK(p3.adjacent(0, 1));
        CHECK(!p3.adjacent(0, 2));

        Graph single = Graph::build(1, {});
        CHECK(single.n() == 1);
        CHECK(single.m() == 0);

        Graph dedup = Graph::build(4, {{0, 1}, {0, 1}, {2, 3}});
        CHECK(dedup.m() == 2);

        CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), std::invalid_argument);
        CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), std::invalid_argument);
    }

    TEST_CASE("induced subgraphs")
    {
        Graph k4 = complete(4);
        auto tri = induced_subgraph(k4, VertexSet::of(4, {0, 1, 2}));
        CHECK(tri.graph.n() == 3);
        CHECK(tri.graph.m() == 3);

        Graph c5 = cycle(5);
        auto sub = induced_subgraph(c5, VertexSet::of(5, {0, 1, 2}));
        CHECK(sub.graph.m() == 2); // a path

        // Petersen is triangle-free, so every 4-subset induces omega <= 2
        Graph pet = petersen();
        for (int a = 0; a < 10; ++a)
            for (int b = a + 1; b < 10; ++b)
                for (int c = b + 1; c < 10; ++c)
                    CHECK(!(pet.adjacent(a, b) && pet.adjacent(b, c) && pet.adjacent(a, c)));
    }

    TEST_CASE("neighbours_in partitions")
    {
        Graph c5 = cycle(5);
        VertexSet all = c5.all_vertices();
        auto nb = neighbours_in(c5, 0, all);
        CHECK(nb == VertexSet::of(5, {1, 4}));

        Graph k5 = complete(5);
        CHECK(non_neighbours_in(k5, 0, VertexSet::of(5, {1, 2, 3})).empty());

        Graph pet = petersen();
        CHECK(neighbours_in(pet, 0, pet.all_vertices()).size() == 3);

        // partition property on random graphs
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            Graph g = random_gnp(12, 0.4, rng);
            VertexSet x(12);
            for (int v = 0; v < 12; ++v)
                if (rng() & 1)
                    x.add(v);
            int v = static_cast<int>(rng() % 12);
            auto inn = neighbours_in(g, v, x);
            auto out = non_neighbours_in(g, v, x);
            CHECK(!inn.intersects(out));
            VertexSet together = inn;
            together.union_with(out);
            if (x.contains(v))
                together.add(v);
            CHECK(together == x);
        }
    }

    TEST_CASE("induced subgraph on the full set is the identity")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            int n = 1 + static_cast<int>(rng() % 40);
            Graph g = random_gnp(n, 0.3, rng);
            auto same = induced_subgraph(g, g.all_vertices());
            REQUIRE(same.graph.n() == n);
            for (int u = 0; u < n; ++u) {
                CHECK(same.to_parent[u] == u);
                CHECK(same.graph.neighbours(u) == g.neighbours(u));
            }
        }
    }

    TEST_CASE("degeneracy order")
    {
        Graph tree = Graph::build(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
        CHECK(degeneracy_order(tree).degeneracy == 1);
        CHECK(degeneracy_order(complete(5)).degeneracy == 4);

        // Petersen: exhaustively, every non-empty subgraph has a vertex of
        // degree <= 3, and some subgraph needs 3
        Graph pet = petersen();
        CHECK(degeneracy_order(pet).degeneracy == 3);
        for (uint32_t mask = 1; mask < (1u << 10); ++mask) {
            int best = 10;
            for (int v = 0; v < 10; ++v) {
                if (!((mask >> v) & 1))
                    continue;
                int deg = 0;
                for (int u : pet.neighbours(v))
                    if ((mask >> u) & 1)
                        ++deg;
                best = std::min(best, deg);
            }
            CHECK(best <= 3);
        }

        // certificate shape: every vertex has <= degeneracy later neighbours
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            Graph g = random_gnp(20, 0.3, rng);
            auto ord = degeneracy_order(g);
            VertexSet later = g.all_vertices();
            for (int v : ord.order) {
                later.remove(v);
                CHECK(g.neighbours(v).intersection_size(later) <= ord.degeneracy);
            }
        }
    }

    TEST_CASE("greedy colouring along the reverse order stays within degeneracy+1")
    {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 30; ++trial) {
            Graph g = random_gnp(18, 0.35, rng);
            auto ord = degeneracy_order(g);
            std::vector<int> colour(g.n(), -1);
            int used = 0;
            for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
                int v = *it;
                std::vector<char> taken(g.n() + 1, 0);
                for (int u : g.neighbours(v))
                    if (colour[u] >= 0)
                        taken[colour[u]] = 1;
                int c = 0;
                while (taken[c])
                    ++c;
                colour[v] = c;
                used = std::max(used, c + 1);
            }
            CHECK(used <= ord.degeneracy + 1);
            CHECK(is_proper(g, colour));
        }
    }

    TEST_CASE("file format round trip with comments")
    {
        std::istringstream in("# sample\n3 2\n0 1\n# middle comment\n1 2\n");
        Graph g = read_graph(in);
        CHECK(g.n() == 3);
        CHECK(g.m() == 2);

        std::ostringstream out;
        write_graph(g, out);
        std::istringstream in2(out.str());
        Graph g2 = read_graph(in2);
        CHECK(g2.n() == g.n());
        for (int v = 0; v < g.n(); ++v)
            CHECK(g2.neighbours(v) == g.neighbours(v));

        std::istringstream bad("3\n");
        CHECK_THROWS_AS(read_graph(bad), std::invalid_argument);
    }
}
