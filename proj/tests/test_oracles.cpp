#include "test_helpers.hpp"

#include "chibound/errors.hpp"
#include "chibound/oracles.hpp"

#include <doctest.h>

using namespace chibound;
using namespace testutil;

TEST_SUITE("oracles")
{
    TEST_CASE("clique number on fixtures")
    {
        CHECK(clique_number(cycle(5)).size == 2);
        CHECK(clique_number(petersen()).size == 2);

        // K7 minus one edge
        Graph g = complete(7);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v)
                if (!(u == 0 && v == 1))
                    edges.emplace_back(u, v);
        Graph k7e = Graph::build(7, edges);
        auto r = clique_number(k7e);
        CHECK(r.size == 6);
        CHECK(is_clique_set(k7e, r.witness));
        CHECK(r.witness.size() == 6);
    }

    TEST_CASE("chromatic number on fixtures")
    {
        CHECK(chromatic_number_exact(cycle(5)).chi == 3);
        CHECK(chromatic_number_exact(complete(6)).chi == 6);
        CHECK(chromatic_number_exact(Graph(9)).chi == 1);
        CHECK_THROWS_AS(chromatic_number_exact(Graph(40)), SizeLimitError);

        auto r = chromatic_number_exact(petersen());
        CHECK(r.chi == 3);
        CHECK(is_proper(petersen(), r.colouring));
    }

    TEST_CASE("stable sets")
    {
        CHECK(!find_stable_set(complete(5), complete(5).all_vertices(), 2));
        auto pair = find_stable_set(cycle(5), cycle(5).all_vertices(), 2);
        REQUIRE(pair);
        CHECK(pair->size() == 2);
        CHECK(is_stable_set(cycle(5), *pair));
        CHECK(*pair == VertexSet::of(5, {0, 2})); // lexicographically first

        CHECK(find_stable_set(petersen(), petersen().all_vertices(), 4));
        CHECK(!find_stable_set(petersen(), petersen().all_vertices(), 5));
    }

    TEST_CASE("double stars")
    {
        // H_s contains itself
        for (int s = 1; s <= 3; ++s) {
            auto w = find_induced_double_star(double_star(s), s);
            REQUIRE(w);
            CHECK(verify_double_star_witness(double_star(s), s, *w));
        }

        // C5 contains an induced P4 = H_1 (four consecutive vertices)
        auto w = find_induced_double_star(cycle(5), 1);
        REQUIRE(w);
        CHECK(verify_double_star_witness(cycle(5), 1, *w));
        CHECK(naive_has_double_star(cycle(5), 1));

        // complete multipartite graphs have no induced H_s
        CHECK(!find_induced_double_star(multipartite({3, 3, 3}), 1));
        CHECK(!naive_has_double_star(multipartite({3, 3, 3}), 1));
        CHECK(!find_induced_double_star(multipartite({3, 3, 3}), 2));
    }

    TEST_CASE("double star agrees with naive enumeration")
    {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 120; ++trial) {
            int n = 4 + static_cast<int>(rng() % 7); // up to 10
            double p = 0.1 + 0.08 * static_cast<double>(rng() % 10);
            Graph g = random_gnp(n, p, rng);
            for (int s = 1; s <= 2; ++s) {
                auto mine = find_induced_double_star(g, s);
                bool naive = naive_has_double_star(g, s);
                CHECK(mine.has_value() == naive);
                if (mine)
                    CHECK(verify_double_star_witness(g, s, *mine));
            }
        }
    }

    TEST_CASE("bicliques")
    {
        CHECK(find_biclique_subgraph(complete(6), 3));
        CHECK(!find_biclique_subgraph(cycle(5), 2));
        auto b = find_biclique_subgraph(multipartite({4, 4}), 4);
        REQUIRE(b);
        CHECK(b->first.size() == 4);
        CHECK(b->second.size() == 4);
        for (int u : b->first)
            for (int v : b->second)
                CHECK(multipartite({4, 4}).adjacent(u, v));
    }

    TEST_CASE("ramsey bound")
    {
        auto k5 = check_ramsey_bound(complete(5), 2);
        CHECK(k5.applicable);
        CHECK(k5.sum_bound == 5);
        CHECK(k5.pass());

        auto c5 = check_ramsey_bound(cycle(5), 2);
        CHECK(!c5.applicable);

        // every graph on <= 6 vertices, s in {2,3}
        for (int n = 1; n <= 6; ++n) {
            uint64_t masks = 1ull << (n * (n - 1) / 2);
            for (uint64_t mask = 0; mask < masks; ++mask) {
                Graph g = from_mask(n, mask);
                CHECK(check_ramsey_bound(g, 2).pass());
                CHECK(check_ramsey_bound(g, 3).pass());
            }
        }
    }

    TEST_CASE("ramsey bound on many random graphs")
    {
        std::mt19937_64 rng(1009);
        for (int trial = 0; trial < 10000; ++trial) {
            int n = 1 + static_cast<int>(rng() % 20);
            double p = 0.05 * static_cast<double>(rng() % 20);
            Graph g = random_gnp(n, p, rng);
            CHECK(check_ramsey_bound(g, 2).pass());
            CHECK(check_ramsey_bound(g, 3).pass());
        }
    }

    TEST_CASE("kst dichotomy")
    {
        // star: H_1-free, triangle-free, no K_{2,2}; degeneracy branch
        Graph star = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        auto r = check_kst_dichotomy(star, 1, 2, 2);
        CHECK(r.branch == KstReport::Branch::Degeneracy);
        CHECK(r.degeneracy == 1);

        auto kb = check_kst_dichotomy(multipartite({9, 9}), 1, 3, 2);
        CHECK(kb.branch == KstReport::Branch::Biclique);

        auto empty = check_kst_dichotomy(Graph(6), 1, 2, 2);
        CHECK(empty.branch == KstReport::Branch::Degeneracy);

        // precondition: C5 is not H_1-free
        CHECK_THROWS_AS(check_kst_dichotomy(cycle(5), 1, 2, 2), NotHsFreeError);
    }

    TEST_CASE("oracles agree with naive enumeration on random graphs")
    {
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + static_cast<int>(rng() % 14);
            double p = 0.1 + 0.08 * static_cast<double>(rng() % 10);
            Graph g = random_gnp(n, p, rng);

            auto cq = clique_number(g);
            CHECK(cq.size == naive_clique_number(g));
            CHECK(is_clique_set(g, cq.witness));
            CHECK(cq.witness.size() == cq.size);

            if (n <= 12 || trial % 5 == 0) {
                auto chi = chromatic_number_exact(g);
                CHECK(chi.chi == naive_chi(g));
                CHECK(is_proper(g, chi.colouring));
                CHECK(chi.chi >= cq.size);
            }

            for (int size = 0; size <= std::min(n, 6); ++size) {
                auto st = find_stable_set(g, g.all_vertices(), size);
                CHECK(st.has_value() == naive_has_stable(g, size));
                if (st) {
                    CHECK(st->size() == size);
                    CHECK(is_stable_set(g, *st));
                }
            }

            for (int t = 1; t <= 3; ++t)
                CHECK(find_biclique_subgraph(g, t).has_value() == naive_has_biclique(g, t));
        }
    }

    TEST_CASE("lexicographically smallest maximum clique")
    {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 40; ++trial) {
            Graph g = random_gnp(12, 0.5, rng);
            auto best = clique_number(g);
            auto lex = lexmin_max_clique_in(g, g.all_vertices());
            CHECK(lex.size() == best.size);
            CHECK(is_clique_set(g, lex));
            // no maximum clique is lexicographically smaller (subset scan)
            auto lex_vec = lex.to_vector();
            for (uint32_t mask = 0; mask < (1u << 12); ++mask) {
                if (std::popcount(mask) != best.size || !mask_is_clique(g, mask))
                    continue;
                std::vector<int> other;
                for (int v = 0; v < 12; ++v)
                    if ((mask >> v) & 1)
                        other.push_back(v);
                CHECK(!std::lexicographical_compare(other.begin(), other.end(), lex_vec.begin(),
                                                    lex_vec.end()));
            }
        }
    }
}
