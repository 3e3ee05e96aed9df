#include "test_helpers.hpp"

#include "chibound/classify.hpp"
#include "chibound/errors.hpp"

#include <doctest.h>

using namespace chibound;
using namespace testutil;

namespace {

const ThresholdProfile desk = ThresholdProfile::desk1();
const ThresholdProfile desk2 = ThresholdProfile::desk2();

Template make(const Graph& g, std::initializer_list<int> l0,
              std::initializer_list<std::initializer_list<int>> parts)
{
    Template t;
    t.l0 = VertexSet(g.n());
    for (int v : l0)
        t.l0.add(v);
    for (auto part : parts) {
        VertexSet p(g.n());
        for (int v : part)
            p.add(v);
        t.parts.push_back(p);
    }
    return t;
}

// independent re-evaluation of the label definitions, sharing no code with
// classify: reads the witnesses and checks every clause literally
bool recheck_pendant(const Graph& g, const Template& t, const ThresholdProfile& p, int v,
                     const PendantWitness& w)
{
    if (w.part_i == w.part_j || w.part_i < 0 || w.part_j < 0)
        return false;
    if (!t.parts[w.part_j].contains(w.u))
        return false;
    if (w.stable_set.size() != p.s + 1)
        return false;
    for (int a : w.stable_set) {
        if (!t.parts[w.part_i].contains(a))
            return false;
        if (!g.adjacent(w.u, a))
            return false;
        for (int b : w.stable_set)
            if (b > a && g.adjacent(a, b))
                return false;
    }
    if (g.adjacent(v, w.u))
        return false;
    int nbrs = 0;
    for (int a : w.stable_set)
        if (g.adjacent(v, a))
            ++nbrs;
    return nbrs == 1;
}

bool recheck_dense(const Graph& g, const Template& t, const ThresholdProfile& p, int omega,
                   int v, const DenseWitness& w)
{
    if (!t.parts[w.part_j].contains(w.u))
        return false;
    for (int i = 0; i < t.length(); ++i) {
        if (i == w.part_j)
            continue;
        long long count = 0;
        for (int x : t.parts[i])
            if (g.adjacent(x, w.u) && !g.adjacent(x, v))
                ++count;
        if (!p.dense_cap.count_less(count, omega))
            return false;
    }
    return true;
}

bool recheck_pure(const Graph& g, const Template& t, const ThresholdProfile& p, int omega, int v,
                  const std::vector<int>& iv)
{
    int zero = 0;
    for (int i = 0; i < t.length(); ++i) {
        long long nbrs = 0, nonnbrs = 0;
        for (int x : t.parts[i])
            (g.adjacent(v, x) ? nbrs : nonnbrs)++;
        bool in_iv = std::binary_search(iv.begin(), iv.end(), i);
        if (nbrs == 0) {
            ++zero;
            if (in_iv)
                return false;
        } else {
            if (!in_iv)
                return false;
            if (!p.pure_cap.count_at_most(nonnbrs, omega))
                return false;
        }
    }
    return zero >= 2;
}

// five stable pairs, fully joined (the 10-vertex cocktail-party graph), plus
// pure attachments given by (index set, count); optionally the attachment
// groups are fully joined to each other
struct CocktailFixture {
    Graph g;
    Template tmpl;
    int omega = 5;
};

CocktailFixture cocktail_with_pure(const std::vector<std::pair<std::vector<int>, int>>& attach,
                                   bool join_across_groups = false)
{
    int extra = 0;
    for (const auto& [idx, count] : attach)
        extra += count;
    int n = 10 + extra;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (u / 2 != v / 2)
                edges.emplace_back(u, v);
    int at = 10;
    std::vector<std::pair<int, int>> group_span;
    for (const auto& [idx, count] : attach) {
        group_span.emplace_back(at, at + count);
        for (int i = 0; i < count; ++i) {
            for (int part : idx)
                for (int x = 2 * part; x < 2 * part + 2; ++x)
                    edges.emplace_back(at, x);
            ++at;
        }
    }
    if (join_across_groups)
        for (size_t a = 0; a < group_span.size(); ++a)
            for (size_t b = a + 1; b < group_span.size(); ++b)
                for (int u = group_span[a].first; u < group_span[a].second; ++u)
                    for (int v = group_span[b].first; v < group_span[b].second; ++v)
                        edges.emplace_back(u, v);

    CocktailFixture f{Graph::build(n, edges), Template{}, 5};
    f.tmpl.l0 = VertexSet(n);
    for (int part = 0; part < 5; ++part) {
        VertexSet p(n);
        p.add(2 * part);
        p.add(2 * part + 1);
        f.tmpl.parts.push_back(p);
    }
    return f;
}

} // namespace

TEST_SUITE("classify")
{
    TEST_CASE("apex over a two-part join is dense, not pure")
    {
        // C4 = two stable pairs fully joined; apex adjacent to everything
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u <= 1; ++u)
            for (int v = 2; v <= 3; ++v)
                edges.emplace_back(u, v);
        for (int v = 0; v <= 3; ++v)
            edges.emplace_back(4, v);
        Graph g = Graph::build(5, edges);
        auto t = make(g, {}, {{0, 1}, {2, 3}});
        auto cn = classify(g, t, desk, clique_number(g).size);

        REQUIRE(cn.nbhd == VertexSet::of(5, {4}));
        const auto& lab = cn.labels.at(4);
        REQUIRE(lab.dense);
        CHECK(!lab.pure_index_set); // k=2 leaves no two empty parts
        CHECK(!lab.pendant);
        CHECK(recheck_dense(g, t, desk, cn.omega, 4, *lab.dense));
        CHECK(cn.m_partition.empty());
    }

    TEST_CASE("vertex without part neighbours stays out of the neighbourhood")
    {
        Graph g = Graph::build(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
        auto t = make(g, {}, {{0, 1}, {2, 3}});
        auto cn = classify(g, t, desk, 2);
        CHECK(cn.nbhd.empty());
        CHECK(cn.labels.empty());
    }

    TEST_CASE("pendant witness by direct construction")
    {
        // stable pair S = {0,1} in part 0, u = 2 in part 1, full join between
        // parts; v = 4 adjacent to exactly one of S and not to u
        Graph g = Graph::build(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 0}});
        auto t = make(g, {}, {{0, 1}, {2, 3}});
        auto cn = classify(g, t, desk, 2);
        const auto& lab = cn.labels.at(4);
        REQUIRE(lab.pendant);
        CHECK(lab.pendant->part_i == 0);
        CHECK(lab.pendant->part_j == 1);
        CHECK(lab.pendant->stable_set == VertexSet::of(5, {0, 1}));
        CHECK(recheck_pendant(g, t, desk, 4, *lab.pendant));
        CHECK(!lab.dense);
        CHECK(!lab.pure_index_set);

        // an s=1 pendant witness always embeds an induced P4, so the
        // pendant-count bound refuses this instance outright
        CHECK(find_induced_double_star(g, 1));
        CHECK_THROWS_AS(count_pendant_bound(g, cn, desk, 2), NotHsFreeError);
    }

    TEST_CASE("pendant bound passes on H_2-free instances")
    {
        // s=2: stable triple in part 0 joined to part 1; v sees one of them.
        // Only six vertices but seven induced edges, so no H_2 anywhere.
        Graph g = Graph::build(6, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {5, 0}});
        REQUIRE(!find_induced_double_star(g, 2));
        auto t = make(g, {}, {{0, 1, 2}, {3, 4}});
        int omega = clique_number(g).size;
        REQUIRE(validate_template(g, t, desk2, omega).ok);
        auto cn = classify(g, t, desk2, omega);
        const auto& lab = cn.labels.at(5);
        REQUIRE(lab.pendant);
        CHECK(recheck_pendant(g, t, desk2, 5, *lab.pendant));

        auto rep = count_pendant_bound(g, cn, desk2, omega);
        CHECK(rep.count == 1);
        CHECK(rep.pass);

        // zero pendant vertices also pass
        Graph blow = multipartite({3, 3, 3});
        auto bt = make(blow, {}, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
        auto bcn = classify(blow, bt, desk, 3);
        auto brep = count_pendant_bound(blow, bcn, desk, 3);
        CHECK(brep.count == 0);
        CHECK(brep.pass);
    }

    TEST_CASE("is_s_crowded")
    {
        Graph k6 = complete(6);
        CHECK(is_s_crowded(k6, VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {3, 4, 5}), 1));

        Graph e8(8);
        CHECK(!is_s_crowded(e8, VertexSet::of(8, {0, 1, 2, 3}), VertexSet::of(8, {4, 5, 6, 7}),
                            2));

        Graph c6 = cycle(6);
        CHECK(!is_s_crowded(c6, VertexSet::of(6, {0, 2, 4}), VertexSet::of(6, {1, 3, 5}), 1));

        CHECK_THROWS_AS(is_s_crowded(k6, VertexSet::of(6, {0, 1}), VertexSet::of(6, {1, 2}), 1),
                        std::invalid_argument);
    }

    TEST_CASE("is_s_crowded agrees with naive enumeration")
    {
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 80; ++trial) {
            int n = 6 + static_cast<int>(rng() % 7); // <= 12
            Graph g = random_gnp(n, 0.35, rng);
            VertexSet a(n), b(n);
            for (int v = 0; v < n; ++v) {
                uint64_t r = rng() % 3;
                if (r == 0)
                    a.add(v);
                else if (r == 1)
                    b.add(v);
            }
            for (int s = 1; s <= 2; ++s) {
                bool naive = false;
                for (uint32_t mask = 0; mask < (1u << n) && !naive; ++mask) {
                    if (!mask_is_stable(g, mask))
                        continue;
                    int ca = 0, cb = 0, other = 0;
                    for (int v = 0; v < n; ++v)
                        if ((mask >> v) & 1) {
                            if (a.contains(v))
                                ++ca;
                            else if (b.contains(v))
                                ++cb;
                            else
                                ++other;
                        }
                    if (ca == s && cb == s && other == 0)
                        naive = true;
                }
                CHECK(is_s_crowded(g, a, b, s) == !naive);
            }
        }
    }

    TEST_CASE("m partition and nested large sets")
    {
        auto f = cocktail_with_pure({{{0, 1}, 3}, {{0, 1, 2}, 3}});
        REQUIRE(validate_template(f.g, f.tmpl, desk, f.omega).ok);
        REQUIRE(clique_number(f.g).size == 5);
        auto cn = classify(f.g, f.tmpl, desk, f.omega);

        VertexSet mj = cn.m_partition.at({0, 1});
        VertexSet mi = cn.m_partition.at({0, 1, 2});
        CHECK(mj.size() == 3);
        CHECK(mi.size() == 3);
        for (const auto& [v, lab] : cn.labels)
            if (lab.pure_index_set)
                CHECK(recheck_pure(f.g, f.tmpl, desk, f.omega, v, *lab.pure_index_set));

        auto rep = large_sets_structure(f.g, cn, desk, f.omega);
        CHECK(rep.cutoff_m == 2);
        CHECK(rep.large_sets.size() == 2);
        CHECK(rep.count_ok); // 2 <= k-1 = 4
        REQUIRE(rep.pairs.size() == 1);
        CHECK(rep.pairs[0].branch == "containment-ij"); // {0,1} inside {0,1,2}
        CHECK(rep.pairs[0].holds);
    }

    TEST_CASE("union-crowded branch of the trichotomy")
    {
        auto f = cocktail_with_pure({{{0, 1}, 3}, {{2, 3, 4}, 3}}, /*join_across=*/true);
        REQUIRE(clique_number(f.g).size == 5);
        auto cn = classify(f.g, f.tmpl, desk, f.omega);
        auto rep = large_sets_structure(f.g, cn, desk, f.omega);
        REQUIRE(rep.pairs.size() == 1);
        CHECK(rep.pairs[0].branch == "union-crowded");
        CHECK(rep.pairs[0].holds);

        // without the cross join the sets are not s-crowded: reported honestly
        auto g2 = cocktail_with_pure({{{0, 1}, 3}, {{2, 3, 4}, 3}}, false);
        auto cn2 = classify(g2.g, g2.tmpl, desk, g2.omega);
        auto rep2 = large_sets_structure(g2.g, cn2, desk, g2.omega);
        REQUIRE(rep2.pairs.size() == 1);
        CHECK(rep2.pairs[0].branch == "union-crowded");
        CHECK(!rep2.pairs[0].holds);
    }

    TEST_CASE("small union colouring")
    {
        // no pure vertices at all: empty colouring with the template's width
        Graph blow = multipartite({2, 2});
        auto t0 = make(blow, {}, {{0, 1}, {2, 3}});
        auto cn0 = classify(blow, t0, desk, 2);
        auto c0 = small_union_colouring(blow, cn0, desk, 2);
        CHECK(c0.k == 2);
        CHECK(c0.covered(blow.n()).empty());
        CHECK(verify_kd(blow, c0).ok);

        // one m-small stable set lands in its class with a (., 0) certificate
        auto f = cocktail_with_pure({{{0, 1}, 2}});
        auto cn = classify(f.g, f.tmpl, desk, f.omega);
        auto c = small_union_colouring(f.g, cn, desk, f.omega);
        CHECK(c.k == 5);
        CHECK(c.d == 0);
        CHECK(c.parts[2] == VertexSet::of(f.g.n(), {10, 11})); // first index outside {0,1}
        CHECK(verify_kd(f.g, c).ok);

        // two small sets with cross edges still verify
        auto f2 = cocktail_with_pure({{{0, 1}, 2}, {{2, 3}, 2}}, /*join_across=*/true);
        auto cn2 = classify(f2.g, f2.tmpl, desk, f2.omega);
        auto c2 = small_union_colouring(f2.g, cn2, desk, f2.omega);
        CHECK(verify_kd(f2.g, c2).ok);
        CHECK(c2.covered(f2.g.n()).size() == 4);
    }

    TEST_CASE("small union outdegree violation is named")
    {
        // synthetic classification with an understated omega: the out-star of
        // vertex 8 points into its own set (ties orient low id -> high id)
        // and into a whole smaller-|I| set sharing its class
        std::vector<std::pair<int, int>> edges;
        for (int v = 9; v <= 13; ++v)
            edges.emplace_back(8, v);
        Graph h = Graph::build(14, edges);
        ClassifiedNeighbourhood cn;
        cn.tmpl = make(h, {}, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
        cn.universe = h.all_vertices();
        cn.omega = 1;
        cn.m_partition[{0, 1, 3}] = VertexSet::of(14, {8, 9, 10});
        cn.m_partition[{0, 1}] = VertexSet::of(14, {11, 12, 13});

        ThresholdProfile p = desk;
        p.small_cutoff = Formula::constant(3); // both sets small; cap = 3 + 1
        CHECK_THROWS_AS(small_union_colouring(h, cn, p, 1), StructuralViolation);
        try {
            small_union_colouring(h, cn, p, 1);
        } catch (const StructuralViolation& e) {
            CHECK(e.vertex == 8);
            CHECK(e.index == 2); // both index sets miss part 2 first
        }
    }

    TEST_CASE("large union colouring: listing branch")
    {
        auto f = cocktail_with_pure({{{0, 1}, 3}});
        auto cn = classify(f.g, f.tmpl, desk, f.omega);
        int recurse_calls = 0;
        RecurseFn recurse = [&](const VertexSet& sub) {
            ++recurse_calls;
            return degeneracy_colouring(f.g, sub);
        };
        auto c = large_union_colouring(f.g, cn, desk, f.omega, recurse);
        CHECK(recurse_calls == 0); // |A| = 3 <= peel * omega and B empty
        CHECK(c.k == 3);           // |A| singletons
        CHECK(c.d == 0);
        CHECK(verify_kd(f.g, c).ok);
    }

    TEST_CASE("large union colouring: peeling branch")
    {
        // four stable pairs; 9 pure vertices on {0,1}, 3 on {2,3}
        int n = 8 + 12;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                if (u / 2 != v / 2)
                    edges.emplace_back(u, v);
        for (int v = 8; v < 17; ++v)
            for (int x = 0; x < 4; ++x)
                edges.emplace_back(v, x);
        for (int v = 17; v < 20; ++v)
            for (int x = 4; x < 8; ++x)
                edges.emplace_back(v, x);
        Graph g = Graph::build(n, edges);
        REQUIRE(clique_number(g).size == 4);

        Template t;
        t.l0 = VertexSet(n);
        for (int part = 0; part < 4; ++part) {
            VertexSet p(n);
            p.add(2 * part);
            p.add(2 * part + 1);
            t.parts.push_back(p);
        }
        REQUIRE(validate_template(g, t, desk, 4).ok);
        auto cn = classify(g, t, desk, 4);
        REQUIRE(cn.m_partition.at({0, 1}).size() == 9);
        REQUIRE(cn.m_partition.at({2, 3}).size() == 3);

        std::vector<VertexSet> recursed;
        RecurseFn recurse = [&](const VertexSet& sub) {
            recursed.push_back(sub);
            return degeneracy_colouring(g, sub);
        };
        auto c = large_union_colouring(g, cn, desk, 4, recurse);
        CHECK(verify_kd(g, c).ok);
        VertexSet all_pure(n);
        for (int v = 8; v < 20; ++v)
            all_pure.add(v);
        CHECK(c.covered(n) == all_pure);
        CHECK(recursed.size() == 2); // A minus X and B minus C
    }

    TEST_CASE("large union colouring: clique-bound violation reported")
    {
        // B's pure set hides a K4 while the caller claims omega = 3
        int n = 6 + 12 + 4;
        std::vector<std::pair<int, int>> edges;
        // A-pile: 12 stable vertices 6..17 seeing parts {0,1}
        for (int v = 6; v < 18; ++v)
            for (int x = 0; x < 4; ++x)
                edges.emplace_back(v, x);
        // B-pile: K4 on 18..21 seeing parts {1,2}
        for (int u = 18; u < 22; ++u) {
            for (int v = u + 1; v < 22; ++v)
                edges.emplace_back(u, v);
            for (int x = 2; x < 6; ++x)
                edges.emplace_back(u, x);
        }
        Graph g = Graph::build(n, edges);
        ClassifiedNeighbourhood cn;
        cn.tmpl = make(g, {}, {{0, 1}, {2, 3}, {4, 5}});
        cn.universe = g.all_vertices();
        cn.omega = 3;
        VertexSet a(n), b(n);
        for (int v = 6; v < 18; ++v)
            a.add(v);
        for (int v = 18; v < 22; ++v)
            b.add(v);
        cn.m_partition[{0, 1}] = a;
        cn.m_partition[{1, 2}] = b;

        RecurseFn recurse = [&](const VertexSet& sub) { return degeneracy_colouring(g, sub); };
        CHECK_THROWS_AS(large_union_colouring(g, cn, desk, 3, recurse), StructuralViolation);
    }

    TEST_CASE("classification report shape")
    {
        auto f = cocktail_with_pure({{{0, 1}, 3}});
        auto cn = classify(f.g, f.tmpl, desk, f.omega);
        auto j = classification_report(f.g, cn, desk, f.omega);
        CHECK(j["omega"] == 5);
        CHECK(j.contains("labels"));
        CHECK(j.contains("m_partition"));
        CHECK(j["large_sets"]["cutoff_m"] == 2);
        CHECK(j.contains("unlabelled"));
    }
}
