#include "chibound/oracles.hpp"

#include "chibound/errors.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <stdexcept>

namespace chibound {

namespace {

long long pow_sat(long long base, int exp)
{
    __int128 r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > static_cast<__int128>(LLONG_MAX))
            return LLONG_MAX;
    }
    return static_cast<long long>(r);
}

// Tomita-style branch and bound; stops early once `target` is reached (if set)
struct CliqueSearch {
    const Graph& g;
    int best_size = 0;
    VertexSet best;
    int target = INT_MAX;
    bool done = false;

    explicit CliqueSearch(const Graph& g) : g(g), best(g.n()) {}

    void run(const VertexSet& within)
    {
        std::vector<int> r;
        r.reserve(g.n());
        expand(r, within);
    }

    void expand(std::vector<int>& r, const VertexSet& cand)
    {
        if (done)
            return;
        if (cand.empty()) {
            if (static_cast<int>(r.size()) > best_size) {
                best_size = static_cast<int>(r.size());
                best = VertexSet(g.n());
                for (int v : r)
                    best.add(v);
                if (best_size >= target)
                    done = true;
            }
            return;
        }

        // greedy colouring bound: vertices listed class by class
        std::vector<int> order, bound;
        VertexSet uncoloured = cand;
        int colour = 0;
        while (!uncoloured.empty()) {
            ++colour;
            VertexSet avail = uncoloured;
            while (!avail.empty()) {
                int v = avail.min();
                order.push_back(v);
                bound.push_back(colour);
                avail.setminus_with(g.neighbours(v));
                avail.remove(v);
                uncoloured.remove(v);
            }
        }

        VertexSet remaining = cand;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(r.size()) + bound[i] <= best_size)
                return;
            int v = order[i];
            r.push_back(v);
            VertexSet next = remaining;
            next.intersect_with(g.neighbours(v));
            expand(r, next);
            r.pop_back();
            if (done)
                return;
            remaining.remove(v);
        }
    }
};

} // namespace

CliqueResult clique_number(const Graph& g)
{
    return clique_number_in(g, g.all_vertices());
}

CliqueResult clique_number_in(const Graph& g, const VertexSet& within)
{
    CliqueSearch search(g);
    search.run(within);
    return {search.best_size, search.best};
}

namespace {

// is there a clique of size >= k inside `within`?
std::optional<VertexSet> clique_at_least(const Graph& g, const VertexSet& within, int k)
{
    if (k <= 0)
        return VertexSet(g.n());
    CliqueSearch search(g);
    search.best_size = k - 1; // only improvements count
    search.target = k;
    search.run(within);
    if (search.done)
        return search.best;
    return std::nullopt;
}

} // namespace

VertexSet lexmin_max_clique_in(const Graph& g, const VertexSet& within)
{
    int omega = clique_number_in(g, within).size;
    VertexSet chosen(g.n());
    VertexSet cand = within;
    int need = omega;
    while (need > 0) {
        for (int v : cand) {
            VertexSet rest = cand;
            rest.intersect_with(g.neighbours(v));
            if (clique_at_least(g, rest, need - 1)) {
                chosen.add(v);
                cand = rest;
                --need;
                break;
            }
        }
    }
    return chosen;
}

namespace {

struct KColouring {
    const Graph& g;
    int k;
    std::vector<int> colour;

    KColouring(const Graph& g, int k) : g(g), k(k), colour(g.n(), -1) {}

    int pick() const
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (colour[v] != -1)
                continue;
            uint64_t seen = 0;
            for (int u : g.neighbours(v))
                if (colour[u] != -1)
                    seen |= 1ull << colour[u];
            int sat = std::popcount(seen);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int used_max)
    {
        int v = pick();
        if (v == -1)
            return true;
        int cap = std::min(k - 1, used_max + 1);
        for (int c = 0; c <= cap; ++c) {
            bool ok = true;
            for (int u : g.neighbours(v))
                if (colour[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            colour[v] = c;
            if (solve(std::max(used_max, c)))
                return true;
            colour[v] = -1;
        }
        return false;
    }
};

} // namespace

ChromaticResult chromatic_number_exact(const Graph& g, int size_limit)
{
    if (g.n() > size_limit)
        throw SizeLimitError("chromatic_number_exact: n=" + std::to_string(g.n())
                             + " exceeds limit " + std::to_string(size_limit));
    if (g.n() == 0)
        return {0, {}};

    int lower = clique_number(g).size;
    for (int k = std::max(lower, 1); ; ++k) {
        KColouring kc(g, k);
        if (kc.solve(-1))
            return {k, kc.colour};
    }
}

std::optional<VertexSet> find_stable_set(const Graph& g, const VertexSet& x, int size)
{
    if (size < 0)
        throw std::invalid_argument("find_stable_set: negative size");
    VertexSet current(g.n());
    std::function<bool(VertexSet, int)> rec = [&](VertexSet cand, int need) -> bool {
        if (need == 0)
            return true;
        if (cand.size() < need)
            return false;
        int v = cand.min();
        // lexicographic: try including the smallest candidate first
        VertexSet in = cand;
        in.setminus_with(g.neighbours(v));
        in.remove(v);
        current.add(v);
        if (rec(in, need - 1))
            return true;
        current.remove(v);
        cand.remove(v);
        return rec(cand, need);
    };
    if (rec(x, size))
        return current;
    return std::nullopt;
}

std::optional<std::pair<VertexSet, VertexSet>> find_balanced_stable_set(const Graph& g,
                                                                        const VertexSet& a,
                                                                        const VertexSet& b,
                                                                        int s)
{
    if (a.intersects(b))
        throw std::invalid_argument("find_balanced_stable_set: sides not disjoint");
    if (s < 0)
        throw std::invalid_argument("find_balanced_stable_set: negative s");
    if (s == 0)
        return std::make_pair(VertexSet(g.n()), VertexSet(g.n()));

    VertexSet side_a(g.n());
    std::optional<VertexSet> side_b;
    std::function<bool(VertexSet, VertexSet, int)> rec =
        [&](VertexSet cand_a, VertexSet cand_b, int need) -> bool {
        if (cand_b.size() < s)
            return false;
        if (need == 0) {
            side_b = find_stable_set(g, cand_b, s);
            return side_b.has_value();
        }
        if (cand_a.size() < need)
            return false;
        int v = cand_a.min();
        VertexSet in_a = cand_a, in_b = cand_b;
        in_a.setminus_with(g.neighbours(v));
        in_a.remove(v);
        in_b.setminus_with(g.neighbours(v));
        side_a.add(v);
        if (rec(in_a, in_b, need - 1))
            return true;
        side_a.remove(v);
        cand_a.remove(v);
        return rec(cand_a, cand_b, need);
    };
    if (rec(a, b, s))
        return std::make_pair(side_a, *side_b);
    return std::nullopt;
}

std::optional<DoubleStarWitness> find_induced_double_star(const Graph& g, int s)
{
    if (s < 1)
        throw std::invalid_argument("find_induced_double_star: s must be >= 1");
    for (int u = 0; u < g.n(); ++u) {
        for (int x : g.neighbours(u)) {
            if (x < u)
                continue;
            VertexSet cand_u = g.neighbours(u);
            cand_u.setminus_with(g.neighbours(x));
            cand_u.remove(x);
            if (cand_u.size() < s)
                continue;
            VertexSet cand_x = g.neighbours(x);
            cand_x.setminus_with(g.neighbours(u));
            cand_x.remove(u);
            if (cand_x.size() < s)
                continue;
            if (auto bal = find_balanced_stable_set(g, cand_u, cand_x, s))
                return DoubleStarWitness{u, x, bal->first, bal->second};
        }
    }
    return std::nullopt;
}

bool verify_double_star_witness(const Graph& g, int s, const DoubleStarWitness& w)
{
    const auto& lu = w.leaves_u;
    const auto& lx = w.leaves_x;
    if (lu.size() != s || lx.size() != s)
        return false;
    if (!g.adjacent(w.centre_u, w.centre_x))
        return false;
    if (lu.contains(w.centre_u) || lu.contains(w.centre_x) || lx.contains(w.centre_u)
        || lx.contains(w.centre_x) || lu.intersects(lx))
        return false;
    for (int a : lu)
        if (!g.adjacent(w.centre_u, a) || g.adjacent(w.centre_x, a))
            return false;
    for (int b : lx)
        if (!g.adjacent(w.centre_x, b) || g.adjacent(w.centre_u, b))
            return false;
    VertexSet leaves = lu;
    leaves.union_with(lx);
    for (int a : leaves)
        for (int b : leaves)
            if (b > a && g.adjacent(a, b))
                return false;
    return true;
}

std::optional<std::pair<VertexSet, VertexSet>> find_biclique_subgraph(const Graph& g, int t)
{
    return find_biclique_in(g, g.all_vertices(), t);
}

std::optional<std::pair<VertexSet, VertexSet>> find_biclique_in(const Graph& g,
                                                                const VertexSet& within, int t)
{
    if (t < 1)
        throw std::invalid_argument("find_biclique: t must be >= 1");
    if (within.size() < 2 * t)
        return std::nullopt;

    VertexSet eligible(g.n());
    for (int v : within)
        if (g.neighbours(v).intersection_size(within) >= t)
            eligible.add(v);
    if (eligible.size() < 2 * t)
        return std::nullopt;

    std::vector<int> side;
    std::optional<std::pair<VertexSet, VertexSet>> found;
    std::function<bool(int, const VertexSet&)> rec = [&](int from, const VertexSet& common) -> bool {
        if (static_cast<int>(side.size()) == t) {
            if (common.size() < t)
                return false;
            VertexSet x(g.n()), y(g.n());
            for (int v : side)
                x.add(v);
            int taken = 0;
            for (int v : common) {
                y.add(v);
                if (++taken == t)
                    break;
            }
            found = std::make_pair(x, y);
            return true;
        }
        if (common.size() < t)
            return false;
        for (int v = eligible.next(from); v >= 0; v = eligible.next(v + 1)) {
            VertexSet next = common;
            next.intersect_with(g.neighbours(v));
            side.push_back(v);
            if (rec(v + 1, next))
                return true;
            side.pop_back();
        }
        return false;
    };

    VertexSet all = within;
    rec(0, all);
    return found;
}

RamseyReport check_ramsey_bound(const Graph& g, int s)
{
    if (s < 0)
        throw std::invalid_argument("check_ramsey_bound: negative s");
    RamseyReport rep;
    rep.n = g.n();
    rep.applicable = !find_stable_set(g, g.all_vertices(), s).has_value();
    if (!rep.applicable)
        return rep;
    rep.omega = clique_number(g).size;
    __int128 sum = 0;
    for (int e = 1; e <= s - 1; ++e) {
        sum += static_cast<__int128>(pow_sat(rep.omega, e));
        if (sum > static_cast<__int128>(LLONG_MAX))
            sum = LLONG_MAX;
    }
    rep.sum_bound = static_cast<long long>(sum);
    rep.sum_holds = rep.n <= rep.sum_bound;
    rep.power_applicable = rep.omega > 1;
    rep.power_bound = pow_sat(rep.omega, s);
    rep.power_holds = !rep.power_applicable || rep.n < rep.power_bound;
    return rep;
}

KstReport check_kst_dichotomy(const Graph& g, int s, int t, int c, bool verify_hfree)
{
    if (verify_hfree) {
        if (auto w = find_induced_double_star(g, s))
            throw NotHsFreeError("check_kst_dichotomy: input contains an induced double star",
                                 *w);
    }
    KstReport rep;
    rep.threshold = pow_sat(t, c);
    rep.degeneracy = degeneracy_order(g).degeneracy;
    if (rep.degeneracy < rep.threshold) {
        rep.branch = KstReport::Branch::Degeneracy;
        return rep;
    }
    rep.biclique = find_biclique_subgraph(g, t);
    rep.branch = rep.biclique ? KstReport::Branch::Biclique : KstReport::Branch::Neither;
    return rep;
}

} // namespace chibound
