#include "chibound/s_template.hpp"

#include "chibound/errors.hpp"
#include "chibound/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace chibound {

VertexSet Template::part_union(int n) const
{
    VertexSet u(n);
    for (const auto& p : parts)
        u.union_with(p);
    return u;
}

VertexSet Template::vertex_set(int n) const
{
    VertexSet u = part_union(n);
    u.union_with(l0);
    return u;
}

TemplateCheck validate_template(const Graph& g, const Template& t, const ThresholdProfile& p,
                                int omega)
{
    const int n = g.n();
    VertexSet seen = t.l0;
    for (int j = 0; j < t.length(); ++j) {
        if (t.parts[j].intersects(seen))
            return {false, "sets not pairwise disjoint", -1, j};
        seen.union_with(t.parts[j]);
    }

    for (int u : t.l0)
        for (int v : t.l0)
            if (v > u && !g.adjacent(u, v))
                return {false, "L0 not a clique", u, -1};

    VertexSet mass = t.part_union(n);
    for (int u : t.l0)
        if (!non_neighbours_in(g, u, mass).empty())
            return {false, "L0 join", u, -1};

    for (int j = 0; j < t.length(); ++j) {
        long long sz = t.parts[j].size();
        if (p.part_lower.count_less(sz, omega))
            return {false, "part below partLower", -1, j};
        if (!p.part_upper.count_at_most(sz, omega))
            return {false, "part above partUpper", -1, j};
    }

    for (int i = 0; i < t.length(); ++i)
        for (int v : t.parts[i])
            for (int j = 0; j < t.length(); ++j) {
                if (j == i)
                    continue;
                long long nn = t.parts[j].difference_size(g.neighbours(v));
                if (!p.cross_cap.count_at_most(nn, omega))
                    return {false, "cross-part non-neighbour cap", v, j};
            }

    return {};
}

Value template_value(const Template& t, const ThresholdProfile& p, int omega)
{
    Value mass = 0;
    for (const auto& part : t.parts)
        mass += part.size();
    Value l0w = p.l0_weight.numerator(omega) / p.l0_weight.divisor;
    Value bonus = p.part_bonus.numerator(omega) / p.part_bonus.divisor;
    return mass + l0w * t.l0.size() + bonus * t.length();
}

VertexSet transversal_clique(const Graph& g, const Template& t, std::optional<int> omega)
{
    VertexSet chosen(g.n());
    std::vector<int> picked;
    for (int i = 0; i < t.length(); ++i) {
        int pick = -1;
        for (int v : t.parts[i]) {
            bool ok = true;
            for (int u : picked)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) {
                pick = v;
                break;
            }
        }
        if (pick < 0)
            throw StructuralViolation("transversal_clique: construction failed in part "
                                          + std::to_string(i),
                                      -1, i);
        picked.push_back(pick);
        chosen.add(pick);
    }
    if (omega && t.length() + t.l0.size() > *omega)
        throw StructuralViolation("transversal_clique: k + |L0| exceeds omega");
    return chosen;
}

namespace {

void trim_to(VertexSet& s, long long cap)
{
    if (s.size() <= cap)
        return;
    VertexSet out(s.universe_size());
    long long taken = 0;
    for (int v : s) {
        out.add(v);
        if (++taken == cap)
            break;
    }
    s = out;
}

struct MoveScan {
    const Graph& g;
    const Template& t;
    const ThresholdProfile& p;
    int omega;
    const VertexSet& universe;
    Value base;

    std::optional<Template> accept(Template cand) const
    {
        if (!validate_template(g, cand, p, omega))
            return std::nullopt;
        if (template_value(cand, p, omega) > base)
            return cand;
        return std::nullopt;
    }

    // absorb the j smallest parts into L0 through a transversal of them
    std::optional<Template> absorb() const
    {
        int k = t.length();
        if (k == 0)
            return std::nullopt;
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return t.parts[a].size() < t.parts[b].size();
        });
        for (int j = 1; j <= k; ++j) {
            std::vector<char> absorbed(k, 0);
            for (int a = 0; a < j; ++a)
                absorbed[idx[a]] = 1;

            VertexSet x(g.n());
            std::vector<int> picked;
            bool feasible = true;
            for (int i = 0; i < k && feasible; ++i) {
                if (!absorbed[i])
                    continue;
                int pick = -1;
                for (int v : t.parts[i]) {
                    bool ok = true;
                    for (int u : picked)
                        if (!g.adjacent(u, v)) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        pick = v;
                        break;
                    }
                }
                if (pick < 0)
                    feasible = false;
                else {
                    picked.push_back(pick);
                    x.add(pick);
                }
            }
            if (!feasible)
                continue;

            Template cand;
            cand.l0 = t.l0;
            cand.l0.union_with(x);
            for (int i = 0; i < k; ++i) {
                if (absorbed[i])
                    continue;
                VertexSet trimmed = t.parts[i];
                for (int u : picked)
                    trimmed.intersect_with(g.neighbours(u));
                cand.parts.push_back(std::move(trimmed));
            }
            if (auto r = accept(std::move(cand)))
                return r;
        }
        return std::nullopt;
    }

    // move one part vertex into L0, trimming every part to its neighbours
    std::optional<Template> promote() const
    {
        for (int i = 0; i < t.length(); ++i)
            for (int v : t.parts[i]) {
                Template cand;
                cand.l0 = t.l0;
                cand.l0.add(v);
                bool sizes_ok = true;
                for (int j = 0; j < t.length(); ++j) {
                    VertexSet trimmed = t.parts[j];
                    trimmed.intersect_with(g.neighbours(v));
                    if (p.part_lower.count_less(trimmed.size(), omega)) {
                        sizes_ok = false;
                        break;
                    }
                    cand.parts.push_back(std::move(trimmed));
                }
                if (!sizes_ok)
                    continue;
                if (auto r = accept(std::move(cand)))
                    return r;
            }
        return std::nullopt;
    }

    // split a part around a pivot's non-neighbourhood
    std::optional<Template> split() const
    {
        for (int i = 0; i < t.length(); ++i) {
            for (int v : t.parts[i]) {
                VertexSet a = non_neighbours_in(g, v, t.parts[i]);
                a.add(v);
                VertexSet b = t.parts[i];
                b.setminus_with(a);

                VertexSet b2(g.n());
                for (int u : b)
                    if (p.cross_cap.count_at_most(a.difference_size(g.neighbours(u)), omega))
                        b2.add(u);
                VertexSet a2(g.n());
                for (int u : a)
                    if (p.cross_cap.count_at_most(b2.difference_size(g.neighbours(u)), omega))
                        a2.add(u);

                if (p.part_lower.count_less(a2.size(), omega)
                    || p.part_lower.count_less(b2.size(), omega))
                    continue;

                Template cand;
                cand.l0 = t.l0;
                for (int j = 0; j < t.length(); ++j) {
                    if (j == i) {
                        cand.parts.push_back(a2);
                        cand.parts.push_back(b2);
                    } else {
                        cand.parts.push_back(t.parts[j]);
                    }
                }
                if (auto r = accept(std::move(cand)))
                    return r;
            }
        }
        return std::nullopt;
    }

    // append an external near-joined set as a new part, clearing L0
    std::optional<Template> append_external() const
    {
        if (t.length() == 0)
            return std::nullopt;
        VertexSet outside = universe;
        outside.setminus_with(t.vertex_set(g.n()));

        VertexSet m(g.n());
        for (int v : outside) {
            bool ok = true;
            for (const auto& part : t.parts)
                if (!p.z_cap.count_at_most(part.difference_size(g.neighbours(v)), omega)) {
                    ok = false;
                    break;
                }
            if (ok)
                m.add(v);
        }
        trim_to(m, p.part_upper.floor_value(omega));
        if (p.part_lower.count_less(m.size(), omega))
            return std::nullopt;

        Template cand;
        cand.l0 = VertexSet(g.n());
        for (const auto& part : t.parts) {
            VertexSet trimmed(g.n());
            for (int u : part)
                if (p.cross_cap.count_at_most(m.difference_size(g.neighbours(u)), omega))
                    trimmed.add(u);
            cand.parts.push_back(std::move(trimmed));
        }
        cand.parts.push_back(m);
        return accept(std::move(cand));
    }
};

} // namespace

std::optional<Template> improve_template(const Graph& g, const Template& t,
                                         const ThresholdProfile& p, int omega)
{
    VertexSet all = g.all_vertices();
    return improve_template_in(g, t, p, omega, all);
}

std::optional<Template> improve_template_in(const Graph& g, const Template& t,
                                            const ThresholdProfile& p, int omega,
                                            const VertexSet& universe)
{
    MoveScan scan{g, t, p, omega, universe, template_value(t, p, omega)};
    if (auto r = scan.absorb())
        return r;
    if (auto r = scan.promote())
        return r;
    if (auto r = scan.split())
        return r;
    if (auto r = scan.append_external())
        return r;
    return std::nullopt;
}

Template improve_to_fixpoint(const Graph& g, Template t, const ThresholdProfile& p, int omega,
                             const VertexSet& universe, int* steps_out)
{
    long long cap = g.n()
                    + static_cast<long long>(omega)
                          * (p.l0_weight.floor_value(omega) + p.part_bonus.floor_value(omega))
                    + 2;
    long long steps = 0;
    while (auto better = improve_template_in(g, t, p, omega, universe)) {
        t = std::move(*better);
        if (++steps > cap)
            throw InternalInvariantError("improve_to_fixpoint: exceeded the value-bound step cap");
    }
    if (steps_out)
        *steps_out = static_cast<int>(std::min<long long>(steps, 1 << 30));
    return t;
}

long long small_part_bound(const ThresholdProfile& p, int omega)
{
    return p.l0_weight.floor_value(omega) - p.part_bonus.floor_value(omega)
           - static_cast<long long>(omega - 1) * p.cross_cap.floor_value(omega);
}

long long own_nonnbr_bound(const ThresholdProfile& p, int omega)
{
    return p.l0_weight.floor_value(omega) - 1
           - static_cast<long long>(omega - 1) * p.cross_cap.floor_value(omega);
}

namespace {

// complete template enumeration for small universes: assign each universe
// vertex to out / L0 / an existing part / a new part. The caps only tighten
// as sets grow, so violated states prune soundly; new parts open in vertex
// order, which kills part-permutation duplicates.
struct ExhaustiveSearch {
    const Graph& g;
    const ThresholdProfile& p;
    int omega;
    std::vector<int> verts;
    long long budget;

    long long nodes = 0;
    bool complete = true;
    int min_length = 0;
    std::optional<Template> best;
    Value best_value = 0;

    VertexSet l0;
    std::vector<std::vector<int>> parts;
    long long part_lower, part_upper, l0w, bonus;

    ExhaustiveSearch(const Graph& g, const ThresholdProfile& p, int omega,
                     const VertexSet& universe, long long budget)
        : g(g), p(p), omega(omega), verts(universe.to_vector()), budget(budget), l0(g.n())
    {
        part_lower = p.part_lower.floor_value(omega);
        part_upper = p.part_upper.floor_value(omega);
        l0w = p.l0_weight.floor_value(omega);
        bonus = p.part_bonus.floor_value(omega);
    }

    long long nonnbrs_in(int v, const std::vector<int>& part) const
    {
        long long nn = 0;
        for (int u : part)
            if (u != v && !g.adjacent(v, u))
                ++nn;
        return nn;
    }

    // v into part j: v's cap towards the other parts, and every other part
    // member's cap towards part j + v
    bool placement_ok(int v, size_t j) const
    {
        for (size_t q = 0; q < parts.size(); ++q) {
            if (q == j)
                continue;
            if (!p.cross_cap.count_at_most(nonnbrs_in(v, parts[q]), omega))
                return false;
            for (int u : parts[q])
                if (!g.adjacent(u, v)
                    && !p.cross_cap.count_at_most(nonnbrs_in(u, parts[j]) + 1, omega))
                    return false;
        }
        return true;
    }

    void leaf()
    {
        if (static_cast<int>(parts.size()) < min_length)
            return;
        for (const auto& part : parts)
            if (static_cast<long long>(part.size()) < part_lower)
                return;
        Value mass = 0;
        for (const auto& part : parts)
            mass += static_cast<Value>(part.size());
        Value v = mass + static_cast<Value>(l0w) * l0.size()
                  + static_cast<Value>(bonus) * static_cast<Value>(parts.size());
        if (best && v <= best_value)
            return;
        Template t;
        t.l0 = l0;
        for (const auto& part : parts) {
            VertexSet ps(g.n());
            for (int u : part)
                ps.add(u);
            t.parts.push_back(std::move(ps));
        }
        if (!validate_template(g, t, p, omega))
            return;
        best = std::move(t);
        best_value = v;
    }

    void rec(size_t at)
    {
        if (!complete)
            return;
        if (++nodes > budget) {
            complete = false;
            return;
        }
        long long remaining = static_cast<long long>(verts.size() - at);

        long long deficit = 0;
        for (const auto& part : parts)
            deficit += std::max(0ll, part_lower - static_cast<long long>(part.size()));
        if (deficit > remaining)
            return;

        if (best) {
            Value mass = 0;
            for (const auto& part : parts)
                mass += static_cast<Value>(part.size());
            Value ub = mass + static_cast<Value>(remaining)
                       + static_cast<Value>(l0w) * (static_cast<Value>(l0.size()) + remaining)
                       + static_cast<Value>(bonus)
                             * static_cast<Value>(parts.size() + remaining);
            if (ub <= best_value)
                return;
        }

        if (at == verts.size()) {
            leaf();
            return;
        }
        int v = verts[at];

        rec(at + 1); // leave v out
        if (!complete)
            return;

        bool joined_l0 = true;
        for (int u : l0)
            if (!g.adjacent(u, v)) {
                joined_l0 = false;
                break;
            }

        if (joined_l0) {
            bool joined_parts = true;
            for (const auto& part : parts) {
                for (int u : part)
                    if (!g.adjacent(u, v)) {
                        joined_parts = false;
                        break;
                    }
                if (!joined_parts)
                    break;
            }
            if (joined_parts) {
                l0.add(v);
                rec(at + 1);
                l0.remove(v);
                if (!complete)
                    return;
            }
        }

        if (!joined_l0)
            return; // no part placement possible either

        for (size_t j = 0; j < parts.size(); ++j) {
            if (static_cast<long long>(parts[j].size()) >= part_upper)
                continue;
            if (!placement_ok(v, j))
                continue;
            parts[j].push_back(v);
            rec(at + 1);
            parts[j].pop_back();
            if (!complete)
                return;
        }

        parts.push_back({v});
        if (placement_ok(v, parts.size() - 1))
            rec(at + 1);
        parts.pop_back();
    }
};

} // namespace

TemplateSearchResult find_max_template(const Graph& g, const VertexSet& universe,
                                       const ThresholdProfile& p, int omega,
                                       int exhaustive_limit, int min_length)
{
    TemplateSearchResult res;

    auto consider = [&](const Template& t) {
        if (t.length() < min_length)
            return;
        if (!validate_template(g, t, p, omega))
            return;
        Value v = template_value(t, p, omega);
        if (!res.best || v > res.value) {
            res.best = t;
            res.value = v;
        }
    };

    long long t_low_ll = std::max(1ll, p.part_lower.floor_value(omega));
    if (2 * t_low_ll <= universe.size()) {
        int t_low = static_cast<int>(std::min<long long>(t_low_ll, g.n()));
        long long upper = p.part_upper.floor_value(omega);
        VertexSet remaining = universe;
        for (int round = 0; round < 8; ++round) {
            auto seed = find_biclique_in(g, remaining, t_low);
            if (!seed)
                break;
            VertexSet b = universe;
            for (int x : seed->first)
                b.intersect_with(g.neighbours(x));
            trim_to(b, upper);
            VertexSet a = universe;
            a.setminus_with(b);
            for (int y : b)
                a.intersect_with(g.neighbours(y));
            trim_to(a, upper);

            Template cand;
            cand.l0 = VertexSet(g.n());
            cand.parts = {a, b};
            if (validate_template(g, cand, p, omega))
                consider(improve_to_fixpoint(g, cand, p, omega, universe));

            VertexSet used = a;
            used.union_with(b);
            used.union_with(seed->first);
            used.union_with(seed->second);
            remaining.setminus_with(used);
        }
    }

    if (universe.size() <= exhaustive_limit) {
        ExhaustiveSearch ex(g, p, omega, universe, 50'000'000);
        ex.min_length = min_length;
        if (res.best) {
            ex.best = res.best;
            ex.best_value = res.value;
        }
        ex.rec(0);
        res.nodes = ex.nodes;
        res.exhaustive = ex.complete;
        if (ex.best)
            consider(*ex.best);
    }

    if (res.best) {
        Value min_v = p.min_value.numerator(omega) / p.min_value.divisor;
        if (res.value < min_v)
            res.best = std::nullopt;
    }
    return res;
}

} // namespace chibound
