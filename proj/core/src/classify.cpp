#include "chibound/classify.hpp"

#include "chibound/errors.hpp"
#include "chibound/oracles.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace chibound {

namespace {

using big = boost::multiprecision::cpp_int;

long long pow_ll(long long base, int exp)
{
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1ll << 62) / std::max(1ll, base))
            return 1ll << 62;
        r *= base;
    }
    return r;
}

std::optional<PendantWitness> find_pendant_witness(const Graph& g, const Template& t,
                                                   const ThresholdProfile& p, int v)
{
    const int s = p.s;
    for (int i = 0; i < t.length(); ++i) {
        for (int j = 0; j < t.length(); ++j) {
            if (j == i)
                continue;
            for (int u : t.parts[j]) {
                if (g.adjacent(u, v))
                    continue;
                VertexSet c = neighbours_in(g, u, t.parts[i]);
                if (c.size() < s + 1)
                    continue;
                VertexSet c_nbr_v = c;
                c_nbr_v.intersect_with(g.neighbours(v));
                for (int w : c_nbr_v) {
                    VertexSet rest = c;
                    rest.setminus_with(g.neighbours(v));
                    rest.setminus_with(g.neighbours(w));
                    rest.remove(w);
                    if (auto stable = find_stable_set(g, rest, s)) {
                        PendantWitness pw;
                        pw.part_i = i;
                        pw.part_j = j;
                        pw.u = u;
                        pw.stable_set = *stable;
                        pw.stable_set.add(w);
                        return pw;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<DenseWitness> find_dense_witness(const Graph& g, const Template& t,
                                               const ThresholdProfile& p, int omega, int v)
{
    for (int j = 0; j < t.length(); ++j) {
        for (int u : t.parts[j]) {
            bool ok = true;
            for (int i = 0; i < t.length() && ok; ++i) {
                if (i == j)
                    continue;
                VertexSet x = neighbours_in(g, u, t.parts[i]);
                x.setminus_with(g.neighbours(v));
                if (!p.dense_cap.count_less(x.size(), omega))
                    ok = false;
            }
            if (ok)
                return DenseWitness{j, u};
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> pure_index_set(const Graph& g, const Template& t,
                                               const ThresholdProfile& p, int omega, int v)
{
    std::vector<int> iv;
    int empty_parts = 0;
    for (int i = 0; i < t.length(); ++i) {
        int nbrs = t.parts[i].intersection_size(g.neighbours(v));
        if (nbrs == 0) {
            ++empty_parts;
            continue;
        }
        long long nn = t.parts[i].difference_size(g.neighbours(v));
        if (!p.pure_cap.count_at_most(nn, omega))
            return std::nullopt;
        iv.push_back(i);
    }
    if (empty_parts < 2)
        return std::nullopt;
    return iv;
}

} // namespace

ClassifiedNeighbourhood classify(const Graph& g, const Template& t, const ThresholdProfile& p,
                                 int omega)
{
    return classify_in(g, t, p, omega, g.all_vertices());
}

ClassifiedNeighbourhood classify_in(const Graph& g, const Template& t, const ThresholdProfile& p,
                                    int omega, const VertexSet& universe)
{
    ClassifiedNeighbourhood cn;
    cn.tmpl = t;
    cn.universe = universe;
    cn.omega = omega;
    cn.nbhd = VertexSet(g.n());

    VertexSet outside = universe;
    outside.setminus_with(t.vertex_set(g.n()));
    VertexSet mass = t.part_union(g.n());
    for (int v : outside)
        if (g.neighbours(v).intersects(mass))
            cn.nbhd.add(v);

    for (int v : cn.nbhd) {
        VertexLabels lab;
        lab.pendant = find_pendant_witness(g, t, p, v);
        lab.dense = find_dense_witness(g, t, p, omega, v);
        lab.pure_index_set = pure_index_set(g, t, p, omega, v);
        if (lab.pure_index_set) {
            auto& m = cn.m_partition[*lab.pure_index_set];
            if (m.universe_size() == 0)
                m = VertexSet(g.n());
            m.add(v);
        }
        if (lab.any())
            cn.labels.emplace(v, std::move(lab));
    }
    return cn;
}

PendantBoundReport count_pendant_bound(const Graph& g, const ClassifiedNeighbourhood& cn,
                                       const ThresholdProfile& p, int omega, bool recheck_hfree)
{
    if (recheck_hfree) {
        if (auto w = find_induced_double_star(g, p.s))
            throw NotHsFreeError("count_pendant_bound: input contains an induced double star",
                                 *w);
    }
    PendantBoundReport rep;
    for (const auto& [v, lab] : cn.labels)
        if (lab.pendant)
            ++rep.count;

    big bound;
    big w = omega;
    if (p.kind == ProfileKind::Paper) {
        bound = boost::multiprecision::pow(big(14), p.s + 2)
                * boost::multiprecision::pow(w, p.s * p.s + 9 * p.s + 14);
    } else {
        big k = cn.tmpl.length();
        big upper = p.part_upper.floor_value(omega);
        bound = k * k * boost::multiprecision::pow(upper, p.s + 2) * big(p.s + 1)
                * boost::multiprecision::pow(w, p.s);
    }
    rep.bound = bound.str();
    rep.pass = big(rep.count) <= bound;
    return rep;
}

bool is_s_crowded(const Graph& g, const VertexSet& a, const VertexSet& b, int s)
{
    if (a.intersects(b))
        throw std::invalid_argument("is_s_crowded: sides not disjoint");
    return !find_balanced_stable_set(g, a, b, s).has_value();
}

LargeSetsReport large_sets_structure(const Graph& g, const ClassifiedNeighbourhood& cn,
                                     const ThresholdProfile& p, int omega)
{
    LargeSetsReport rep;
    rep.cutoff_m = p.small_cutoff.floor_value(omega);
    for (const auto& [idx, members] : cn.m_partition)
        if (members.size() > rep.cutoff_m)
            rep.large_sets.push_back(idx);

    int k = cn.tmpl.length();
    rep.count_ok = static_cast<int>(rep.large_sets.size()) <= std::max(0, k - 1);

    long long cap = pow_ll(omega, p.s);
    auto subset = [](const std::vector<int>& x, const std::vector<int>& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };

    for (size_t a = 0; a < rep.large_sets.size(); ++a)
        for (size_t b = a + 1; b < rep.large_sets.size(); ++b) {
            const auto& i_set = rep.large_sets[a];
            const auto& j_set = rep.large_sets[b];
            const VertexSet& mi = cn.m_partition.at(i_set);
            const VertexSet& mj = cn.m_partition.at(j_set);
            LargeSetPairRow row;
            row.set_i = i_set;
            row.set_j = j_set;
            if (subset(j_set, i_set) || subset(i_set, j_set)) {
                bool j_in_i = subset(j_set, i_set);
                const VertexSet& sup = j_in_i ? mi : mj;
                const VertexSet& sub = j_in_i ? mj : mi;
                row.branch = j_in_i ? "containment-ji" : "containment-ij";
                row.holds = true;
                for (int u : sup)
                    if (g.neighbours(u).intersection_size(sub) >= cap) {
                        row.holds = false;
                        break;
                    }
            } else {
                std::vector<int> uni;
                std::set_union(i_set.begin(), i_set.end(), j_set.begin(), j_set.end(),
                               std::back_inserter(uni));
                if (static_cast<int>(uni.size()) == k) {
                    row.branch = "union-crowded";
                    row.holds = is_s_crowded(g, mi, mj, p.s);
                } else {
                    row.branch = "none";
                    row.holds = false;
                }
            }
            rep.pairs.push_back(std::move(row));
        }
    return rep;
}

DegenColouring small_union_colouring(const Graph& g, const ClassifiedNeighbourhood& cn,
                                     const ThresholdProfile& p, int omega)
{
    const int k = cn.tmpl.length();
    long long m = p.small_cutoff.floor_value(omega);
    long long cap = m + pow_ll(omega, p.s + 1);

    std::vector<VertexSet> classes(k, VertexSet(g.n()));
    std::vector<int> iv_size(g.n(), -1);
    for (const auto& [idx, members] : cn.m_partition) {
        if (members.size() > m)
            continue;
        int j = -1;
        for (int cand = 0; cand < k; ++cand)
            if (!std::binary_search(idx.begin(), idx.end(), cand)) {
                j = cand;
                break;
            }
        if (j < 0)
            throw InternalInvariantError("small_union_colouring: pure set meets every part");
        classes[j].union_with(members);
        for (int v : members)
            iv_size[v] = static_cast<int>(idx.size());
    }

    DegenColouring out;
    out.k = k;
    out.d = 0;
    out.parts.assign(k, VertexSet(g.n()));
    out.orders.assign(k, {});
    for (int j = 0; j < k; ++j) {
        for (int u : classes[j]) {
            long long outdeg = 0;
            for (int v : neighbours_in(g, u, classes[j])) {
                if (iv_size[u] > iv_size[v] || (iv_size[u] == iv_size[v] && u < v))
                    ++outdeg;
            }
            if (outdeg >= cap)
                throw StructuralViolation("small_union_colouring: outdegree bound failed at vertex "
                                              + std::to_string(u) + " in class "
                                              + std::to_string(j),
                                          u, j);
        }
        auto ord = degeneracy_order_in(g, classes[j]);
        out.parts[j] = classes[j];
        out.orders[j] = ord.order;
        out.d = std::max(out.d, ord.degeneracy);
    }
    return out;
}

DegenColouring large_union_colouring(const Graph& g, const ClassifiedNeighbourhood& cn,
                                     const ThresholdProfile& p, int omega,
                                     const RecurseFn& recurse)
{
    long long m = p.small_cutoff.floor_value(omega);
    std::vector<std::vector<int>> large;
    for (const auto& [idx, members] : cn.m_partition)
        if (members.size() > m)
            large.push_back(idx);

    DegenColouring empty;
    if (large.empty())
        return empty;

    auto subset = [](const std::vector<int>& x, const std::vector<int>& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };

    // minimal large set, lexicographically first among minimal
    std::vector<int> j_min;
    for (const auto& cand : large) {
        bool minimal = true;
        for (const auto& other : large)
            if (other != cand && subset(other, cand)) {
                minimal = false;
                break;
            }
        if (minimal) {
            j_min = cand;
            break;
        }
    }

    VertexSet a_set(g.n()), b_set(g.n());
    for (const auto& idx : large) {
        if (subset(j_min, idx))
            a_set.union_with(cn.m_partition.at(idx));
        else
            b_set.union_with(cn.m_partition.at(idx));
    }

    long long n_peel = p.peel_count.floor_value(omega);
    long long cap = pow_ll(omega, p.s);

    auto recurse_guarded = [&](const VertexSet& sub, const char* what) -> DegenColouring {
        if (sub.empty())
            return DegenColouring{};
        int sub_omega = clique_number_in(g, sub).size;
        if (sub_omega >= omega)
            throw StructuralViolation(std::string("large_union_colouring: ") + what
                                      + " did not reduce the clique number");
        return recurse(sub);
    };

    std::vector<DegenColouring> pieces;
    if (a_set.size() <= n_peel * omega) {
        pieces.push_back(singleton_colouring(a_set));
        if (!b_set.empty())
            pieces.push_back(recurse_guarded(b_set, "B"));
        return side_by_side(pieces, g.n());
    }

    VertexSet work = a_set;
    VertexSet x_all(g.n());
    VertexSet x_last(g.n());
    for (long long i = 0; i < n_peel; ++i) {
        x_last = lexmin_max_clique_in(g, work);
        work.setminus_with(x_last);
        x_all.union_with(x_last);
    }
    int t_size = x_last.size();

    VertexSet c_set(g.n());
    for (int v : b_set) {
        for (const auto& idx : large) {
            if (!subset(j_min, idx))
                continue;
            VertexSet mix = cn.m_partition.at(idx);
            mix.intersect_with(x_all);
            mix.setminus_with(g.neighbours(v));
            if (mix.size() >= cap) {
                c_set.add(v);
                break;
            }
        }
    }

    VertexSet a_rest = a_set;
    a_rest.setminus_with(x_all);
    VertexSet b_rest = b_set;
    b_rest.setminus_with(c_set);

    int omega_a = a_rest.empty() ? 0 : clique_number_in(g, a_rest).size;
    if (omega_a > t_size)
        throw InternalInvariantError("large_union_colouring: peel left a clique above t");
    if (!b_rest.empty()) {
        int omega_b = clique_number_in(g, b_rest).size;
        if (omega_b > omega - t_size)
            throw StructuralViolation(
                "large_union_colouring: B minus C keeps a clique above omega - t");
    }

    pieces.push_back(singleton_colouring(x_all));
    if (!c_set.empty())
        pieces.push_back(singleton_colouring(c_set));
    if (!a_rest.empty())
        pieces.push_back(recurse_guarded(a_rest, "A minus X"));
    if (!b_rest.empty())
        pieces.push_back(recurse_guarded(b_rest, "B minus C"));
    return side_by_side(pieces, g.n());
}

nlohmann::json classification_report(const Graph& g, const ClassifiedNeighbourhood& cn,
                                     const ThresholdProfile& p, int omega)
{
    nlohmann::json j;
    j["omega"] = omega;
    j["neighbourhood"] = cn.nbhd.to_vector();

    auto verts = nlohmann::json::object();
    for (const auto& [v, lab] : cn.labels) {
        nlohmann::json lv;
        if (lab.pendant) {
            lv["pendant"] = {{"i", lab.pendant->part_i},
                             {"j", lab.pendant->part_j},
                             {"u", lab.pendant->u},
                             {"stable", lab.pendant->stable_set.to_vector()}};
        }
        if (lab.dense)
            lv["dense"] = {{"j", lab.dense->part_j}, {"u", lab.dense->u}};
        if (lab.pure_index_set)
            lv["pure"] = *lab.pure_index_set;
        verts[std::to_string(v)] = std::move(lv);
    }
    j["labels"] = std::move(verts);

    auto msizes = nlohmann::json::array();
    for (const auto& [idx, members] : cn.m_partition)
        msizes.push_back({{"I", idx}, {"size", members.size()}});
    j["m_partition"] = std::move(msizes);

    auto rep = large_sets_structure(g, cn, p, omega);
    nlohmann::json tri;
    tri["cutoff_m"] = rep.cutoff_m;
    tri["large_sets"] = rep.large_sets;
    tri["count_ok"] = rep.count_ok;
    auto pairs = nlohmann::json::array();
    for (const auto& row : rep.pairs)
        pairs.push_back({{"I", row.set_i}, {"J", row.set_j}, {"branch", row.branch},
                         {"holds", row.holds}});
    tri["pairs"] = std::move(pairs);
    j["large_sets"] = std::move(tri);

    auto unlabelled = nlohmann::json::array();
    for (int v : cn.nbhd)
        if (!cn.labels.count(v))
            unlabelled.push_back(v);
    j["unlabelled"] = std::move(unlabelled);
    return j;
}

} // namespace chibound
