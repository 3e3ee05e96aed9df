#include "chibound/pipeline.hpp"

#include "chibound/errors.hpp"
#include "chibound/oracles.hpp"

#include <algorithm>

namespace chibound {

ZYSets z_y_sets(const Graph& g, const Template& t, const VertexSet& a, const ThresholdProfile& p,
                int omega)
{
    VertexSet vt = t.vertex_set(g.n());
    if (!vt.is_subset_of(a))
        throw std::invalid_argument("z_y_sets: template not inside the universe");

    ZYSets out{VertexSet(g.n()), VertexSet(g.n()), VertexSet(g.n())};
    out.z = t.l0;

    VertexSet rest = a;
    rest.setminus_with(vt);
    VertexSet mass = t.part_union(g.n());
    for (int v : rest) {
        if (g.neighbours(v).intersects(mass))
            out.n.add(v);
        bool in_z = true;
        for (const auto& part : t.parts)
            if (!p.z_cap.count_at_most(part.difference_size(g.neighbours(v)), omega)) {
                in_z = false;
                break;
            }
        if (in_z)
            out.z.add(v);
    }

    out.y = vt;
    out.y.union_with(out.n);
    out.y.setminus_with(out.z);
    return out;
}

ForwardAudit audit_forward_degrees(const Graph& g, const PeelTrace& trace,
                                   const ThresholdProfile& p, int omega)
{
    ForwardAudit audit;
    VertexSet remaining = g.all_vertices();
    for (size_t i = 0; i < trace.steps.size(); ++i) {
        remaining.setminus_with(trace.steps[i].y);
        for (int v : trace.steps[i].y) {
            int fwd = g.neighbours(v).intersection_size(remaining);
            audit.max_degree = std::max(audit.max_degree, fwd);
            if (!p.out_nbr_cap.count_at_most(fwd, omega)) {
                audit.pass = false;
                audit.violations.emplace_back(v, static_cast<int>(i));
            }
        }
    }
    return audit;
}

namespace {

DegenColouring remap_colouring(const DegenColouring& c, const std::vector<int>& to_parent, int n)
{
    DegenColouring out;
    out.k = c.k;
    out.d = c.d;
    out.parts.reserve(c.k);
    out.orders.reserve(c.k);
    for (int j = 0; j < c.k; ++j) {
        VertexSet part(n);
        for (int v : c.parts[j])
            part.add(to_parent[v]);
        out.parts.push_back(std::move(part));
        std::vector<int> order;
        order.reserve(c.orders[j].size());
        for (int v : c.orders[j])
            order.push_back(to_parent[v]);
        out.orders.push_back(std::move(order));
    }
    return out;
}

struct PipelineRun {
    const ThresholdProfile& p;
    const ColourOptions& opt;

    ColourResult colour_core(const Graph& g, int depth, int depth_cap)
    {
        if (depth > depth_cap)
            throw InternalInvariantError("colour_graph: recursion deeper than omega");

        ColourResult res;
        PeelTrace& trace = res.trace;
        int omega = clique_number(g).size;
        trace.omega = omega;
        if (omega >= 2)
            validate_profile(p, omega);

        if (omega <= p.base_omega || g.n() == 0) {
            trace.residual = g.all_vertices();
            trace.residual_colouring = degeneracy_colouring(g, trace.residual);
            trace.final = trace.residual_colouring;
            res.colouring = trace.final;
            if (auto v = verify_kd(g, res.colouring); !v)
                throw InternalInvariantError("colour_graph: base colouring failed verify: "
                                             + v.reason);
            return res;
        }

        VertexSet current = g.all_vertices();
        while (true) {
            auto search = find_max_template(g, current, p, omega, opt.exhaustive_template_limit,
                                            /*min_length=*/1);
            if (!search.best)
                break;
            const Template& tmpl = *search.best;
            ZYSets zy = z_y_sets(g, tmpl, current, p, omega);
            if (zy.y.empty()) {
                trace.flags.push_back("degenerate-template");
                break;
            }

            PeelStep step;
            step.tmpl = tmpl;
            step.value = static_cast<long long>(search.value);
            step.y = zy.y;
            step.z = zy.z;
            step.nbhd = zy.n;
            colour_layer(g, step, current, omega, depth, depth_cap);
            current.setminus_with(zy.y);
            trace.steps.push_back(std::move(step));
            if (current.empty())
                break;
        }

        trace.residual = current;
        trace.residual_colouring = degeneracy_colouring(g, current);

        assemble(g, trace, omega);
        res.colouring = trace.final;
        if (auto v = verify_kd(g, res.colouring); !v)
            throw InternalInvariantError("colour_graph: final colouring failed verify: "
                                         + v.reason + " at vertex "
                                         + std::to_string(v.vertex));
        if (!res.colouring.covers(g.all_vertices()))
            throw InternalInvariantError("colour_graph: final colouring does not cover V(G)");
        return res;
    }

    // colour one peeled layer Y: template vertices and pendant vertices as
    // singletons, dense groups by degeneracy order, pure vertices through the
    // small/large machinery, the rest by degeneracy order
    void colour_layer(const Graph& g, PeelStep& step, const VertexSet& universe, int omega,
                      int depth, int depth_cap)
    {
        auto cls = classify_in(g, step.tmpl, p, omega, universe);
        step.classification = classification_report(g, cls, p, omega);

        auto pb = count_pendant_bound(g, cls, p, omega, /*recheck_hfree=*/false);
        if (!pb.pass)
            step.flags.push_back("pendant-bound-fail:" + std::to_string(pb.count) + ">"
                                 + pb.bound);

        VertexSet in_layer = step.y;
        VertexSet template_vertices = step.tmpl.part_union(g.n());
        template_vertices.intersect_with(in_layer);

        VertexSet pure_pile(g.n()), dense_pile(g.n()), pendant_pile(g.n()), unlabelled(g.n());
        VertexSet labelled_nbhd = step.nbhd;
        labelled_nbhd.intersect_with(in_layer);
        for (int v : labelled_nbhd) {
            auto it = cls.labels.find(v);
            if (it == cls.labels.end()) {
                unlabelled.add(v);
                continue;
            }
            const auto& lab = it->second;
            if (lab.pure_index_set)
                pure_pile.add(v);
            else if (lab.dense)
                dense_pile.add(v);
            else if (lab.pendant)
                pendant_pile.add(v);
            else
                unlabelled.add(v);
        }
        step.pure_count = pure_pile.size();
        step.dense_count = dense_pile.size();
        step.pendant_count = pendant_pile.size();
        step.unlabelled = unlabelled.size();
        if (!unlabelled.empty()) {
            step.flags.push_back("unlabelled:" + std::to_string(unlabelled.size()));
            // the trichotomy is only promised under the formula hypotheses
            if (p.kind == ProfileKind::Paper && omega >= 200)
                step.flags.push_back("trichotomy-violation");
        }

        // pure vertices outside the layer (inside Z) would break the M_I
        // machinery's covering contract; drop them from the partition copy
        for (auto& [idx, members] : cls.m_partition) {
            VertexSet outside = members;
            outside.setminus_with(pure_pile);
            if (!outside.empty()) {
                members.setminus_with(outside);
                step.flags.push_back("pure-outside-layer:" + std::to_string(outside.size()));
            }
        }
        for (auto it = cls.m_partition.begin(); it != cls.m_partition.end();)
            it = it->second.empty() ? cls.m_partition.erase(it) : std::next(it);

        std::vector<DegenColouring> piles;
        piles.push_back(singleton_colouring(template_vertices));
        if (!pendant_pile.empty())
            piles.push_back(singleton_colouring(pendant_pile));
        if (!dense_pile.empty())
            piles.push_back(colour_dense(g, cls, dense_pile, omega, step));
        if (!pure_pile.empty())
            colour_pure(g, cls, omega, depth, depth_cap, step, piles);
        if (!unlabelled.empty())
            piles.push_back(degeneracy_colouring(g, unlabelled));

        step.colouring = side_by_side(piles, g.n());
        if (auto v = verify_kd(g, step.colouring); !v)
            throw InternalInvariantError("colour_graph: layer colouring failed verify: "
                                         + v.reason);
    }

    // dense vertices grouped by their witness (j, u); each group coloured by
    // its degeneracy order, with the biclique-or-degeneracy audit per group
    DegenColouring colour_dense(const Graph& g, const ClassifiedNeighbourhood& cls,
                                const VertexSet& dense_pile, int omega, PeelStep& step)
    {
        std::map<std::pair<int, int>, VertexSet> groups;
        for (int v : dense_pile) {
            const auto& w = *cls.labels.at(v).dense;
            auto key = std::make_pair(w.part_j, w.u);
            groups.try_emplace(key, VertexSet(g.n())).first->second.add(v);
        }

        long long t_upper = p.part_upper.floor_value(omega);
        std::vector<DegenColouring> parts;
        for (auto& [key, members] : groups) {
            auto ord = degeneracy_order_in(g, members);
            DegenColouring c;
            c.k = 1;
            c.d = ord.degeneracy;
            c.parts = {members};
            c.orders = {ord.order};
            parts.push_back(std::move(c));

            // Kst audit: high degeneracy must come with a K_{t,t}
            long long threshold = 1;
            bool sat = false;
            for (int i = 0; i < p.c_const; ++i) {
                threshold *= t_upper;
                if (threshold > (1ll << 60)) {
                    sat = true;
                    break;
                }
            }
            if (!sat && ord.degeneracy >= threshold) {
                auto sub = induced_subgraph(g, members);
                auto bic = find_biclique_subgraph(sub.graph,
                                                  static_cast<int>(std::min<long long>(
                                                      t_upper, sub.graph.n())));
                step.flags.push_back(std::string("kst-audit:")
                                     + (bic ? "biclique-found" : "no-biclique") + ":u="
                                     + std::to_string(key.second));
            }
        }
        return side_by_side(parts, g.n());
    }

    void colour_pure(const Graph& g, const ClassifiedNeighbourhood& cls, int omega, int depth,
                     int depth_cap, PeelStep& step, std::vector<DegenColouring>& piles)
    {
        RecurseFn recurse = [&](const VertexSet& sub) -> DegenColouring {
            auto ind = induced_subgraph(g, sub);
            auto rec = colour_core(ind.graph, depth + 1, depth_cap);
            return remap_colouring(rec.colouring, ind.to_parent, g.n());
        };

        VertexSet small_union(g.n()), large_union_set(g.n());
        long long m = p.small_cutoff.floor_value(omega);
        for (const auto& [idx, members] : cls.m_partition) {
            if (members.size() > m)
                large_union_set.union_with(members);
            else
                small_union.union_with(members);
        }

        if (!small_union.empty()) {
            try {
                piles.push_back(small_union_colouring(g, cls, p, omega));
            } catch (const StructuralViolation& e) {
                step.flags.push_back(std::string("small-union-violation:") + e.what());
                piles.push_back(degeneracy_colouring(g, small_union));
            }
        }
        if (!large_union_set.empty()) {
            try {
                piles.push_back(large_union_colouring(g, cls, p, omega, recurse));
            } catch (const StructuralViolation& e) {
                step.flags.push_back(std::string("large-union-violation:") + e.what());
                piles.push_back(degeneracy_colouring(g, large_union_set));
            }
        }
    }

    // pad the layers to a common width, extract forward-cap violators into
    // singletons, then chain with the observed forward degree
    void assemble(const Graph& g, PeelTrace& trace, int omega)
    {
        std::vector<DegenColouring*> layer_ptrs;
        for (auto& s : trace.steps)
            layer_ptrs.push_back(&s.colouring);
        if (!trace.residual.empty())
            layer_ptrs.push_back(&trace.residual_colouring);

        if (layer_ptrs.empty()) {
            trace.final = DegenColouring{};
            trace.final.k = 1;
            trace.final.parts = {VertexSet(g.n())};
            trace.final.orders = {{}};
            return;
        }

        int width = 1, depth_d = 0;
        for (auto* c : layer_ptrs) {
            width = std::max(width, c->k);
            depth_d = std::max(depth_d, c->d);
        }
        std::vector<DegenColouring> layers;
        layers.reserve(layer_ptrs.size());
        for (auto* c : layer_ptrs) {
            auto padded = pad_to_width(*c, width, g.n());
            padded.d = depth_d;
            layers.push_back(std::move(padded));
        }

        auto forward_audit = audit_forward_degrees(g, trace, p, omega);
        trace.max_forward_degree = forward_audit.max_degree;
        if (!forward_audit.pass)
            trace.flags.push_back("forward-audit-fail:" + std::to_string(
                                      forward_audit.violations.size()));

        // extraction loop: remove over-cap vertices until the survivors obey
        // the cap, so chaining uses d' <= outNbrCap whenever the audit passes
        VertexSet extracted(g.n());
        std::vector<VertexSet> covered;
        covered.reserve(layers.size());
        for (auto& l : layers)
            covered.push_back(l.covered(g.n()));
        while (true) {
            std::vector<int> violators;
            VertexSet suffix(g.n());
            for (int i = static_cast<int>(layers.size()) - 1; i >= 0; --i) {
                if (i + 1 < static_cast<int>(layers.size()))
                    for (int v : covered[i])
                        if (!p.out_nbr_cap.count_at_most(
                                g.neighbours(v).intersection_size(suffix), omega))
                            violators.push_back(v);
                suffix.union_with(covered[i]);
            }
            if (violators.empty())
                break;
            for (int v : violators) {
                extracted.add(v);
                for (size_t i = 0; i < layers.size(); ++i) {
                    if (!covered[i].contains(v))
                        continue;
                    covered[i].remove(v);
                    for (int j = 0; j < layers[i].k; ++j)
                        if (layers[i].parts[j].contains(v)) {
                            layers[i].parts[j].remove(v);
                            auto& ord = layers[i].orders[j];
                            ord.erase(std::remove(ord.begin(), ord.end(), v), ord.end());
                            break;
                        }
                }
            }
        }
        trace.extracted = extracted.to_vector();

        int d_prime = 0;
        VertexSet suffix(g.n());
        for (int i = static_cast<int>(layers.size()) - 1; i >= 0; --i) {
            if (i + 1 < static_cast<int>(layers.size()))
                for (int v : covered[i])
                    d_prime = std::max(d_prime,
                                       g.neighbours(v).intersection_size(suffix));
            suffix.union_with(covered[i]);
        }

        DegenColouring chained = chain(g, layers, d_prime);
        if (extracted.empty()) {
            trace.final = chained;
        } else {
            std::vector<DegenColouring> both;
            both.push_back(std::move(chained));
            both.push_back(singleton_colouring(extracted));
            trace.final = side_by_side(both, g.n());
        }
    }
};

} // namespace

ColourResult colour_graph(const Graph& g, const ThresholdProfile& p, const ColourOptions& opt)
{
    if (g.n() <= opt.hfree_check_limit) {
        if (auto w = find_induced_double_star(g, p.s))
            throw NotHsFreeError("colour_graph: input contains an induced double star", *w);
    } else if (!opt.attest_hfree) {
        throw std::invalid_argument(
            "colour_graph: input exceeds the H_s check limit; pass attest_hfree to proceed");
    }

    PipelineRun run{p, opt};
    int omega_cap = clique_number(g).size + 2;
    return run.colour_core(g, 0, omega_cap);
}

nlohmann::json trace_json(const ColourResult& r)
{
    nlohmann::json j;
    j["omega"] = r.trace.omega;
    auto steps = nlohmann::json::array();
    for (const auto& s : r.trace.steps) {
        nlohmann::json js;
        js["template"] = {{"l0", s.tmpl.l0.to_vector()}, {"parts", nlohmann::json::array()}};
        for (const auto& part : s.tmpl.parts)
            js["template"]["parts"].push_back(part.to_vector());
        js["value"] = s.value;
        js["Y"] = s.y.to_vector();
        js["Z"] = s.z.to_vector();
        js["N"] = s.nbhd.to_vector();
        js["colouring"] = to_json(s.colouring);
        js["counts"] = {{"pendant", s.pendant_count},
                        {"dense", s.dense_count},
                        {"pure", s.pure_count},
                        {"unlabelled", s.unlabelled}};
        js["classification"] = s.classification;
        js["flags"] = s.flags;
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    j["residual"] = r.trace.residual.to_vector();
    j["max_forward_degree"] = r.trace.max_forward_degree;
    j["extracted"] = r.trace.extracted;
    j["flags"] = r.trace.flags;
    j["final"] = to_json(r.colouring);
    return j;
}

} // namespace chibound
