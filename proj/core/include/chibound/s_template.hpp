#ifndef CHIBOUND_S_TEMPLATE_HPP
#define CHIBOUND_S_TEMPLATE_HPP

#include "chibound/graph.hpp"
#include "chibound/profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chibound {

// (L0, L1..Lk): L0 a clique fully joined to the parts, parts within the
// profile size window, cross-part non-neighbour counts capped.
struct Template {
    VertexSet l0;
    std::vector<VertexSet> parts;

    int length() const { return static_cast<int>(parts.size()); }
    VertexSet part_union(int n) const;
    VertexSet vertex_set(int n) const; // L0 together with the parts
};

using Value = __int128;

struct TemplateCheck {
    bool ok = true;
    std::string clause; // first violated clause
    int vertex = -1;
    int part = -1;
    explicit operator bool() const { return ok; }
};

TemplateCheck validate_template(const Graph& g, const Template& t, const ThresholdProfile& p,
                                int omega);

// |L1 u ... u Lk| + l0Weight*|L0| + partBonus*k
Value template_value(const Template& t, const ThresholdProfile& p, int omega);

// greedy transversal, lowest id first; one vertex per part, clique with L0.
// With omega supplied, additionally checks k + |L0| <= omega.
VertexSet transversal_clique(const Graph& g, const Template& t,
                             std::optional<int> omega = std::nullopt);

// one strictly-improving application of the move families, tried in order
// absorb / promote / split / append-external; nullopt means locally optimal.
// The universe overload confines the append move's candidates.
std::optional<Template> improve_template(const Graph& g, const Template& t,
                                         const ThresholdProfile& p, int omega);
std::optional<Template> improve_template_in(const Graph& g, const Template& t,
                                            const ThresholdProfile& p, int omega,
                                            const VertexSet& universe);

// iterate improve_template_in to a fixed point (step cap from the value bound)
Template improve_to_fixpoint(const Graph& g, Template t, const ThresholdProfile& p, int omega,
                             const VertexSet& universe, int* steps_out = nullptr);

struct TemplateSearchResult {
    std::optional<Template> best;
    Value value = 0;
    bool exhaustive = false; // enumeration completed within the node budget
    long long nodes = 0;
};

// biclique-seeded local search; below exhaustive_limit also a complete
// enumeration of templates inside the universe. Best result is returned only
// when its value reaches the profile's minValue and its length reaches
// min_length (the peeler passes 1: a part-less template has an empty layer).
// Not globally optimal above the exhaustive limit.
TemplateSearchResult find_max_template(const Graph& g, const VertexSet& universe,
                                       const ThresholdProfile& p, int omega,
                                       int exhaustive_limit = 14, int min_length = 0);

// profile-scaled analogues of the optimal-template consequences, obtained by
// re-running the exchange arguments with profile coefficients
long long small_part_bound(const ThresholdProfile& p, int omega);
long long own_nonnbr_bound(const ThresholdProfile& p, int omega);

} // namespace chibound

#endif
