#ifndef CHIBOUND_CLASSIFY_HPP
#define CHIBOUND_CLASSIFY_HPP

#include "chibound/degen.hpp"
#include "chibound/graph.hpp"
#include "chibound/profile.hpp"
#include "chibound/s_template.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chibound {

struct PendantWitness {
    int part_i = -1; // stable set's part
    int part_j = -1; // u's part
    int u = -1;
    VertexSet stable_set; // s+1 vertices of part_i, all adjacent to u
};

struct DenseWitness {
    int part_j = -1;
    int u = -1;
};

// labels are sets: the trichotomy only holds under the formula-profile
// hypotheses, so overlaps and unlabelled vertices are recorded as data
struct VertexLabels {
    std::optional<PendantWitness> pendant;
    std::optional<DenseWitness> dense;
    std::optional<std::vector<int>> pure_index_set; // I_v, ascending part indices
    bool any() const { return pendant || dense || pure_index_set; }
};

struct ClassifiedNeighbourhood {
    Template tmpl;
    VertexSet universe;
    VertexSet nbhd; // N(L) within the universe
    int omega = 0;
    std::map<int, VertexLabels> labels;
    std::map<std::vector<int>, VertexSet> m_partition; // I -> M_I over pure vertices
};

ClassifiedNeighbourhood classify(const Graph& g, const Template& t, const ThresholdProfile& p,
                                 int omega);
ClassifiedNeighbourhood classify_in(const Graph& g, const Template& t, const ThresholdProfile& p,
                                    int omega, const VertexSet& universe);

struct PendantBoundReport {
    long long count = 0;
    std::string bound; // decimal; paper bound or the profile-scaled analogue
    bool pass = true;
};

// pendant-count bound; verifies H_s-freeness unless the caller already has
PendantBoundReport count_pendant_bound(const Graph& g, const ClassifiedNeighbourhood& cn,
                                       const ThresholdProfile& p, int omega,
                                       bool recheck_hfree = true);

// no stable set meeting both sides in exactly s vertices
bool is_s_crowded(const Graph& g, const VertexSet& a, const VertexSet& b, int s);

struct LargeSetPairRow {
    std::vector<int> set_i, set_j;
    std::string branch; // "containment-ij" / "containment-ji" / "union-crowded" / "none"
    bool holds = false;
};

struct LargeSetsReport {
    long long cutoff_m = 0;
    std::vector<std::vector<int>> large_sets;
    bool count_ok = true; // at most k-1 of them
    std::vector<LargeSetPairRow> pairs;
};

LargeSetsReport large_sets_structure(const Graph& g, const ClassifiedNeighbourhood& cn,
                                     const ThresholdProfile& p, int omega);

// degenerate colouring of the union of the m-small M_I: per missing index j a
// class V_j, oriented from larger |I| to smaller (ties toward the higher id);
// throws StructuralViolation naming (u, j) if the outdegree bound m+omega^{s+1}
// fails (a desk-scale signal that the supporting lemma's hypotheses failed)
DegenColouring small_union_colouring(const Graph& g, const ClassifiedNeighbourhood& cn,
                                     const ThresholdProfile& p, int omega);

using RecurseFn = std::function<DegenColouring(const VertexSet&)>;

// clique-peeling colouring of the union of the m-large M_I; recurse must
// return a verified colouring for any subset with strictly smaller clique
// number (checked here via the oracle before each call)
DegenColouring large_union_colouring(const Graph& g, const ClassifiedNeighbourhood& cn,
                                     const ThresholdProfile& p, int omega,
                                     const RecurseFn& recurse);

nlohmann::json classification_report(const Graph& g, const ClassifiedNeighbourhood& cn,
                                     const ThresholdProfile& p, int omega);

} // namespace chibound

#endif
