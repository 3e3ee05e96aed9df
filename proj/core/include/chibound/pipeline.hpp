#ifndef CHIBOUND_PIPELINE_HPP
#define CHIBOUND_PIPELINE_HPP

#include "chibound/classify.hpp"
#include "chibound/degen.hpp"
#include "chibound/graph.hpp"
#include "chibound/profile.hpp"
#include "chibound/s_template.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace chibound {

struct ZYSets {
    VertexSet z, n, y;
};

// Z = L0 plus the vertices of a\V(t) with at most zCap non-neighbours in every
// part; N = vertices of a\V(t) with a neighbour in the parts; Y = (V(t) u N)\Z
ZYSets z_y_sets(const Graph& g, const Template& t, const VertexSet& a, const ThresholdProfile& p,
                int omega);

struct PeelStep {
    Template tmpl;
    long long value = 0; // template value (fits long long at desk scale)
    VertexSet y, z, nbhd;
    DegenColouring colouring; // of y
    int unlabelled = 0;
    int pendant_count = 0, dense_count = 0, pure_count = 0;
    nlohmann::json classification; // labels, witnesses, M_I sizes, trichotomy
    std::vector<std::string> flags;
};

struct PeelTrace {
    int omega = 0;
    std::vector<PeelStep> steps;
    VertexSet residual;
    DegenColouring residual_colouring;
    int max_forward_degree = 0;
    std::vector<int> extracted; // forward-cap violators moved to singletons
    DegenColouring final;
    std::vector<std::string> flags;
};

struct ForwardAudit {
    bool pass = true;
    int max_degree = 0;
    std::vector<std::pair<int, int>> violations; // (vertex, step index)
};

// per step i, every vertex of Y_i against the outNbrCap towards the vertices
// remaining after step i; report-valued
ForwardAudit audit_forward_degrees(const Graph& g, const PeelTrace& trace,
                                   const ThresholdProfile& p, int omega);

struct ColourOptions {
    bool attest_hfree = false; // accept H_s-freeness unchecked above the limit
    int hfree_check_limit = 200;
    int exhaustive_template_limit = 14;
};

struct ColourResult {
    DegenColouring colouring;
    PeelTrace trace;
};

// the main algorithm: peel maximum-value templates, colour each Y layer via
// the classification machinery, recurse on strictly smaller clique number,
// chain the layers, and verify the final certificate
ColourResult colour_graph(const Graph& g, const ThresholdProfile& p,
                          const ColourOptions& opt = {});

nlohmann::json trace_json(const ColourResult& r);

} // namespace chibound

#endif
