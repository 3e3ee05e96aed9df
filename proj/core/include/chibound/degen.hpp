#ifndef CHIBOUND_DEGEN_HPP
#define CHIBOUND_DEGEN_HPP

#include "chibound/graph.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace chibound {

// Partition into k parts, each carrying an elimination order in which every
// vertex has at most d neighbours placed later within the same part. k is a
// declared capacity: parts may be empty, and a colouring need not cover V(G).
struct DegenColouring {
    int k = 0;
    int d = 0;
    std::vector<VertexSet> parts;
    std::vector<std::vector<int>> orders;

    VertexSet covered(int n) const;
    bool covers(const VertexSet& s) const;
};

struct VerifyResult {
    bool ok = true;
    std::string reason;
    int vertex = -1;
    explicit operator bool() const { return ok; }
};

VerifyResult verify_kd(const Graph& g, const DegenColouring& c);

// Chaining composition: pieces over disjoint vertex sets, common k; every
// vertex of piece i has at most d_prime neighbours in later pieces (checked).
// Result is a (k, max_d + d_prime)-colouring of the union: part j is the union
// of part j across pieces, orders concatenated piece-1 first.
DegenColouring chain(const Graph& g, const std::vector<DegenColouring>& pieces, int d_prime);

struct ProperColouring {
    std::vector<int> colour; // -1 on vertices the input does not cover
    int colours_used = 0;
};

// greedy along each part's reverse elimination order, d+1 colours per part,
// disjoint palettes across parts; at most k(d+1) colours total
ProperColouring to_proper(const Graph& g, const DegenColouring& c);

// helpers the pipeline composes colourings with
DegenColouring pad_to_width(const DegenColouring& c, int k, int n);
DegenColouring side_by_side(const std::vector<DegenColouring>& pieces, int n);
DegenColouring singleton_colouring(const VertexSet& vs);
DegenColouring degeneracy_colouring(const Graph& g, const VertexSet& within);

nlohmann::json to_json(const DegenColouring& c);
DegenColouring degen_colouring_from_json(const nlohmann::json& j, int n);

} // namespace chibound

#endif
