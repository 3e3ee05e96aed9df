#ifndef CHIBOUND_GRAPH_HPP
#define CHIBOUND_GRAPH_HPP

#include "chibound/vertex_set.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace chibound {

// Simple undirected graph on dense ids 0..n-1, adjacency as one bit-row per
// vertex. Immutable after construction; every operation here is pure.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // validated construction: rejects out-of-range ids and loops, dedups
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    long long m() const { return m_; }

    bool adjacent(int u, int v) const { return rows_[u].contains(v); }
    const VertexSet& neighbours(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].size(); }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    void add_edge_unchecked(int u, int v); // used by generators; keeps m_ right

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<VertexSet> rows_;
};

VertexSet neighbours_in(const Graph& g, int v, const VertexSet& x);
VertexSet non_neighbours_in(const Graph& g, int v, const VertexSet& x);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent; // new id -> original id, ascending
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

struct DegeneracyOrder {
    std::vector<int> order; // each vertex has <= degeneracy neighbours later in it
    int degeneracy = 0;
};
// min-degree removal order, ties by lowest id
DegeneracyOrder degeneracy_order(const Graph& g);
DegeneracyOrder degeneracy_order_in(const Graph& g, const VertexSet& within);

// file format: "n m" line, then m lines "u v" (0-based); '#' lines are comments
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);

} // namespace chibound

#endif
