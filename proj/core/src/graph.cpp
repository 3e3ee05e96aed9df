#include "chibound/graph.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace chibound {

Graph::Graph(int n) : n_(n), rows_(n, VertexSet(n))
{
    if (n < 0)
        throw std::invalid_argument("Graph: negative vertex count");
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph::build: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("Graph::build: loop edge");
        g.add_edge_unchecked(u, v);
    }
    return g;
}

void Graph::add_edge_unchecked(int u, int v)
{
    if (!rows_[u].contains(v)) {
        rows_[u].add(v);
        rows_[v].add(u);
        ++m_;
    }
}

VertexSet neighbours_in(const Graph& g, int v, const VertexSet& x)
{
    VertexSet out = g.neighbours(v);
    out.intersect_with(x);
    return out;
}

VertexSet non_neighbours_in(const Graph& g, int v, const VertexSet& x)
{
    VertexSet out = x;
    out.setminus_with(g.neighbours(v));
    if (out.contains(v))
        out.remove(v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x)
{
    if (x.universe_size() != g.n())
        throw std::invalid_argument("induced_subgraph: set universe mismatch");
    std::vector<int> map = x.to_vector();
    Graph sub(static_cast<int>(map.size()));
    for (int i = 0; i < static_cast<int>(map.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(map.size()); ++j)
            if (g.adjacent(map[i], map[j]))
                sub.add_edge_unchecked(i, j);
    return {std::move(sub), std::move(map)};
}

DegeneracyOrder degeneracy_order(const Graph& g)
{
    return degeneracy_order_in(g, g.all_vertices());
}

DegeneracyOrder degeneracy_order_in(const Graph& g, const VertexSet& within)
{
    DegeneracyOrder result;
    VertexSet remaining = within;
    std::vector<int> deg(g.n(), 0);
    for (int v : remaining)
        deg[v] = g.neighbours(v).intersection_size(remaining);

    int left = remaining.size();
    result.order.reserve(left);
    while (left > 0) {
        int best = -1, bestDeg = std::numeric_limits<int>::max();
        for (int v : remaining) {
            if (deg[v] < bestDeg) {
                bestDeg = deg[v];
                best = v;
            }
        }
        result.degeneracy = std::max(result.degeneracy, bestDeg);
        result.order.push_back(best);
        remaining.remove(best);
        for (int u : neighbours_in(g, best, remaining))
            --deg[u];
        --left;
    }
    return result;
}

Graph read_graph(std::istream& in)
{
    auto next_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#')
                continue;
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line))
        throw std::invalid_argument("read_graph: missing header line");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("read_graph: bad header, expected \"n m\"");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line))
            throw std::invalid_argument("read_graph: fewer edge lines than declared");
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v))
            throw std::invalid_argument("read_graph: bad edge line: " + line);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::build(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out)
{
    out << g.n() << ' ' << g.m() << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbours(u))
            if (v > u)
                out << u << ' ' << v << '\n';
}

} // namespace chibound
