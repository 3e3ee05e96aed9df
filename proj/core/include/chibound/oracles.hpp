#ifndef CHIBOUND_ORACLES_HPP
#define CHIBOUND_ORACLES_HPP

#include "chibound/graph.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chibound {

struct CliqueResult {
    int size = 0;
    VertexSet witness;
};

// exact maximum clique, branch and bound with a greedy-colouring bound
CliqueResult clique_number(const Graph& g);
CliqueResult clique_number_in(const Graph& g, const VertexSet& within);

// among maximum cliques of g[within], the lexicographically smallest id set
VertexSet lexmin_max_clique_in(const Graph& g, const VertexSet& within);

struct ChromaticResult {
    int chi = 0;
    std::vector<int> colouring; // proper, values 0..chi-1
};

// exact chromatic number by iterative deepening over k-colourability,
// clique lower bound, DSATUR-ordered backtracking; refuses n > size_limit
ChromaticResult chromatic_number_exact(const Graph& g, int size_limit = 18);

// a stable subset of x with exactly `size` members (lexicographically first),
// or nullopt if none exists; exhaustive
std::optional<VertexSet> find_stable_set(const Graph& g, const VertexSet& x, int size);

struct DoubleStarWitness {
    int centre_u = -1;
    int centre_x = -1;
    VertexSet leaves_u; // s leaves private to centre_u
    VertexSet leaves_x;
};

// induced double star H_s: centres adjacent, each with s private leaves, and
// the 2s+2 vertices induce no other edge
std::optional<DoubleStarWitness> find_induced_double_star(const Graph& g, int s);
bool verify_double_star_witness(const Graph& g, int s, const DoubleStarWitness& w);

// K_{t,t} as a (not necessarily induced) subgraph: disjoint sides, fully joined
std::optional<std::pair<VertexSet, VertexSet>> find_biclique_subgraph(const Graph& g, int t);
std::optional<std::pair<VertexSet, VertexSet>> find_biclique_in(const Graph& g,
                                                                const VertexSet& within, int t);

// stable set meeting a in exactly s vertices and b in exactly s vertices
std::optional<std::pair<VertexSet, VertexSet>> find_balanced_stable_set(const Graph& g,
                                                                        const VertexSet& a,
                                                                        const VertexSet& b,
                                                                        int s);

struct RamseyReport {
    bool applicable = false;   // no stable set of cardinality s
    int omega = 0;
    int n = 0;
    long long sum_bound = 0;   // omega^{s-1} + ... + omega
    bool sum_holds = true;     // n <= sum_bound, when applicable
    bool power_applicable = false; // omega > 1
    long long power_bound = 0; // omega^s
    bool power_holds = true;   // n < omega^s, when applicable
    bool pass() const { return !applicable || (sum_holds && (!power_applicable || power_holds)); }
};
RamseyReport check_ramsey_bound(const Graph& g, int s);

// precondition failure carrying the offending induced double star
struct NotHsFreeError : std::invalid_argument {
    NotHsFreeError(const std::string& what, DoubleStarWitness w)
        : std::invalid_argument(what), witness(std::move(w)) {}
    DoubleStarWitness witness;
};

struct KstReport {
    enum class Branch { Biclique, Degeneracy, Neither };
    Branch branch = Branch::Neither;
    int degeneracy = 0;
    long long threshold = 0; // t^c, saturated
    std::optional<std::pair<VertexSet, VertexSet>> biclique;
    bool holds() const { return branch != Branch::Neither; }
};

// falsification harness for the biclique-or-degeneracy dichotomy at (t, c);
// verifies the H_s-free precondition unless the caller already has
KstReport check_kst_dichotomy(const Graph& g, int s, int t, int c, bool verify_hfree = true);

} // namespace chibound

#endif
