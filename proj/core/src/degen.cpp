#include "chibound/degen.hpp"

#include <algorithm>
#include <stdexcept>

namespace chibound {

VertexSet DegenColouring::covered(int n) const
{
    VertexSet all(n);
    for (const auto& p : parts)
        all.union_with(p);
    return all;
}

bool DegenColouring::covers(const VertexSet& s) const
{
    VertexSet c = covered(s.universe_size());
    return s.is_subset_of(c);
}

VerifyResult verify_kd(const Graph& g, const DegenColouring& c)
{
    if (c.k < 0 || c.d < 0)
        return {false, "negative k or d", -1};
    if (static_cast<int>(c.parts.size()) != c.k || c.orders.size() != c.parts.size())
        return {false, "part/order count does not match declared k", -1};

    VertexSet seen(g.n());
    for (int j = 0; j < c.k; ++j) {
        const auto& part = c.parts[j];
        const auto& order = c.orders[j];
        if (part.universe_size() != g.n())
            return {false, "part universe mismatch", -1};
        for (int v : part)
            if (seen.contains(v))
                return {false, "vertex in two parts", v};
        VertexSet in_order(g.n());
        for (int v : order) {
            if (!part.contains(v))
                return {false, "order lists a vertex outside its part", v};
            if (in_order.contains(v))
                return {false, "vertex repeated in elimination order", v};
            in_order.add(v);
        }
        if (in_order.size() != part.size()) {
            VertexSet miss = part;
            miss.setminus_with(in_order);
            return {false, "elimination order misses part vertices", miss.min()};
        }

        // certificate: each vertex has <= d neighbours later in its order
        VertexSet later = part;
        for (int v : order) {
            later.remove(v);
            if (g.neighbours(v).intersection_size(later) > c.d)
                return {false, "later-neighbour count exceeds d", v};
        }
        seen.union_with(part);
    }
    return {};
}

DegenColouring chain(const Graph& g, const std::vector<DegenColouring>& pieces, int d_prime)
{
    if (pieces.empty())
        throw std::invalid_argument("chain: no pieces");
    if (d_prime < 0)
        throw std::invalid_argument("chain: negative d'");

    int k = pieces.front().k;
    int d = 0;
    for (const auto& p : pieces) {
        if (p.k != k)
            throw std::invalid_argument("chain: k mismatch between pieces");
        d = std::max(d, p.d);
    }

    int n = g.n();
    std::vector<VertexSet> covered;
    covered.reserve(pieces.size());
    for (const auto& p : pieces)
        covered.push_back(p.covered(n));
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j)
            if (covered[i].intersects(covered[j]))
                throw std::invalid_argument("chain: pieces overlap");

    // forward cap: suffix[i] = vertices of pieces after i
    std::vector<VertexSet> suffix(pieces.size(), VertexSet(n));
    for (int i = static_cast<int>(pieces.size()) - 2; i >= 0; --i) {
        suffix[i] = suffix[i + 1];
        suffix[i].union_with(covered[i + 1]);
    }
    for (size_t i = 0; i + 1 < pieces.size(); ++i)
        for (int v : covered[i])
            if (g.neighbours(v).intersection_size(suffix[i]) > d_prime)
                throw std::invalid_argument("chain: vertex " + std::to_string(v)
                                            + " exceeds the forward-neighbour cap");

    DegenColouring out;
    out.k = k;
    out.d = d + d_prime;
    out.parts.assign(k, VertexSet(n));
    out.orders.assign(k, {});
    for (const auto& p : pieces)
        for (int j = 0; j < k; ++j) {
            out.parts[j].union_with(p.parts[j]);
            out.orders[j].insert(out.orders[j].end(), p.orders[j].begin(), p.orders[j].end());
        }
    return out;
}

ProperColouring to_proper(const Graph& g, const DegenColouring& c)
{
    if (auto v = verify_kd(g, c); !v)
        throw std::invalid_argument("to_proper: invalid certificate: " + v.reason);

    ProperColouring out;
    out.colour.assign(g.n(), -1);
    std::vector<char> taken(c.d + 1, 0);
    for (int j = 0; j < c.k; ++j) {
        int base = j * (c.d + 1);
        const auto& order = c.orders[j];
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            std::fill(taken.begin(), taken.end(), 0);
            for (int u : g.neighbours(v)) {
                int cu = out.colour[u];
                if (cu >= base && cu <= base + c.d)
                    taken[cu - base] = 1;
            }
            int slot = -1;
            for (int s = 0; s <= c.d; ++s)
                if (!taken[s]) {
                    slot = s;
                    break;
                }
            if (slot < 0)
                throw std::logic_error("to_proper: palette exhausted despite valid certificate");
            out.colour[v] = base + slot;
        }
    }
    std::vector<int> used;
    for (int cu : out.colour)
        if (cu >= 0)
            used.push_back(cu);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    out.colours_used = static_cast<int>(used.size());
    return out;
}

DegenColouring pad_to_width(const DegenColouring& c, int k, int n)
{
    if (k < c.k)
        throw std::invalid_argument("pad_to_width: cannot shrink k");
    DegenColouring out = c;
    out.k = k;
    out.parts.resize(k, VertexSet(n));
    out.orders.resize(k);
    return out;
}

DegenColouring side_by_side(const std::vector<DegenColouring>& pieces, int n)
{
    DegenColouring out;
    out.parts.clear();
    for (const auto& p : pieces) {
        out.d = std::max(out.d, p.d);
        for (int j = 0; j < p.k; ++j) {
            out.parts.push_back(p.parts[j].universe_size() == n ? p.parts[j] : VertexSet(n));
            out.orders.push_back(p.orders[j]);
        }
    }
    out.k = static_cast<int>(out.parts.size());
    return out;
}

DegenColouring singleton_colouring(const VertexSet& vs)
{
    DegenColouring out;
    out.d = 0;
    for (int v : vs) {
        VertexSet p(vs.universe_size());
        p.add(v);
        out.parts.push_back(p);
        out.orders.push_back({v});
    }
    out.k = static_cast<int>(out.parts.size());
    return out;
}

DegenColouring degeneracy_colouring(const Graph& g, const VertexSet& within)
{
    auto ord = degeneracy_order_in(g, within);
    DegenColouring out;
    out.k = 1;
    out.d = ord.degeneracy;
    out.parts = {within};
    out.orders = {ord.order};
    return out;
}

nlohmann::json to_json(const DegenColouring& c)
{
    nlohmann::json j;
    j["k"] = c.k;
    j["d"] = c.d;
    auto parts = nlohmann::json::array();
    for (const auto& p : c.parts)
        parts.push_back(p.to_vector());
    j["parts"] = std::move(parts);
    j["orders"] = c.orders;
    return j;
}

DegenColouring degen_colouring_from_json(const nlohmann::json& j, int n)
{
    DegenColouring c;
    c.k = j.at("k").get<int>();
    c.d = j.at("d").get<int>();
    for (const auto& arr : j.at("parts")) {
        VertexSet p(n);
        for (int v : arr)
            p.add(v);
        c.parts.push_back(std::move(p));
    }
    c.orders = j.at("orders").get<std::vector<std::vector<int>>>();
    return c;
}

} // namespace chibound
