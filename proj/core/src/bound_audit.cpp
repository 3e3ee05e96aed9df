#include "chibound/bound_audit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace chibound {

namespace {

using big = boost::multiprecision::cpp_int;
using rat = boost::multiprecision::cpp_rational;

std::string rat_str(const rat& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

struct RowBuilder {
    std::vector<AuditRow>& rows;

    void add(const std::string& group, const std::string& name, const rat& lhs,
             const std::string& rel, const rat& rhs, bool hypothesis = false)
    {
        bool holds = false;
        if (rel == "<=")
            holds = lhs <= rhs;
        else if (rel == "<")
            holds = lhs < rhs;
        else if (rel == ">=")
            holds = lhs >= rhs;
        else if (rel == ">")
            holds = lhs > rhs;
        else if (rel == "==")
            holds = lhs == rhs;
        rows.push_back({group, name, rat_str(lhs), rat_str(rhs), rel, holds, hypothesis});
    }
};

std::vector<AuditRow> build_rows(int s, int c, int omega)
{
    std::vector<AuditRow> rows;
    RowBuilder rb{rows};
    const int d = (c + 1) * (s + 7) + 1;

    big W = omega;
    auto P = [&](int e) { return rat(boost::multiprecision::pow(W, e)); };
    rat w = omega;

    rb.add("hypothesis", "omega >= 200", w, ">=", 200, true);
    rb.add("hypothesis", "omega^2 > s+1", w * w, ">", s + 1, true);
    rb.add("hypothesis", "omega^3 > omega + s/7", w * w * w, ">", w + rat(s, 7), true);

    rb.add("transversal", "transversal slack: omega^{s+4} < omega^{s+5}", P(s + 4), "<", P(s + 5));

    rb.add("absorb-small-parts", "k=0 value cap: 7w^{s+6} < 28w^{s+6}", 7 * P(s + 6), "<", 28 * P(s + 6));
    rb.add("absorb-small-parts", "k=1 value cap", 14 * P(s + 6) + 7 * P(s + 5) * (w - 1) + P(s + 5), "<=",
           21 * P(s + 6));
    rb.add("absorb-small-parts", "21w^{s+6} < 28w^{s+6}", 21 * P(s + 6), "<", 28 * P(s + 6));
    rb.add("absorb-small-parts", "trim keeps parts: 5w^{s+5} - w^{s+4} >= w^{s+5}", 5 * P(s + 5) - P(s + 4),
           ">=", P(s + 5));
    rb.add("absorb-small-parts", "h*w^{s+4} <= w^{s+5} at h = omega", w * P(s + 4), "<=", P(s + 5));
    rb.add("absorb-small-parts", "(w^{s+5}+1) > w^{s+5} forces h = k", P(s + 5) + 1, ">", P(s + 5));

    rb.add("own-part-nonnbrs", "trim keeps parts: 5w^{s+5} - w^{s+3} >= w^{s+5}", 5 * P(s + 5) - P(s + 3),
           ">=", P(s + 5));
    rb.add("own-part-nonnbrs", "own-part non-nbrs: 7w^{s+5}-1-(w-1)w^{s+3} >= 4w^{s+5}",
           7 * P(s + 5) - 1 - (w - 1) * P(s + 3), ">=", 4 * P(s + 5));

    rb.add("linked-split", "(1) 2w^{s+5} - w^{s+3} >= w^{s+5}", 2 * P(s + 5) - P(s + 3), ">=", P(s + 5));
    rb.add("linked-split", "(1) nonedge mass", P(s + 5) * 14 * P(s + 1), ">=", 14 * P(2 * s + 6));
    rb.add("linked-split", "(1) pigeonhole to omega^s", 14 * P(2 * s + 6), ">=", P(s) * 14 * P(s + 6));
    rb.add("linked-split", "(2) |A|/w^3 <= 14w^{s+3}", 14 * P(s + 6) / P(3), "<=", 14 * P(s + 3));
    rb.add("linked-split", "(2) 14w^{s+3} < w^{s+5}", 14 * P(s + 3), "<", P(s + 5));
    rb.add("linked-split", "(2) 2w^{s+5} - 14w^{s+3} >= w^{s+5}", 2 * P(s + 5) - 14 * P(s + 3), ">=",
           P(s + 5));
    rb.add("linked-split", "(2) contradiction: w^{s+5} > 15w^{s+3}", P(s + 5), ">", 15 * P(s + 3));
    rb.add("linked-split", "final: 3w^{s+5} - w^{s+3} >= w^s", 3 * P(s + 5) - P(s + 3), ">=", P(s));

    rb.add("external-dense-set", "nonedge count identity", 14 * P(s + 6) * (P(s + 2) / 4), "==",
           7 * P(2 * s + 8) / 2);
    rb.add("external-dense-set", "heavy-vertex count identity", (7 * P(2 * s + 8) / 2) / P(s + 3), "==",
           7 * P(s + 5) / 2);
    rb.add("external-dense-set", "trim keeps parts: 5w^{s+5} - 7w^{s+5}/2 >= w^{s+5}",
           5 * P(s + 5) - 7 * P(s + 5) / 2, ">=", P(s + 5));
    rb.add("external-dense-set", "contradiction: 2w + 1/7 > w", 2 * w + rat(1, 7), ">", w);

    rb.add("label-trichotomy", "w^{s+2}/14 >= 14w^{s+1}", P(s + 2) / 14, ">=", 14 * P(s + 1));
    rb.add("label-trichotomy", "w^{s+5} > 2w^{s+3}", P(s + 5), ">", 2 * P(s + 3));
    rb.add("label-trichotomy", "4w^{s+5} - 2w^{s+3} >= w^s", 4 * P(s + 5) - 2 * P(s + 3), ">=", P(s));
    rb.add("label-trichotomy", "w^{s+5} > 3w^{s+3}", P(s + 5), ">", 3 * P(s + 3));

    rb.add("pendant-count", "pendant count: w^2 (14w^{s+6})^{s+2} w^s <= 14^{s+2} w^{s^2+9s+14}",
           w * w
               * rat(boost::multiprecision::pow(big(14) * boost::multiprecision::pow(W, s + 6),
                                                s + 2))
               * P(s),
           "<=", rat(boost::multiprecision::pow(big(14), s + 2)) * P(s * s + 9 * s + 14));

    rb.add("dense-colouring", "nonedge identity", (P(s + 2) / 14) * 14 * P(s + 6), "==", P(2 * s + 8));
    rb.add("dense-colouring", "heavy-vertex identity", P(2 * s + 8) / P(s + 3), "==", P(s + 5));
    rb.add("dense-colouring", "trim keeps parts: 5w^{s+5} - w^{s+3} - 2w^{s+5} >= w^{s+5}",
           5 * P(s + 5) - P(s + 3) - 2 * P(s + 5), ">=", P(s + 5));
    rb.add("dense-colouring", "w^{s+3} + 2w^{s+5} <= 7w^{s+5}", P(s + 3) + 2 * P(s + 5), "<=",
           7 * P(s + 5));
    rb.add("dense-colouring", "14w^{s+6} + 7w^{s+5}(w-1) <= 21w^{s+6}",
           14 * P(s + 6) + 7 * P(s + 5) * (w - 1), "<=", 21 * P(s + 6));
    rb.add("dense-colouring", "contradiction: 28w^{s+6} > 21w^{s+6}", 28 * P(s + 6), ">", 21 * P(s + 6));
    rb.add("dense-colouring", "dense set: k (14w^{s+6})^{c+1} <= (14w^{s+6})^{c+1} w at k = omega",
           w * rat(boost::multiprecision::pow(big(14) * boost::multiprecision::pow(W, s + 6), c + 1)),
           "<=",
           rat(boost::multiprecision::pow(big(14) * boost::multiprecision::pow(W, s + 6), c + 1))
               * w);

    rb.add("small-union", "w^{s+5} >= w^{s+3} + w^s", P(s + 5), ">=", P(s + 3) + P(s));
    rb.add("small-union", "w * w^s == w^{s+1}", w * P(s), "==", P(s + 1));
    rb.add("small-union", "2w(m + w^{s+1}) == (2s+2)w^{s+1} + 2w^{s+2} at m = (s+1)w^s",
           2 * w * ((s + 1) * P(s) + P(s + 1)), "==", (2 * s + 2) * P(s + 1) + 2 * P(s + 2));

    rb.add("large-nesting", "s w^{s+2}/7 < w^{s+5}", s * P(s + 2) / 7, "<", P(s + 5));
    rb.add("large-nesting", "w^{s+3} + s w^{s+2}/7 < w^{s+5}", P(s + 3) + s * P(s + 2) / 7, "<",
           P(s + 5));
    rb.add("large-nesting", "(m - w^s)/s >= w^s at m = (s+1)w^s", ((s + 1) * P(s) - P(s)) / s, ">=",
           P(s));

    rb.add("clique-peeling", "(w^{s+2}/7) w < w^{s+5}", (P(s + 2) / 7) * w, "<", P(s + 5));
    rb.add("clique-peeling", "|C| count: (k w^s)(n^s w^s) k <= n^s w^{2s+2} at k = omega",
           (w * P(s)) * (P(s * (s + 2)) * P(s)) * w, "<=", P(s * (s + 2)) * P(2 * s + 2));
    rb.add("clique-peeling", "peel budget: n > k w^s |Y| at k = omega, |Y| = omega-1", P(s + 2), ">",
           w * P(s) * (w - 1));
    {
        // t^d + (omega-t)^d <= (omega-1)^d + 1 over the whole range of t
        big best = 0;
        for (int t = 1; t <= omega - 1; ++t) {
            big v = boost::multiprecision::pow(big(t), d)
                    + boost::multiprecision::pow(big(omega - t), d);
            best = std::max(best, v);
        }
        rb.add("clique-peeling", "max_t t^d + (w-t)^d <= (w-1)^d + 1", rat(best), "<=",
               rat(boost::multiprecision::pow(W - 1, d) + 1));
    }
    rb.add("clique-peeling", "K1 identity: n w + n^s w^{2s+2} == w^{s+3} + w^{s^2+4s+2}",
           P(s + 2) * w + P(s * (s + 2)) * P(2 * s + 2), "==", P(s + 3) + P(s * s + 4 * s + 2));

    rb.add("layer-aggregation", "|V(L)| <= 14w^{s+7}",
           std::max(rat(14 * P(s + 7)), w + 14 * P(s + 6) * (w - 1)), "<=", 14 * P(s + 7));
    {
        rat aggregation = 14 * P(s + 7)
                          + rat(boost::multiprecision::pow(big(14), s + 2))
                                * P(s * s + 9 * s + 14)
                          + rat(boost::multiprecision::pow(
                                big(14) * boost::multiprecision::pow(W, s + 6), c + 1))
                                * w
                          + P(s * s + 4 * s + 2) + P(s + 3) + 1 + (2 * s + 2) * P(s + 1)
                          + 2 * P(s + 2);
        rb.add("layer-aggregation", "aggregation: K - (w-1)^d <= w^{(c+1)(s+7)}", aggregation, "<=",
               P((c + 1) * (s + 7)));
    }

    rb.add("forward-degree", "w + 14w^{s+6} + w^s < w^{s+7}", w + 14 * P(s + 6) + P(s), "<", P(s + 7));
    rb.add("forward-degree", "s w^{s+3} + w^s + w^{s+3} < w^{s+5}", s * P(s + 3) + P(s) + P(s + 3), "<",
           P(s + 5));
    rb.add("forward-degree", "w^{s+2}/4 >= w^s", P(s + 2) / 4, ">=", P(s));
    rb.add("forward-degree", "parts hold a quarter: 4w^{s+5} >= w^{s+2}", 4 * P(s + 5), ">=", P(s + 2));

    rb.add("universe-restriction", "template mass beats omega: 20w^{s+6} > w", 20 * P(s + 6), ">", w);

    rb.add("main-recursion", "(w-1)^d + w^{(c+1)(s+7)} <= w^d",
           rat(boost::multiprecision::pow(W - 1, d)) + P((c + 1) * (s + 7)), "<=", P(d));
    rb.add("main-recursion", "residual: (14w^{s+6})^c <= w^d",
           rat(boost::multiprecision::pow(big(14) * boost::multiprecision::pow(W, s + 6), c)),
           "<=", P(d));
    rb.add("main-recursion", "chaining identity: w^{s+7}(w-1) + w^{s+7} == w^{s+8}",
           P(s + 7) * (w - 1) + P(s + 7), "==", P(s + 8));
    rb.add("main-recursion", "induction step: (w-1)^{s+8} <= w^{s+7}(w-1)",
           rat(boost::multiprecision::pow(W - 1, s + 8)), "<=", P(s + 7) * (w - 1));

    return rows;
}

} // namespace

AuditReport bound_audit(int s, int c, int omega)
{
    if (s < 1 || c < 1 || omega < 2)
        throw std::invalid_argument("bound_audit: need s >= 1, c >= 1, omega >= 2");
    AuditReport rep;
    rep.s = s;
    rep.c = c;
    rep.omega = omega;
    rep.d = (c + 1) * (s + 7) + 1;
    rep.rows = build_rows(s, c, omega);
    rep.all_hold = std::all_of(rep.rows.begin(), rep.rows.end(),
                               [](const AuditRow& r) { return r.holds; });
    rep.min_c_all_hold = -1;
    for (int cc = c; cc <= c + 8; ++cc) {
        auto rows = build_rows(s, cc, omega);
        if (std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.holds; })) {
            rep.min_c_all_hold = cc;
            break;
        }
    }
    return rep;
}

AuditReport bound_audit(const ThresholdProfile& p, int omega)
{
    if (p.kind != ProfileKind::Paper)
        throw std::invalid_argument("bound_audit: paper profiles only");
    return bound_audit(p.s, p.c_const, omega);
}

nlohmann::json audit_json(const AuditReport& rep)
{
    nlohmann::json j;
    j["s"] = rep.s;
    j["c"] = rep.c;
    j["omega"] = rep.omega;
    j["d"] = rep.d;
    j["all_hold"] = rep.all_hold;
    j["min_c_all_hold"] = rep.min_c_all_hold;
    auto rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"group", r.group},
                        {"name", r.name},
                        {"lhs", r.lhs},
                        {"relation", r.relation},
                        {"rhs", r.rhs},
                        {"holds", r.holds},
                        {"hypothesis", r.hypothesis}});
    j["rows"] = std::move(rows);
    return j;
}

std::string audit_table(const AuditReport& rep)
{
    std::ostringstream os;
    os << "bound audit at s=" << rep.s << " c=" << rep.c << " omega=" << rep.omega
       << " d=" << rep.d << "\n";
    for (const auto& r : rep.rows) {
        std::string lhs = r.lhs.size() > 28 ? r.lhs.substr(0, 25) + "..." : r.lhs;
        std::string rhs = r.rhs.size() > 28 ? r.rhs.substr(0, 25) + "..." : r.rhs;
        os << (r.holds ? "  [ok]   " : "  [FAIL] ") << r.group << " " << r.name << ": " << lhs
           << " " << r.relation << " " << rhs << "\n";
    }
    os << (rep.all_hold ? "all inequalities hold" : "NOT all inequalities hold");
    if (!rep.all_hold && rep.min_c_all_hold > 0)
        os << " (all hold from c = " << rep.min_c_all_hold << ")";
    os << "\n";
    return os.str();
}

} // namespace chibound
