#ifndef CHIBOUND_BOUND_AUDIT_HPP
#define CHIBOUND_BOUND_AUDIT_HPP

#include "chibound/profile.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace chibound {

struct AuditRow {
    std::string group;    // e.g. "clique-peeling"
    std::string name;
    std::string lhs, rhs; // exact decimal values
    std::string relation; // "<=", "<", ">", "=="
    bool holds = false;
    bool hypothesis = false;
};

struct AuditReport {
    int s = 0, c = 0, omega = 0, d = 0;
    std::vector<AuditRow> rows;
    bool all_hold = true;
    int min_c_all_hold = -1; // smallest c' >= c with every row holding, if <= c+8
};

// every inequality the construction chains together, evaluated in exact
// big-integer arithmetic at (s, c, omega) with d = (c+1)(s+7)+1, worst-case
// parameters (k = omega, |L0| = omega) substituted where the argument does
AuditReport bound_audit(int s, int c, int omega);
AuditReport bound_audit(const ThresholdProfile& p, int omega); // paper profiles only

nlohmann::json audit_json(const AuditReport& rep);
std::string audit_table(const AuditReport& rep); // aligned text table

} // namespace chibound

#endif
