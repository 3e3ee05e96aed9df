#ifndef CHIBOUND_HARNESS_HPP
#define CHIBOUND_HARNESS_HPP

#include "chibound/graph.hpp"
#include "chibound/profile.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chibound {

// deterministic across platforms: mt19937_64 raw draws only, explicit
// rejection sampling and threshold tests instead of std distributions
uint64_t splitmix64(uint64_t x);

struct GeneratorSpec {
    std::string kind; // "gnp" | "multipartite-blowup" | "hfree-rejection"
    int n = 0;
    double p = 0.0;
    std::vector<int> parts; // blowup
    int s = 1;              // rejection
    int max_tries = 1000;   // rejection
};

struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

Graph generate(const GeneratorSpec& spec, uint64_t seed);

struct BenchConfig {
    uint64_t seed = 1;
    std::string profile = "DESK1";
    int exact_chi_limit = 18;
    bool record_runtime = true;
    bool trace = false;
    int jobs = 0; // 0 = hardware concurrency
    std::vector<GeneratorSpec> instances;
    std::map<std::string, ThresholdProfile> extra_profiles;
};

struct ReportRow {
    int index = 0;
    int n = 0;
    long long m = 0;
    int s = 0;
    std::string profile;
    int omega = 0;
    std::optional<int> chi_exact;
    std::optional<int> k, d, colours;
    long long ms = 0;
    std::vector<std::string> flags;
};

struct ExperimentReport {
    BenchConfig config;
    std::vector<ReportRow> rows;
    std::vector<nlohmann::json> traces; // aligned with rows when config.trace
};

ExperimentReport run_experiment(const BenchConfig& config);

// frozen v1 column order: n,m,s,profile,omega,chi_exact,k,d,colours,ms,flags
void write_csv(const ExperimentReport& rep, std::ostream& out);
nlohmann::json report_json(const ExperimentReport& rep);

BenchConfig config_from_json(const nlohmann::json& j);
GeneratorSpec generator_from_json(const nlohmann::json& j);

} // namespace chibound

#endif
