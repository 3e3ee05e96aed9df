#include "chibound/harness.hpp"

#include "chibound/oracles.hpp"
#include "chibound/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <random>
#include <thread>

namespace chibound {

uint64_t splitmix64(uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

namespace {

// edge present iff the next raw draw is below p * 2^64
uint64_t bernoulli_threshold(double p)
{
    if (p <= 0.0)
        return 0;
    if (p >= 1.0)
        return ~0ull;
    long double t = static_cast<long double>(p) * 18446744073709551615.0L;
    return static_cast<uint64_t>(t);
}

Graph gnp(int n, double p, std::mt19937_64& rng)
{
    Graph g(n);
    uint64_t threshold = bernoulli_threshold(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold)
                g.add_edge_unchecked(u, v);
    return g;
}

} // namespace

Graph generate(const GeneratorSpec& spec, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    if (spec.kind == "gnp") {
        if (spec.n < 0 || spec.p < 0.0 || spec.p > 1.0)
            throw std::invalid_argument("generate: bad gnp parameters");
        return gnp(spec.n, spec.p, rng);
    }
    if (spec.kind == "multipartite-blowup") {
        int n = 0;
        for (int sz : spec.parts) {
            if (sz < 0)
                throw std::invalid_argument("generate: negative blowup part");
            n += sz;
        }
        Graph g(n);
        std::vector<int> cls(n);
        int at = 0, c = 0;
        for (int sz : spec.parts) {
            for (int i = 0; i < sz; ++i)
                cls[at++] = c;
            ++c;
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (cls[u] != cls[v])
                    g.add_edge_unchecked(u, v);
        return g;
    }
    if (spec.kind == "hfree-rejection") {
        if (spec.s < 1 || spec.max_tries < 1)
            throw std::invalid_argument("generate: bad rejection parameters");
        for (int attempt = 0; attempt < spec.max_tries; ++attempt) {
            Graph g = gnp(spec.n, spec.p, rng);
            if (!find_induced_double_star(g, spec.s))
                return g;
        }
        throw GenerationError("hfree-rejection exhausted " + std::to_string(spec.max_tries)
                              + " tries");
    }
    throw std::invalid_argument("generate: unknown kind " + spec.kind);
}

namespace {

std::string join_flags(const std::vector<std::string>& flags)
{
    std::string out;
    for (const auto& f : flags) {
        if (!out.empty())
            out += ';';
        out += f;
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

ReportRow run_instance(const BenchConfig& config, const ThresholdProfile& profile, int index,
                       nlohmann::json* trace_out)
{
    ReportRow row;
    row.index = index;
    row.s = profile.s;
    row.profile = profile.name;

    uint64_t instance_seed = splitmix64(config.seed + static_cast<uint64_t>(index));
    Graph g;
    try {
        g = generate(config.instances[index], instance_seed);
    } catch (const GenerationError&) {
        row.flags.push_back("generation-failed");
        return row;
    }
    row.n = g.n();
    row.m = g.m();
    row.omega = clique_number(g).size;

    auto start = std::chrono::steady_clock::now();
    try {
        auto result = colour_graph(g, profile);
        row.k = result.colouring.k;
        row.d = result.colouring.d;
        auto proper = to_proper(g, result.colouring);
        row.colours = proper.colours_used;
        for (const auto& f : result.trace.flags)
            row.flags.push_back(f);
        if (trace_out)
            *trace_out = trace_json(result);
        if (g.n() <= config.exact_chi_limit)
            row.chi_exact = chromatic_number_exact(g, config.exact_chi_limit).chi;
    } catch (const NotHsFreeError&) {
        row.flags.push_back("hfree-violation");
        return row;
    } catch (const std::exception& e) {
        row.flags.push_back(std::string("error:") + e.what());
        return row;
    }
    if (config.record_runtime) {
        auto end = std::chrono::steady_clock::now();
        row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    }
    return row;
}

} // namespace

ExperimentReport run_experiment(const BenchConfig& config)
{
    ExperimentReport rep;
    rep.config = config;
    ThresholdProfile profile = resolve_profile(config.profile, config.extra_profiles);

    const int count = static_cast<int>(config.instances.size());
    rep.rows.assign(count, ReportRow{});
    rep.traces.assign(config.trace ? count : 0, nlohmann::json{});

    int jobs = config.jobs > 0 ? config.jobs
                               : static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min(jobs, count == 0 ? 1 : count));

    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count)
                break;
            nlohmann::json* trace_out = config.trace ? &rep.traces[i] : nullptr;
            rep.rows[i] = run_instance(config, profile, i, trace_out);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return rep;
}

void write_csv(const ExperimentReport& rep, std::ostream& out)
{
    out << "n,m,s,profile,omega,chi_exact,k,d,colours,ms,flags\n";
    for (const auto& row : rep.rows) {
        out << row.n << ',' << row.m << ',' << row.s << ',' << csv_field(row.profile) << ','
            << row.omega << ',';
        if (row.chi_exact)
            out << *row.chi_exact;
        out << ',';
        if (row.k)
            out << *row.k;
        out << ',';
        if (row.d)
            out << *row.d;
        out << ',';
        if (row.colours)
            out << *row.colours;
        out << ',' << row.ms << ',' << csv_field(join_flags(row.flags)) << '\n';
    }
}

nlohmann::json report_json(const ExperimentReport& rep)
{
    nlohmann::json j;
    j["seed"] = rep.config.seed;
    j["profile"] = rep.config.profile;
    auto rows = nlohmann::json::array();
    for (const auto& row : rep.rows) {
        nlohmann::json r;
        r["index"] = row.index;
        r["n"] = row.n;
        r["m"] = row.m;
        r["s"] = row.s;
        r["profile"] = row.profile;
        r["omega"] = row.omega;
        if (row.chi_exact)
            r["chi_exact"] = *row.chi_exact;
        if (row.k)
            r["k"] = *row.k;
        if (row.d)
            r["d"] = *row.d;
        if (row.colours)
            r["colours"] = *row.colours;
        r["ms"] = row.ms;
        r["flags"] = row.flags;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    if (!rep.traces.empty())
        j["traces"] = rep.traces;
    return j;
}

GeneratorSpec generator_from_json(const nlohmann::json& j)
{
    GeneratorSpec spec;
    spec.kind = j.at("kind").get<std::string>();
    spec.n = j.value("n", 0);
    spec.p = j.value("p", 0.0);
    spec.parts = j.value("parts", std::vector<int>{});
    spec.s = j.value("s", 1);
    spec.max_tries = j.value("max_tries", 1000);
    return spec;
}

BenchConfig config_from_json(const nlohmann::json& j)
{
    BenchConfig c;
    c.seed = j.value("seed", 1ull);
    c.profile = j.value("profile", std::string("DESK1"));
    c.exact_chi_limit = j.value("exact_chi_limit", 18);
    c.record_runtime = j.value("record_runtime", true);
    c.trace = j.value("trace", false);
    c.jobs = j.value("jobs", 0);
    for (const auto& inst : j.at("instances"))
        c.instances.push_back(generator_from_json(inst));
    if (j.contains("profiles"))
        for (auto it = j["profiles"].begin(); it != j["profiles"].end(); ++it)
            c.extra_profiles.emplace(it.key(), profile_from_json(it.key(), it.value()));
    return c;
}

} // namespace chibound
