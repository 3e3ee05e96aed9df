// chibound: exact oracles, certified degenerate colourings, bound audits and
// the benchmark harness for double-star-free graphs.

#include "chibound/bound_audit.hpp"
#include "chibound/errors.hpp"
#include "chibound/harness.hpp"
#include "chibound/oracles.hpp"
#include "chibound/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

using namespace chibound;
using nlohmann::json;

namespace {

int cmd_oracle(const std::string& which, const std::string& graph_path, int s, int t, int limit)
{
    Graph g = read_graph_file(graph_path);
    json out;
    if (which == "omega") {
        auto r = clique_number(g);
        out["value"] = r.size;
        out["witness"] = r.witness.to_vector();
    } else if (which == "chi") {
        auto r = chromatic_number_exact(g, limit);
        out["value"] = r.chi;
        out["witness"] = r.colouring;
    } else if (which == "hfree") {
        auto w = find_induced_double_star(g, s);
        out["value"] = !w.has_value(); // H_s-free?
        if (w) {
            out["witness"] = {{"centres", {w->centre_u, w->centre_x}},
                              {"leaves_u", w->leaves_u.to_vector()},
                              {"leaves_x", w->leaves_x.to_vector()}};
        } else {
            out["witness"] = nullptr;
        }
    } else if (which == "biclique") {
        auto b = find_biclique_subgraph(g, t);
        out["value"] = b.has_value();
        if (b)
            out["witness"] = {b->first.to_vector(), b->second.to_vector()};
        else
            out["witness"] = nullptr;
    } else {
        std::cerr << "unknown oracle: " << which << "\n";
        return 1;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_colour(const std::string& graph_path, const std::string& profile_name,
               const std::string& profiles_path, bool attest, const std::string& out_path)
{
    std::map<std::string, ThresholdProfile> extra;
    if (!profiles_path.empty())
        extra = load_profiles_file(profiles_path);
    ThresholdProfile profile = resolve_profile(profile_name, extra);
    Graph g = read_graph_file(graph_path);

    ColourOptions opt;
    opt.attest_hfree = attest;
    try {
        auto result = colour_graph(g, profile, opt);
        auto proper = to_proper(g, result.colouring);
        json out = trace_json(result);
        out["profile"] = profile.name;
        out["proper"] = {{"colours_used", proper.colours_used}, {"colour", proper.colour}};
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << out.dump(2) << "\n";
        } else {
            std::cout << out.dump(2) << "\n";
        }
        std::cerr << "coloured n=" << g.n() << " omega=" << result.trace.omega
                  << " k=" << result.colouring.k << " d=" << result.colouring.d
                  << " colours=" << proper.colours_used << "\n";
        return 0;
    } catch (const NotHsFreeError& e) {
        json out;
        out["error"] = "input contains an induced double star";
        out["witness"] = {{"centres", {e.witness.centre_u, e.witness.centre_x}},
                          {"leaves_u", e.witness.leaves_u.to_vector()},
                          {"leaves_x", e.witness.leaves_x.to_vector()}};
        std::cout << out.dump(2) << "\n";
        return 2;
    } catch (const InternalInvariantError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 3;
    }
}

int cmd_audit(int s, int c, int omega, bool as_json)
{
    auto rep = bound_audit(s, c, omega);
    if (as_json)
        std::cout << audit_json(rep).dump(2) << "\n";
    else
        std::cout << audit_table(rep);
    return rep.all_hold ? 0 : 1;
}

int cmd_bench(const std::string& config_path, const std::string& out_dir)
{
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "cannot open config: " << config_path << "\n";
        return 1;
    }
    json cj;
    in >> cj;
    BenchConfig config = config_from_json(cj);

    auto rep = run_experiment(config);

    std::filesystem::create_directories(out_dir);
    {
        std::ofstream csv(out_dir + "/report.csv");
        write_csv(rep, csv);
    }
    {
        std::ofstream js(out_dir + "/report.json");
        js << report_json(rep).dump(2) << "\n";
    }
    std::cerr << "wrote " << rep.rows.size() << " rows to " << out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"degenerate colourings of double-star-free graphs"};
    app.require_subcommand(1);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact oracles: omega, chi, hfree, biclique");
    std::string oracle_which, oracle_graph;
    int oracle_s = 1, oracle_t = 2, oracle_limit = 18;
    oracle->add_option("which", oracle_which, "omega|chi|hfree|biclique")->required();
    oracle->add_option("--graph", oracle_graph, "graph file")->required();
    oracle->add_option("--s", oracle_s, "double-star parameter (hfree)");
    oracle->add_option("--t", oracle_t, "biclique side size");
    oracle->add_option("--limit", oracle_limit, "exact chi size limit");

    // colour
    auto* colour = app.add_subcommand("colour", "run the colouring pipeline");
    std::string colour_graph_path, colour_profile = "DESK1", colour_profiles, colour_out;
    bool attest = false;
    colour->add_option("--graph", colour_graph_path, "graph file")->required();
    colour->add_option("--profile", colour_profile, "profile name (DESK1, DESK2, PAPER:s=..,c=..)");
    colour->add_option("--profiles", colour_profiles, "JSON file with extra named profiles");
    colour->add_flag("--attest-hfree", attest, "skip the H_s check on large inputs");
    colour->add_option("--out", colour_out, "trace output file (default stdout)");

    // audit
    auto* audit = app.add_subcommand("audit", "exact big-integer audit of the chained bounds");
    int audit_s = 1, audit_c = 2, audit_omega = 200;
    bool audit_json_flag = false;
    audit->add_option("--s", audit_s, "double-star parameter")->required();
    audit->add_option("--c", audit_c, "dichotomy exponent")->required();
    audit->add_option("--omega", audit_omega, "clique number")->required();
    audit->add_flag("--json", audit_json_flag, "emit JSON instead of a table");

    // bench
    auto* bench = app.add_subcommand("bench", "run a benchmark config");
    std::string bench_config, bench_out = "bench-out";
    bench->add_option("--config", bench_config, "config JSON")->required();
    bench->add_option("--out-dir", bench_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (oracle->parsed())
            return cmd_oracle(oracle_which, oracle_graph, oracle_s, oracle_t, oracle_limit);
        if (colour->parsed())
            return cmd_colour(colour_graph_path, colour_profile, colour_profiles, attest,
                              colour_out);
        if (audit->parsed())
            return cmd_audit(audit_s, audit_c, audit_omega, audit_json_flag);
        if (bench->parsed())
            return cmd_bench(bench_config, bench_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
