// Batch front end: validation, coloring, extraction, peeling, exact
// oracles, generators, and the bound functions, with deterministic text
// and JSON reports.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bcc/exact_oracles.hpp"
#include "bcc/generators.hpp"
#include "bcc/hansel.hpp"
#include "bcc/io.hpp"
#include "bcc/json_report.hpp"
#include "bcc/mv_coloring.hpp"
#include "bcc/peeling.hpp"

namespace {

using bcc::Json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Run {
    std::string command;
    Json inputs = Json::object();
    std::optional<std::uint64_t> seed;
    Json results = Json::object();
    std::ostringstream text;
    double parse_ms = 0.0;
    double compute_ms = 0.0;
    int exit_code = 0;
};

Run g_run;
std::string g_json_path;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bcc::Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bcc::Graph load_graph(const std::string& role, const std::string& path) {
    auto start = Clock::now();
    std::string bytes = slurp(path);
    g_run.inputs[role] = Json{{"path", path}, {"fnv1a64", bcc::fnv1a64_hex(bytes)}};
    std::istringstream in(bytes);
    bcc::Graph g = bcc::parse_graph(in);
    g_run.parse_ms += ms_since(start);
    return g;
}

bcc::BicliqueSystem load_system(const std::string& role, const std::string& path) {
    auto start = Clock::now();
    std::string bytes = slurp(path);
    g_run.inputs[role] = Json{{"path", path}, {"fnv1a64", bcc::fnv1a64_hex(bytes)}};
    std::istringstream in(bytes);
    bcc::BicliqueSystem s = bcc::parse_system(in);
    g_run.parse_ms += ms_since(start);
    return s;
}

void write_report(double total_ms) {
    if (g_json_path.empty()) return;
    Json report;
    report["schema"] = 1;
    report["command"] = g_run.command;
    report["inputs"] = g_run.inputs;
    if (g_run.seed) report["seed"] = *g_run.seed;
    report["results"] = g_run.results;
    report["timings_ms"] = Json{{"parse", g_run.parse_ms},
                                {"compute", g_run.compute_ms},
                                {"total", total_ms}};
    std::ofstream out(g_json_path, std::ios::binary);
    if (!out) throw bcc::Error("cannot write JSON report to " + g_json_path);
    out << report.dump(2) << "\n";
}

// emit generated content to --out or stdout, and report its digest
void deliver_generated(const std::string& content, const std::string& out_path) {
    g_run.results["fnv1a64"] = bcc::fnv1a64_hex(content);
    g_run.results["bytes"] = content.size();
    if (out_path.empty()) {
        std::cout << content;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw bcc::Error("cannot write to " + out_path);
        out << content;
        g_run.text << "wrote " << out_path << "\n";
    }
}

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> sizes;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            sizes.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw bcc::DomainError("bad part size '" + tok + "' in --sizes");
        }
    }
    return sizes;
}

struct LimitFlags {
    bcc::OracleLimits limits;

    void attach(CLI::App* cmd) {
        if (const char* env = std::getenv("BCC_TIME_BUDGET")) {
            try {
                limits.time_budget_seconds = std::stod(env);
            } catch (const std::exception&) {
                // unparseable env value: keep the default, the flag still wins
            }
        }
        cmd->add_option("--max-vertices-coloring", limits.max_vertices_coloring,
                        "vertex guard for chi/alpha");
        cmd->add_option("--max-edges-partition", limits.max_edges_partition,
                        "edge guard for the partition oracle");
        cmd->add_option("--max-edges-cover-weight", limits.max_edges_cover_weight,
                        "edge guard for the cover-weight oracle");
        cmd->add_option("--time-budget", limits.time_budget_seconds,
                        "search budget in seconds (env BCC_TIME_BUDGET)");
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biclique coverings, colorings, and exact desk-scale oracles"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--json", g_json_path, "write the JSON run report to this path");

    auto total_start = Clock::now();

    // ---- validate -----------------------------------------------------
    auto* validate = app.add_subcommand("validate", "check partition/cover structure");
    validate->require_subcommand(1);

    static std::string v_system_path, v_graph_path;
    auto* vpart = validate->add_subcommand("partition", "is the system edge-disjoint?");
    vpart->add_option("system", v_system_path, "biclique system file")->required();
    vpart->callback([&] {
        g_run.command = "validate partition";
        auto s = load_system("system", v_system_path);
        auto start = Clock::now();
        bcc::PartitionReport r = bcc::validate_partition(s);
        g_run.compute_ms += ms_since(start);
        g_run.results = bcc::to_json(r);
        if (r.is_partition) {
            g_run.text << "partition: true\n";
        } else {
            g_run.text << "partition: false (edge {" << r.witness.u << "," << r.witness.v
                       << "} produced by bicliques " << r.biclique_a + 1 << " and "
                       << r.biclique_b + 1 << ")\n";
            g_run.exit_code = 1;
        }
    });

    auto* vcover = validate->add_subcommand("cover", "does the system cover the graph?");
    vcover->add_option("system", v_system_path, "biclique system file")->required();
    vcover->add_option("graph", v_graph_path, "graph file")->required();
    vcover->callback([&] {
        g_run.command = "validate cover";
        auto s = load_system("system", v_system_path);
        auto g = load_graph("graph", v_graph_path);
        auto start = Clock::now();
        bcc::CoverReport r = bcc::validate_cover(s, g);
        g_run.compute_ms += ms_since(start);
        g_run.results = bcc::to_json(r);
        g_run.text << "cover: " << (r.covers ? "true" : "false") << "\n";
        if (r.uncovered)
            g_run.text << "uncovered edge {" << r.uncovered->u << "," << r.uncovered->v << "}\n";
        if (r.stray)
            g_run.text << "stray edge {" << r.stray->u << "," << r.stray->v << "} from biclique "
                       << r.stray_biclique + 1 << "\n";
        if (!r.covers) g_run.exit_code = 1;
    });

    // ---- color ----------------------------------------------------------
    static std::string c_system_path;
    static bool c_serial = false;
    auto* color = app.add_subcommand("color", "stagewise coloring of a biclique partition");
    color->add_option("system", c_system_path, "biclique system file")->required();
    color->add_flag("--serial", c_serial, "disable the parallel group kernel");
    color->callback([&] {
        g_run.command = "color";
        auto s = load_system("system", c_system_path);
        auto start = Clock::now();
        bcc::MvOptions opts;
        opts.parallel = !c_serial;
        bcc::MvResult r = bcc::mv_color(s, opts);
        bcc::Graph g = bcc::union_graph(s);
        bcc::ProperReport proper = bcc::verify_proper(g, r.coloring);
        g_run.compute_ms += ms_since(start);

        std::uint64_t bound = bcc::colors_bound(static_cast<std::uint64_t>(r.m));
        g_run.results = bcc::to_json(r);
        g_run.results["proper"] = proper.proper;
        g_run.results["colors_bound"] = bound;
        g_run.results["invert_bound_of_colors"] =
            bcc::invert_bound(static_cast<std::uint64_t>(r.coloring.distinct_colors));
        g_run.text << "n=" << s.universe() << " m=" << r.m
                   << " colors=" << r.coloring.distinct_colors
                   << " proper=" << (proper.proper ? "yes" : "no") << " bound=" << bound << "\n";
    });

    // ---- hansel ---------------------------------------------------------
    auto* hansel = app.add_subcommand("hansel", "independent sets from biclique covers");
    hansel->require_subcommand(1);
    static std::string h_system_path;
    static std::uint64_t h_seed = 0;
    static bool h_enumerate = false;

    auto* hexpect = hansel->add_subcommand("expect", "exact expected survivor count");
    hexpect->add_option("system", h_system_path, "biclique system file")->required();
    hexpect->add_flag("--enumerate", h_enumerate, "cross-check by 2^m enumeration (m <= 20)");
    hexpect->callback([&] {
        g_run.command = "hansel expect";
        auto s = load_system("system", h_system_path);
        auto start = Clock::now();
        bcc::Dyadic expected = bcc::expected_survivors(s);
        bcc::CoverStats stats = bcc::cover_stats(s);
        g_run.compute_ms += ms_since(start);
        g_run.results["n"] = s.universe();
        g_run.results["m"] = s.size();
        g_run.results["weight"] = stats.weight;
        g_run.results["expected"] = bcc::to_json(expected);
        g_run.results["jensen_floor"] =
            s.universe() == 0
                ? 0.0
                : s.universe() * std::exp2(-static_cast<double>(stats.weight) / s.universe());
        if (h_enumerate) {
            bcc::Dyadic mean = bcc::enumerate_mean_survivors(s);
            g_run.results["enumerated"] = bcc::to_json(mean);
            g_run.results["enumeration_matches"] = mean == expected;
        }
        g_run.text << "expected survivors = " << expected.to_string() << "\n";
    });

    auto* hrandom = hansel->add_subcommand("random", "seeded random side-deletion");
    hrandom->add_option("system", h_system_path, "biclique system file")->required();
    hrandom->add_option("--seed", h_seed, "64-bit seed")->default_val(0);
    hrandom->callback([&] {
        g_run.command = "hansel random";
        g_run.seed = h_seed;
        auto s = load_system("system", h_system_path);
        auto start = Clock::now();
        bcc::ExtractionResult r = bcc::randomized_extract(s, h_seed);
        bool indep = bcc::is_independent(bcc::union_graph(s), r.survivors);
        g_run.compute_ms += ms_since(start);
        g_run.results = bcc::to_json(r);
        g_run.results["independent"] = indep;
        g_run.text << "survivors = " << r.survivors.size() << " (expected "
                   << r.guarantee.to_string() << ")\n";
    });

    auto* hderand = hansel->add_subcommand("derand", "conditional-expectations extraction");
    hderand->add_option("system", h_system_path, "biclique system file")->required();
    hderand->callback([&] {
        g_run.command = "hansel derand";
        auto s = load_system("system", h_system_path);
        auto start = Clock::now();
        bcc::ExtractionResult r = bcc::derandomized_extract(s);
        bool indep = bcc::is_independent(bcc::union_graph(s), r.survivors);
        g_run.compute_ms += ms_since(start);
        g_run.results = bcc::to_json(r);
        g_run.results["independent"] = indep;
        g_run.results["meets_guarantee"] = bcc::BigInt(r.survivors.size()) >= r.guarantee.ceil();
        g_run.text << "survivors = " << r.survivors.size() << " >= ceil("
                   << r.guarantee.to_string() << ")\n";
    });

    // ---- peel -------------------------------------------------------------
    static std::string p_graph_path, p_system_path;
    static int p_k = 0;
    static LimitFlags p_limits;
    auto* peel_cmd = app.add_subcommand("peel", "iterated independent-set removal");
    peel_cmd->add_option("graph", p_graph_path, "graph file")->required();
    peel_cmd->add_option("system", p_system_path, "covering biclique system file")->required();
    auto* kopt = peel_cmd->add_option("--k", p_k, "stop threshold (default: exact chi)");
    p_limits.attach(peel_cmd);
    peel_cmd->callback([&] {
        g_run.command = "peel";
        auto g = load_graph("graph", p_graph_path);
        auto s = load_system("system", p_system_path);
        int k = p_k;
        std::string k_source = "flag";
        if (kopt->count() == 0) {
            if (g.vertex_count() > p_limits.limits.max_vertices_coloring)
                throw CLI::ValidationError(
                    "--k", "graph is over the chi-oracle guard; supply --k explicitly");
            k = bcc::chromatic_number(g, p_limits.limits);
            k_source = "oracle";
        }
        auto start = Clock::now();
        bcc::PeelTrace trace = bcc::peel(g, s, k);
        bcc::TraceAnalysis analysis = bcc::analyze_trace(trace, k, g.vertex_count());
        g_run.compute_ms += ms_since(start);
        g_run.results["k"] = k;
        g_run.results["k_source"] = k_source;
        g_run.results["trace"] = bcc::to_json(trace);
        g_run.results["analysis"] = bcc::to_json(analysis);
        // chromatic number of the sub-threshold remainder, when tiny
        if (trace.final_vertices.size() <= p_limits.limits.max_vertices_coloring)
            g_run.results["final_chi"] = bcc::chromatic_number(
                bcc::induced_subgraph(g, trace.final_vertices), p_limits.limits);
        else
            g_run.results["final_chi"] = nullptr;
        g_run.text << "rounds=" << trace.rounds.size() << " t=" << trace.t
                   << " beta=" << trace.beta << " case=" << (analysis.case_one ? 1 : 2) << "\n";
    });

    // ---- oracle -----------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "exact desk-scale solvers");
    oracle->require_subcommand(1);
    static std::string o_graph_path;
    static LimitFlags o_limits;

    auto add_oracle = [&](const std::string& name, const std::string& desc, auto fn) {
        auto* cmd = oracle->add_subcommand(name, desc);
        cmd->add_option("graph", o_graph_path, "graph file")->required();
        o_limits.attach(cmd);
        cmd->callback([&, name, fn] {
            g_run.command = "oracle " + name;
            auto g = load_graph("graph", o_graph_path);
            auto start = Clock::now();
            fn(g);
            g_run.compute_ms += ms_since(start);
        });
    };

    add_oracle("chi", "exact chromatic number", [&](const bcc::Graph& g) {
        int v = bcc::chromatic_number(g, o_limits.limits);
        g_run.results["value"] = v;
        g_run.text << "chi = " << v << "\n";
    });
    add_oracle("alpha", "exact independence number", [&](const bcc::Graph& g) {
        int v = bcc::independence_number(g, o_limits.limits);
        g_run.results["value"] = v;
        g_run.text << "alpha = " << v << "\n";
    });
    add_oracle("bp", "minimum biclique partition size", [&](const bcc::Graph& g) {
        bcc::PartitionWitness w = bcc::min_biclique_partition(g, o_limits.limits);
        g_run.results["value"] = w.count;
        g_run.results["witness"] = bcc::system_to_json(w.system);
        g_run.results["witness_text"] = bcc::format_system(w.system);
        g_run.text << "min biclique partition = " << w.count << "\n";
    });
    add_oracle("mincover", "minimum biclique cover weight", [&](const bcc::Graph& g) {
        bcc::CoverWitness w = bcc::min_cover_weight(g, o_limits.limits);
        g_run.results["value"] = w.weight;
        g_run.results["witness"] = bcc::system_to_json(w.system);
        g_run.results["witness_text"] = bcc::format_system(w.system);
        g_run.text << "min cover weight = " << w.weight << "\n";
    });

    // ---- gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    static int gen_k = 0, gen_n = 0, gen_m = 0;
    static std::uint64_t gen_seed = 0;
    static std::string gen_sizes, gen_out;

    auto add_gen = [&](const std::string& name, const std::string& desc, auto setup, auto fn) {
        auto* cmd = gen->add_subcommand(name, desc);
        setup(cmd);
        cmd->add_option("--out", gen_out, "write to this file instead of stdout");
        cmd->callback([&, name, fn] {
            g_run.command = "gen " + name;
            auto start = Clock::now();
            std::string content = fn();
            g_run.compute_ms += ms_since(start);
            deliver_generated(content, gen_out);
        });
    };

    add_gen(
        "kk", "complete graph K_k",
        [&](CLI::App* cmd) { cmd->add_option("--k", gen_k, "vertex count")->required(); },
        [&] {
            bcc::Graph g = bcc::complete_graph(gen_k);
            g_run.results["kind"] = "graph";
            g_run.results["n"] = g.vertex_count();
            g_run.results["edges"] = g.edges().size();
            return bcc::format_graph(g);
        });
    add_gen(
        "multipartite", "complete multipartite graph",
        [&](CLI::App* cmd) {
            cmd->add_option("--sizes", gen_sizes, "comma-separated part sizes")->required();
        },
        [&] {
            bcc::Graph g = bcc::complete_multipartite(parse_sizes(gen_sizes));
            g_run.results["kind"] = "graph";
            g_run.results["n"] = g.vertex_count();
            g_run.results["edges"] = g.edges().size();
            return bcc::format_graph(g);
        });
    add_gen(
        "gpstars", "nested star partition of a multipartite graph",
        [&](CLI::App* cmd) {
            cmd->add_option("--sizes", gen_sizes, "comma-separated part sizes")->required();
        },
        [&] {
            bcc::BicliqueSystem s = bcc::gp_star_partition(parse_sizes(gen_sizes));
            g_run.results["kind"] = "system";
            g_run.results["n"] = s.universe();
            g_run.results["m"] = s.size();
            return bcc::format_system(s);
        });
    add_gen(
        "kscode", "binary-code cover of K_k",
        [&](CLI::App* cmd) { cmd->add_option("--k", gen_k, "vertex count")->required(); },
        [&] {
            bcc::BicliqueSystem s = bcc::ks_code_cover(gen_k);
            g_run.results["kind"] = "system";
            g_run.results["n"] = s.universe();
            g_run.results["m"] = s.size();
            g_run.results["weight"] = bcc::cover_stats(s).weight;
            return bcc::format_system(s);
        });
    add_gen(
        "random", "random edge-disjoint biclique union",
        [&](CLI::App* cmd) {
            cmd->add_option("--n", gen_n, "universe size")->required();
            cmd->add_option("--m", gen_m, "biclique count")->required();
            cmd->add_option("--seed", gen_seed, "64-bit seed")->default_val(0);
        },
        [&] {
            g_run.seed = gen_seed;
            bcc::BicliqueSystem s = bcc::random_biclique_union(gen_n, gen_m, gen_seed);
            g_run.results["kind"] = "system";
            g_run.results["n"] = s.universe();
            g_run.results["m"] = s.size();
            g_run.results["weight"] = bcc::cover_stats(s).weight;
            return bcc::format_system(s);
        });

    // ---- bounds -------------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "bound functions");
    bounds->require_subcommand(1);
    static std::uint64_t b_m = 0, b_k_int = 0;
    static double b_k_real = 0.0;
    static int b_k3 = 0;

    auto* bcolors = bounds->add_subcommand("colors", "color-count ceiling for m bicliques");
    bcolors->add_option("--m", b_m, "biclique count")->required();
    bcolors->callback([&] {
        g_run.command = "bounds colors";
        std::uint64_t v = bcc::colors_bound(b_m);
        g_run.results["m"] = b_m;
        g_run.results["value"] = v;
        g_run.text << "colors_bound(" << b_m << ") = " << v << "\n";
    });

    auto* binvert = bounds->add_subcommand("invert", "minimal m reaching k colors");
    binvert->add_option("--k", b_k_int, "color count")->required();
    binvert->callback([&] {
        g_run.command = "bounds invert";
        std::uint64_t v = bcc::invert_bound(b_k_int);
        g_run.results["k"] = b_k_int;
        g_run.results["value"] = v;
        g_run.text << "invert_bound(" << b_k_int << ") = " << v << "\n";
    });

    auto* bthm1 = bounds->add_subcommand("thm1", "main-term bound 2^sqrt(2 log2 k)");
    bthm1->add_option("--k", b_k_real, "chromatic number (real, >= 2)")->required();
    bthm1->callback([&] {
        g_run.command = "bounds thm1";
        double v = bcc::theorem1_bound(b_k_real);
        g_run.results["k"] = b_k_real;
        g_run.results["value"] = v;
        g_run.text << "theorem1_bound(" << b_k_real << ") = " << v << "\n";
    });

    auto* bthm3 = bounds->add_subcommand("thm3", "cover-weight bound for chromatic number k");
    bthm3->add_option("--k", b_k3, "chromatic number (integer, >= 5)")->required();
    bthm3->callback([&] {
        g_run.command = "bounds thm3";
        double v = bcc::theorem3_bound(b_k3);
        g_run.results["k"] = b_k3;
        g_run.results["value"] = v;
        g_run.text << "theorem3_bound(" << b_k3 << ") = " << v << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;  // help exits clean, usage errors exit 3
    } catch (const bcc::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bcc::GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bcc::InvalidPartitionError& e) {
        std::cerr << "error: " << e.what() << " (edge {" << e.report.witness.u << ","
                  << e.report.witness.v << "} in bicliques " << e.report.biclique_a + 1 << " and "
                  << e.report.biclique_b + 1 << ")\n";
        return 1;
    } catch (const bcc::InvalidCoverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const bcc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const bcc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cout << g_run.text.str();
    try {
        write_report(ms_since(total_start));
    } catch (const bcc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_run.exit_code;
}
