#include "burn/bench.hpp"
#include "burn/exact.hpp"
#include "burn/gadget.hpp"
#include "burn/generators.hpp"
#include "burn/graph_io.hpp"
#include "burn/greedy.hpp"
#include "burn/ptas.hpp"
#include "burn/random_burn.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitBudget = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("BURN_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

std::optional<burn::GraphFormat> parse_format(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name == "edge-list" || name == "edge_list") return burn::GraphFormat::edge_list;
    if (name == "dimacs") return burn::GraphFormat::dimacs;
    throw InputError("unknown format: " + name);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << text;
}

json schedule_json(const burn::BurningSchedule& s) {
    json balls = json::array();
    for (const burn::Ball& b : s.balls)
        balls.push_back({{"center", b.center}, {"radius", b.radius}});
    return {{"balls", std::move(balls)}, {"horizon", s.horizon}};
}

json report_json(const burn::RunReport& r) {
    json entry{{"algorithm", r.algorithm}, {"instance", r.instance},
               {"n", r.n},                {"m", r.m},
               {"seed", r.seed},          {"status", r.status},
               {"wall_time_ms", r.wall_time_ms}};
    if (r.lower) entry["lower"] = *r.lower;
    if (r.upper) entry["upper"] = *r.upper;
    if (r.schedule) entry["schedule"] = schedule_json(*r.schedule);
    if (!r.counters.empty()) entry["counters"] = r.counters;
    return entry;
}

// Shared --input handling: load, remember the descriptor for the report.
struct LoadedGraph {
    burn::Graph graph;
    std::string name;
};

LoadedGraph load_input(const std::string& path, const std::string& format) {
    if (path.empty()) throw InputError("missing --input");
    LoadedGraph in;
    in.graph = burn::load_graph_file(path, parse_format(format));
    in.name = path;
    return in;
}

burn::RunReport make_report(const LoadedGraph& in, const std::string& algorithm) {
    burn::RunReport report;
    report.algorithm = algorithm;
    report.instance = in.name;
    report.n = in.graph.vertex_count();
    report.m = static_cast<int>(in.graph.edge_count());
    return report;
}

// Checks the invariant that emitted schedules validate before writing.
void attach_schedule(burn::RunReport& report, const burn::Graph& g,
                     burn::BurningSchedule schedule) {
    if (!burn::validate_schedule(g, schedule).valid)
        report.status = "invalid_schedule";
    report.schedule = std::move(schedule);
}

burn::TieBreak parse_tie_break(const std::string& name) {
    if (name == "min-index" || name == "min_index") return burn::TieBreak::min_index;
    if (name == "farthest") return burn::TieBreak::farthest;
    throw InputError("unknown tie-break: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph burning toolkit: exact, greedy, randomized and forest-DP "
                 "burning number solvers"};
    app.require_subcommand(1);

    std::string input, format, out_path;
    std::uint64_t seed = default_seed();
    double time_budget = 30.0;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input) {
            cmd->add_option("--input", input, "graph file (edge list or dimacs-like)");
            cmd->add_option("--format", format, "input format: edge-list | dimacs");
        }
        cmd->add_option("--out", out_path, "write the report here instead of stdout");
    };

    auto* cmd_exact = app.add_subcommand("exact", "exact burning number");
    add_common(cmd_exact);
    int b_max = 0;
    cmd_exact->add_option("--b-max", b_max, "horizon cap (default: greedy bound)");
    cmd_exact->add_option("--time-budget", time_budget, "seconds before giving up");

    auto* cmd_greedy = app.add_subcommand("greedy", "greedy 3-approximation");
    add_common(cmd_greedy);
    std::string tie_break = "farthest";
    cmd_greedy->add_option("--tie-break", tie_break, "min-index | farthest");

    auto* cmd_random = app.add_subcommand("random", "randomized certified bounds");
    add_common(cmd_random);
    cmd_random->add_option("--seed", seed, "master seed (default: BURN_SEED or 0)");
    double trials_factor = 1.0;
    int m_min = 1;
    int m_max = -1;
    cmd_random->add_option("--trials-factor", trials_factor,
                           "trials per m = ceil(factor * m * ln(n+1))");
    cmd_random->add_option("--m-min", m_min, "smallest m in the sweep");
    cmd_random->add_option("--m-max", m_max, "largest m (default: greedy bound)");
    cmd_random->add_option("--tie-break", tie_break, "greedy fallback tie-break");

    auto* cmd_ptas = app.add_subcommand("ptas", "forest DP approximation");
    add_common(cmd_ptas);
    double epsilon = 0.0;
    int granularity = 0;
    auto* opt_eps = cmd_ptas->add_option("--epsilon", epsilon, "target 1+epsilon factor");
    auto* opt_a = cmd_ptas->add_option("--a", granularity, "explicit rounding granularity");
    opt_eps->excludes(opt_a);
    bool no_prune = false;
    cmd_ptas->add_flag("--no-prune", no_prune, "disable Pareto pruning (diagnostics)");
    bool emit_witness = true;
    cmd_ptas->add_flag("--emit-witness,!--no-emit-witness", emit_witness,
                       "include a witness schedule (default: on)");

    auto* cmd_gadget = app.add_subcommand("gadget", "domination-to-burning transform");
    add_common(cmd_gadget);
    int gadget_d = 1;
    std::string maps_path, out_format = "dimacs";
    cmd_gadget->add_option("--d", gadget_d, "path-length parameter")->required();
    cmd_gadget->add_option("--maps", maps_path, "write provenance maps as JSON here");
    cmd_gadget->add_option("--out-format", out_format, "edge-list | dimacs");

    auto* cmd_gen = app.add_subcommand("gen", "instance generator");
    std::string kind_name;
    cmd_gen->add_option("kind", kind_name,
                        "path | star | spider | caterpillar | random_tree | grid | gnp")
        ->required();
    burn::GenParams params;
    cmd_gen->add_option("--n", params.n, "vertex count");
    cmd_gen->add_option("--leaves", params.leaves, "star leaves");
    cmd_gen->add_option("--legs", params.legs, "spider/caterpillar legs");
    cmd_gen->add_option("--leg-length", params.leg_length, "spider leg length");
    cmd_gen->add_option("--spine", params.spine, "caterpillar spine length");
    cmd_gen->add_option("--rows", params.rows, "grid rows");
    cmd_gen->add_option("--cols", params.cols, "grid columns");
    cmd_gen->add_option("--p", params.p, "gnp edge probability");
    cmd_gen->add_option("--seed", seed, "generator seed");
    cmd_gen->add_option("--out", out_path, "write the graph here instead of stdout");
    cmd_gen->add_option("--format", out_format, "edge-list | dimacs (default)");

    auto* cmd_bench = app.add_subcommand("bench", "benchmark suites");
    std::string suite_name;
    cmd_bench->add_option("--suite", suite_name,
                          "paths | small-trees | gadgets | random-stats")
        ->required();
    cmd_bench->add_option("--seed", seed, "suite seed");
    cmd_bench->add_option("--time-budget", time_budget, "seconds per exact solve");
    bool no_timing = false;
    cmd_bench->add_flag("--no-timing", no_timing,
                        "zero wall times for byte-stable reports");
    cmd_bench->add_option("--out", out_path, "write the report here instead of stdout");
    std::string csv_path;
    cmd_bench->add_option("--csv", csv_path, "also write the CSV table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (app.got_subcommand(cmd_exact)) {
            LoadedGraph in = load_input(input, format);
            auto t0 = std::chrono::steady_clock::now();
            burn::GreedyResult greedy = burn::greedy_burning(in.graph);
            int cap = b_max > 0 ? b_max : greedy.r;
            burn::BurningSearchResult result =
                burn::exact_burning_number(in.graph, cap, {time_budget});
            burn::RunReport report = make_report(in, "exact");
            report.wall_time_ms = elapsed_ms(t0);
            report.counters["nodes_explored"] =
                static_cast<double>(result.nodes_explored);
            report.counters["b_max"] = cap;
            int exit_code = kExitOk;
            if (result.status == burn::SolveStatus::found) {
                report.lower = result.value;
                report.upper = result.value;
                attach_schedule(report, in.graph, result.witness);
            } else {
                report.status = result.status == burn::SolveStatus::timed_out
                                    ? "budget_exceeded"
                                    : "exceeded";
                if (result.status == burn::SolveStatus::exceeded)
                    report.lower = cap + 1;
                exit_code = kExitBudget;
            }
            write_output(out_path, report_json(report).dump(2) + "\n");
            return exit_code;
        }

        if (app.got_subcommand(cmd_greedy)) {
            LoadedGraph in = load_input(input, format);
            auto t0 = std::chrono::steady_clock::now();
            burn::GreedyResult result =
                burn::greedy_burning(in.graph, parse_tie_break(tie_break));
            burn::RunReport report = make_report(in, "greedy");
            report.wall_time_ms = elapsed_ms(t0);
            report.upper = result.r;
            attach_schedule(report, in.graph, result.schedule);
            write_output(out_path, report_json(report).dump(2) + "\n");
            return report.status == "ok" ? kExitOk : kExitBudget;
        }

        if (app.got_subcommand(cmd_random)) {
            LoadedGraph in = load_input(input, format);
            burn::RandomizedConfig config;
            config.seed = seed;
            config.trials_factor = trials_factor;
            config.m_min = m_min;
            if (m_max >= 0) config.m_max = m_max;
            config.greedy_tie_break = parse_tie_break(tie_break);
            auto t0 = std::chrono::steady_clock::now();
            burn::RandomizedResult result = burn::randomized_approx(in.graph, config);
            burn::RunReport report = make_report(in, "random");
            report.wall_time_ms = elapsed_ms(t0);
            report.seed = seed;
            report.upper = result.r_best;
            report.counters["greedy_r"] = result.greedy_r;
            attach_schedule(report, in.graph, result.schedule);
            json body = report_json(report);
            json per_m = json::array();
            for (const burn::PerMStats& s : result.per_m) {
                json entry{{"m", s.m},
                           {"trials", s.trials},
                           {"mean_placements", s.mean_placements}};
                if (s.best_bound) entry["best_bound"] = *s.best_bound;
                per_m.push_back(std::move(entry));
            }
            body["per_m"] = std::move(per_m);
            write_output(out_path, body.dump(2) + "\n");
            return report.status == "ok" ? kExitOk : kExitBudget;
        }

        if (app.got_subcommand(cmd_ptas)) {
            LoadedGraph in = load_input(input, format);
            burn::PtasOptions options;
            if (opt_a->count() > 0) options.a = granularity;
            if (opt_eps->count() > 0) options.epsilon = epsilon;
            options.prune = !no_prune;
            options.emit_witness = emit_witness;
            auto t0 = std::chrono::steady_clock::now();
            burn::PtasResult result = burn::ptas_burning(in.graph, options);
            burn::RunReport report = make_report(in, "ptas");
            report.wall_time_ms = elapsed_ms(t0);
            report.lower = result.interval_lo;
            report.upper = result.interval_hi;
            report.counters["a"] = result.a;
            report.counters["b_star"] = result.b_star;
            report.counters["greedy_r"] = result.greedy_r;
            report.counters["max_cover_set_size"] =
                static_cast<double>(result.max_cover_set_size);
            if (result.witness) attach_schedule(report, in.graph, *result.witness);
            write_output(out_path, report_json(report).dump(2) + "\n");
            return report.status == "ok" ? kExitOk : kExitBudget;
        }

        if (app.got_subcommand(cmd_gadget)) {
            LoadedGraph in = load_input(input, format);
            burn::GadgetResult result = burn::build_gadget(in.graph, gadget_d);
            write_output(out_path,
                         burn::format_graph(result.gprime, *parse_format(out_format)));
            if (!maps_path.empty()) {
                json edge_paths = json::array();
                for (const auto& p : result.edge_paths)
                    edge_paths.push_back(
                        {{"u", p.u}, {"v", p.v}, {"internal", p.internal}});
                json copy_paths = json::array();
                for (const auto& p : result.copy_paths)
                    copy_paths.push_back({{"v", p.v}, {"internal", p.internal}});
                json maps{{"d", result.d},
                          {"n_original", in.graph.vertex_count()},
                          {"original_vertex", result.original_vertex},
                          {"copy_vertex", result.copy_vertex},
                          {"edge_paths", std::move(edge_paths)},
                          {"copy_paths", std::move(copy_paths)}};
                write_output(maps_path, maps.dump(2) + "\n");
            }
            return kExitOk;
        }

        if (app.got_subcommand(cmd_gen)) {
            auto kind = burn::parse_instance_kind(kind_name);
            if (!kind) throw InputError("unknown instance kind: " + kind_name);
            burn::GeneratedInstance inst = burn::generate(*kind, params, seed);
            burn::GraphFormat f = *parse_format(out_format);
            std::string text;
            if (f == burn::GraphFormat::dimacs) {
                text += "c " + inst.name + "\n";
                if (inst.known_burning_number)
                    text += "c burning-number " +
                            std::to_string(*inst.known_burning_number) + "\n";
            } else {
                text += "# " + inst.name + "\n";
                if (inst.known_burning_number)
                    text += "# burning-number " +
                            std::to_string(*inst.known_burning_number) + "\n";
            }
            text += burn::format_graph(inst.graph, f);
            write_output(out_path, text);
            return kExitOk;
        }

        if (app.got_subcommand(cmd_bench)) {
            auto suite = burn::parse_suite(suite_name);
            if (!suite) throw InputError("unknown suite: " + suite_name);
            burn::BenchOptions options;
            options.seed = seed;
            options.time_budget_sec = time_budget;
            options.include_timing = !no_timing;
            burn::BenchResult result = burn::run_bench(*suite, options);
            json body{{"complete", result.complete},
                      {"csv", result.csv},
                      {"reports", json::parse(burn::reports_to_json(result.reports))}};
            write_output(out_path, body.dump(2) + "\n");
            if (!csv_path.empty()) write_output(csv_path, result.csv);
            return result.complete ? kExitOk : kExitBudget;
        }
    } catch (const burn::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const burn::CoverSetOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
