#include "burn/bench.hpp"

#include "burn/exact.hpp"
#include "burn/gadget.hpp"
#include "burn/generators.hpp"
#include "burn/greedy.hpp"
#include "burn/ptas.hpp"
#include "burn/random_burn.hpp"
#include "burn/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include <nlohmann/json.hpp>

namespace burn {

std::optional<Suite> parse_suite(const std::string& name) {
    if (name == "paths") return Suite::paths;
    if (name == "small-trees" || name == "small_trees") return Suite::small_trees;
    if (name == "gadgets") return Suite::gadgets;
    if (name == "random-stats" || name == "random_stats") return Suite::random_stats;
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start, const BenchOptions& options) {
    if (!options.include_timing) return 0.0;
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_double(double value, const char* spec = "%.4f") {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), spec, value);
    return buffer;
}

// Per-instance cell values feeding one CSV row.
struct Row {
    std::string instance;
    int n = 0;
    int m = 0;
    std::optional<int> b_exact;
    std::optional<int> r_greedy;
    std::optional<int> r_random;
    std::optional<int> b_star;
    double time_exact_ms = 0.0;
    double time_greedy_ms = 0.0;
    double time_random_ms = 0.0;
    double time_ptas_ms = 0.0;
};

class SuiteRunner {
public:
    explicit SuiteRunner(const BenchOptions& options) : options_(options) {}

    BenchResult finish() {
        std::sort(result_.reports.begin(), result_.reports.end(),
                  [](const RunReport& a, const RunReport& b) {
                      if (a.instance != b.instance) return a.instance < b.instance;
                      return a.algorithm < b.algorithm;
                  });
        std::sort(rows_.begin(), rows_.end(),
                  [](const Row& a, const Row& b) { return a.instance < b.instance; });
        std::string csv =
            "instance,n,m,b_exact,r_greedy,r_random,b_star,ratio_greedy,"
            "ratio_random,time_exact_ms,time_greedy_ms,time_random_ms,time_ptas_ms\n";
        for (const Row& r : rows_) {
            auto opt = [](const std::optional<int>& v) {
                return v ? std::to_string(*v) : std::string();
            };
            auto ratio = [&](const std::optional<int>& v) {
                if (!v || !r.b_exact) return std::string();
                return format_double(static_cast<double>(*v) / *r.b_exact);
            };
            csv += r.instance + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) +
                   ',' + opt(r.b_exact) + ',' + opt(r.r_greedy) + ',' +
                   opt(r.r_random) + ',' + opt(r.b_star) + ',' + ratio(r.r_greedy) +
                   ',' + ratio(r.r_random) + ',' + format_double(r.time_exact_ms, "%.3f") +
                   ',' + format_double(r.time_greedy_ms, "%.3f") + ',' +
                   format_double(r.time_random_ms, "%.3f") + ',' +
                   format_double(r.time_ptas_ms, "%.3f") + '\n';
        }
        result_.csv = std::move(csv);
        return std::move(result_);
    }

    // Runs greedy, exact (within budget), randomized, and optionally the
    // forest DP on one instance, recording a report per algorithm.
    void run_instance(const GeneratedInstance& inst, bool run_ptas,
                      bool run_random = true) {
        const Graph& g = inst.graph;
        Row row;
        row.instance = inst.name;
        row.n = g.vertex_count();
        row.m = static_cast<int>(g.edge_count());

        auto t0 = Clock::now();
        GreedyResult greedy = greedy_burning(g);
        row.time_greedy_ms = elapsed_ms(t0, options_);
        row.r_greedy = greedy.r;
        add_report(inst, "greedy", std::nullopt, greedy.r, greedy.schedule,
                   options_.seed, row.time_greedy_ms, {});

        t0 = Clock::now();
        SearchBudget budget{options_.time_budget_sec};
        BurningSearchResult exact = exact_burning_number(g, greedy.r, budget);
        row.time_exact_ms = elapsed_ms(t0, options_);
        if (exact.status == SolveStatus::found) {
            row.b_exact = exact.value;
            add_report(inst, "exact", exact.value, exact.value, exact.witness,
                       options_.seed, row.time_exact_ms,
                       {{"nodes_explored", static_cast<double>(exact.nodes_explored)}});
        } else {
            result_.complete = false;
            RunReport report = base_report(inst, "exact");
            report.status = "budget_exceeded";
            report.wall_time_ms = row.time_exact_ms;
            report.counters["nodes_explored"] =
                static_cast<double>(exact.nodes_explored);
            result_.reports.push_back(std::move(report));
        }

        if (run_random) {
            t0 = Clock::now();
            RandomizedConfig config;
            config.seed = rng::mix(options_.seed, 0x72616e64ull);
            RandomizedResult random = randomized_approx(g, config);
            row.time_random_ms = elapsed_ms(t0, options_);
            row.r_random = random.r_best;
            add_report(inst, "random", std::nullopt, random.r_best, random.schedule,
                       config.seed, row.time_random_ms,
                       {{"greedy_r", static_cast<double>(random.greedy_r)}});
        }

        if (run_ptas) {
            t0 = Clock::now();
            PtasOptions popts;
            popts.a = 1;
            PtasResult ptas = ptas_burning(g, popts);
            row.time_ptas_ms = elapsed_ms(t0, options_);
            row.b_star = ptas.b_star;
            RunReport report = base_report(inst, "ptas");
            report.lower = ptas.interval_lo;
            report.upper = ptas.interval_hi;
            report.schedule = ptas.witness;
            report.wall_time_ms = row.time_ptas_ms;
            report.counters["a"] = ptas.a;
            report.counters["b_star"] = ptas.b_star;
            report.counters["max_cover_set_size"] =
                static_cast<double>(ptas.max_cover_set_size);
            push_checked(std::move(report), g);
        }
        rows_.push_back(std::move(row));
    }

    void run_gadget(const GeneratedInstance& base, int d) {
        GadgetResult gadget = build_gadget(base.graph, d);
        GeneratedInstance inst;
        inst.name = "gadget-" + base.name + "-d" + std::to_string(d);
        inst.graph = gadget.gprime;
        run_instance(inst, /*run_ptas=*/false);

        RunReport dom = base_report(inst, "domination");
        dom.n = base.graph.vertex_count();
        dom.m = static_cast<int>(base.graph.edge_count());
        auto t0 = Clock::now();
        DominationSearchResult gamma = exact_domination_number(base.graph);
        dom.wall_time_ms = elapsed_ms(t0, options_);
        dom.lower = gamma.value;
        dom.upper = gamma.value;
        dom.counters["nodes_explored"] = static_cast<double>(gamma.nodes_explored);
        dom.counters["d"] = d;
        result_.reports.push_back(std::move(dom));

        // Cross-check both directions of the reduction on this instance.
        SearchBudget budget{options_.time_budget_sec};
        int b_cap = gamma.value + 3 * d;
        BurningSearchResult bprime = exact_burning_number(gadget.gprime, b_cap, budget);
        RunReport link = base_report(inst, "extraction");
        link.counters["d"] = d;
        link.counters["gamma"] = gamma.value;
        if (bprime.status == SolveStatus::found) {
            link.counters["b_gprime"] = bprime.value;
            link.counters["forward_ok"] = bprime.value <= gamma.value + 3 * d ? 1 : 0;
            std::vector<int> extracted =
                extract_dominating_set(gadget, bprime.witness);
            link.counters["extracted_size"] = static_cast<double>(extracted.size());
            std::vector<char> dominated(base.graph.vertex_count(), 0);
            for (int v : extracted) {
                dominated[v] = 1;
                for (int u : base.graph.neighbors(v)) dominated[u] = 1;
            }
            bool dominates =
                std::all_of(dominated.begin(), dominated.end(), [](char c) { return c; });
            link.counters["extracted_dominates"] = dominates ? 1 : 0;
            link.counters["reverse_ok"] =
                dominates && static_cast<int>(extracted.size()) <= 2 * bprime.value ? 1
                                                                                    : 0;
        } else if (bprime.status == SolveStatus::exceeded) {
            // b(G') > gamma + 3d would contradict the reduction; record the miss.
            link.counters["forward_ok"] = 0;
        } else {
            link.status = "budget_exceeded";
            result_.complete = false;
        }
        result_.reports.push_back(std::move(link));
    }

    void stat_report(const std::string& instance, const std::string& algorithm,
                     int n, std::map<std::string, double> counters) {
        RunReport report;
        report.algorithm = algorithm;
        report.instance = instance;
        report.n = n;
        report.seed = options_.seed;
        report.counters = std::move(counters);
        result_.reports.push_back(std::move(report));
        Row row;
        row.instance = instance;
        row.n = n;
        rows_.push_back(std::move(row));
    }

    const BenchOptions& options() const { return options_; }

private:
    RunReport base_report(const GeneratedInstance& inst, const std::string& algorithm) {
        RunReport report;
        report.algorithm = algorithm;
        report.instance = inst.name;
        report.n = inst.graph.vertex_count();
        report.m = static_cast<int>(inst.graph.edge_count());
        report.seed = options_.seed;
        return report;
    }

    void add_report(const GeneratedInstance& inst, const std::string& algorithm,
                    std::optional<int> lower, int upper, BurningSchedule schedule,
                    std::uint64_t seed, double wall_ms,
                    std::map<std::string, double> counters) {
        RunReport report = base_report(inst, algorithm);
        report.lower = lower;
        report.upper = upper;
        report.schedule = std::move(schedule);
        report.seed = seed;
        report.wall_time_ms = wall_ms;
        report.counters = std::move(counters);
        push_checked(std::move(report), inst.graph);
    }

    void push_checked(RunReport report, const Graph& g) {
        if (report.schedule && !validate_schedule(g, *report.schedule).valid)
            report.status = "invalid_schedule";
        result_.reports.push_back(std::move(report));
    }

    BenchOptions options_;
    BenchResult result_;
    std::vector<Row> rows_;
};

void run_paths(SuiteRunner& runner) {
    for (int n = 1; n <= 17; ++n) {
        GenParams params;
        params.n = n;
        runner.run_instance(generate(InstanceKind::path, params, 0), true);
    }
}

void run_small_trees(SuiteRunner& runner) {
    auto corpus = forest_corpus(40, 14, rng::mix(runner.options().seed, 0x7472656573ull));
    for (const auto& inst : corpus) runner.run_instance(inst, true);
}

void run_gadgets(SuiteRunner& runner) {
    for (const auto& base : connected_graphs_up_to_four())
        for (int d : {1, 2}) runner.run_gadget(base, d);
}

void run_random_stats(SuiteRunner& runner) {
    const BenchOptions& options = runner.options();

    // Mean placement count on P_25 at m = 12, which clears the expectation
    // threshold 2.313... * b(P_25).
    {
        GenParams params;
        params.n = 25;
        Graph p25 = generate(InstanceKind::path, params, 0).graph;
        const int samples = 2000;
        const double m = 12.0;
        double sum = 0.0, sum_sq = 0.0;
        for (int i = 0; i < samples; ++i) {
            auto outcome = random_trial(
                p25, m, rng::mix(options.seed, 0x6c656d34ull, static_cast<std::uint64_t>(i)));
            double count = static_cast<double>(outcome.placements.size());
            sum += count;
            sum_sq += count * count;
        }
        double mean = sum / samples;
        double variance = (sum_sq - sum * sum / samples) / (samples - 1);
        runner.stat_report("stat-placements-p25", "random-stat", 25,
                           {{"m", m},
                            {"samples", samples},
                            {"mean_placements", mean},
                            {"stddev", std::sqrt(std::max(0.0, variance))}});
    }

    // 99th percentile of the domination bound for m uniform radii on [0, m].
    for (int m : {100, 400}) {
        const int samples = 2000;
        std::vector<int> bounds(samples);
        for (int i = 0; i < samples; ++i) {
            std::mt19937_64 gen(
                rng::mix(options.seed, 0x66616374ull + m, static_cast<std::uint64_t>(i)));
            std::vector<double> radii(m);
            for (double& x : radii) x = rng::unit_double(gen) * m;
            bounds[i] = min_domination_bound(radii).r;
        }
        std::sort(bounds.begin(), bounds.end());
        int p99 = bounds[static_cast<std::size_t>(samples * 0.99) - 1];
        double threshold = m + 4.0 * std::sqrt(m * std::log(static_cast<double>(m)));
        runner.stat_report("stat-domination-m" + std::to_string(m), "random-stat", m,
                           {{"m", static_cast<double>(m)},
                            {"samples", samples},
                            {"p99_bound", static_cast<double>(p99)},
                            {"threshold", threshold}});
    }

    // Certified bounds on longer paths, where sqrt(n) is the exact value.
    for (int n : {100, 225, 400}) {
        GenParams params;
        params.n = n;
        GeneratedInstance inst = generate(InstanceKind::path, params, 0);
        RandomizedConfig config;
        config.seed = rng::mix(options.seed, static_cast<std::uint64_t>(n));
        RandomizedResult random = randomized_approx(inst.graph, config);
        int b_known = *inst.known_burning_number;
        runner.stat_report(
            "stat-" + inst.name, "random-ratio", n,
            {{"r_best", static_cast<double>(random.r_best)},
             {"greedy_r", static_cast<double>(random.greedy_r)},
             {"b_exact", static_cast<double>(b_known)},
             {"ratio", static_cast<double>(random.r_best) / b_known}});
    }
}

}  // namespace

BenchResult run_bench(Suite suite, const BenchOptions& options) {
    SuiteRunner runner(options);
    switch (suite) {
        case Suite::paths: run_paths(runner); break;
        case Suite::small_trees: run_small_trees(runner); break;
        case Suite::gadgets: run_gadgets(runner); break;
        case Suite::random_stats: run_random_stats(runner); break;
    }
    return runner.finish();
}

namespace {

nlohmann::json schedule_json(const BurningSchedule& s) {
    nlohmann::json balls = nlohmann::json::array();
    for (const Ball& b : s.balls)
        balls.push_back({{"center", b.center}, {"radius", b.radius}});
    return {{"balls", std::move(balls)}, {"horizon", s.horizon}};
}

}  // namespace

std::string schedule_to_json(const BurningSchedule& s) {
    return schedule_json(s).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<RunReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const RunReport& r : reports) {
        nlohmann::json entry{{"algorithm", r.algorithm},
                             {"instance", r.instance},
                             {"n", r.n},
                             {"m", r.m},
                             {"seed", r.seed},
                             {"status", r.status},
                             {"wall_time_ms", r.wall_time_ms}};
        if (r.lower) entry["lower"] = *r.lower;
        if (r.upper) entry["upper"] = *r.upper;
        if (r.schedule) entry["schedule"] = schedule_json(*r.schedule);
        if (!r.counters.empty()) entry["counters"] = r.counters;
        out.push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
}

}  // namespace burn
