#include "burn/bench.hpp"

#include "doctest.h"

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>

using namespace burn;

namespace {

const RunReport* find_report(const BenchResult& res, const std::string& instance,
                             const std::string& algorithm) {
    for (const RunReport& r : res.reports)
        if (r.instance == instance && r.algorithm == algorithm) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("suite names parse") {
    CHECK(parse_suite("paths") == Suite::paths);
    CHECK(parse_suite("small-trees") == Suite::small_trees);
    CHECK(parse_suite("small_trees") == Suite::small_trees);
    CHECK(parse_suite("gadgets") == Suite::gadgets);
    CHECK(parse_suite("random-stats") == Suite::random_stats);
    CHECK_FALSE(parse_suite("nope").has_value());
}

TEST_CASE("the path suite pins the square root values") {
    BenchOptions opts;
    opts.include_timing = false;
    BenchResult res = run_bench(Suite::paths, opts);
    CHECK(res.complete);
    for (int n = 1; n <= 17; ++n) {
        std::string name = "path-" + std::to_string(n);
        const RunReport* exact = find_report(res, name, "exact");
        REQUIRE(exact != nullptr);
        int expect = int(std::ceil(std::sqrt(double(n))));
        CHECK(exact->lower == expect);
        CHECK(exact->upper == expect);
        CHECK(exact->wall_time_ms == 0.0);
        const RunReport* ptas = find_report(res, name, "ptas");
        REQUIRE(ptas != nullptr);
        CHECK(ptas->lower == expect);
    }
    std::istringstream csv(res.csv);
    std::string header;
    std::getline(csv, header);
    CHECK(header ==
          "instance,n,m,b_exact,r_greedy,r_random,b_star,ratio_greedy,ratio_random,"
          "time_exact_ms,time_greedy_ms,time_random_ms,time_ptas_ms");
    int lines = 0;
    for (std::string line; std::getline(csv, line);) ++lines;
    CHECK(lines == 17);
}

TEST_CASE("reports arrive sorted and serialize to valid json") {
    BenchOptions opts;
    opts.include_timing = false;
    BenchResult res = run_bench(Suite::paths, opts);
    for (std::size_t i = 1; i < res.reports.size(); ++i) {
        auto key = [](const RunReport& r) { return std::tie(r.instance, r.algorithm); };
        CHECK(key(res.reports[i - 1]) <= key(res.reports[i]));
    }
    nlohmann::json parsed = nlohmann::json::parse(reports_to_json(res.reports));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == res.reports.size());
    for (const auto& entry : parsed) {
        CHECK(entry.contains("algorithm"));
        CHECK(entry.contains("instance"));
        CHECK(entry.contains("n"));
        CHECK(entry.contains("status"));
    }
}

TEST_CASE("gadget suite cross checks both reduction directions") {
    BenchOptions opts;
    opts.include_timing = false;
    BenchResult res = run_bench(Suite::gadgets, opts);
    CHECK(res.complete);
    int extractions = 0;
    for (const RunReport& r : res.reports) {
        if (r.algorithm != "extraction") continue;
        ++extractions;
        REQUIRE(r.status == "ok");
        CHECK(r.counters.at("forward_ok") == 1);
        CHECK(r.counters.at("extracted_dominates") == 1);
        CHECK(r.counters.at("reverse_ok") == 1);
    }
    CHECK(extractions == 20);  // ten graphs, two depths
}

TEST_CASE("random stats suite emits the three statistics blocks") {
    BenchOptions opts;
    opts.include_timing = false;
    BenchResult res = run_bench(Suite::random_stats, opts);
    const RunReport* placements = find_report(res, "stat-placements-p25", "random-stat");
    REQUIRE(placements != nullptr);
    CHECK(placements->counters.at("mean_placements") <= 12.0);
    for (int m : {100, 400}) {
        const RunReport* dom =
            find_report(res, "stat-domination-m" + std::to_string(m), "random-stat");
        REQUIRE(dom != nullptr);
        CHECK(dom->counters.at("p99_bound") <= dom->counters.at("threshold"));
    }
    for (int n : {100, 225, 400}) {
        const RunReport* path =
            find_report(res, "stat-path-" + std::to_string(n), "random-ratio");
        REQUIRE(path != nullptr);
        CHECK(path->counters.at("r_best") <= path->counters.at("greedy_r"));
    }
}

TEST_CASE("identical seeds give identical bytes with timing off") {
    for (Suite suite : {Suite::paths, Suite::small_trees, Suite::random_stats}) {
        BenchOptions opts;
        opts.seed = 7;
        opts.include_timing = false;
        BenchResult a = run_bench(suite, opts);
        BenchResult b = run_bench(suite, opts);
        CHECK(a.csv == b.csv);
        CHECK(reports_to_json(a.reports) == reports_to_json(b.reports));
    }
}
