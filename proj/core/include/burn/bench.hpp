#pragma once

#include "burn/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace burn {

/// One solver run on one instance, ready for JSON/CSV reporting.
struct RunReport {
    std::string algorithm;
    std::string instance;
    int n = 0;
    int m = 0;
    std::optional<int> lower;
    std::optional<int> upper;
    std::optional<BurningSchedule> schedule;
    std::uint64_t seed = 0;
    double wall_time_ms = 0.0;
    std::map<std::string, double> counters;
    std::string status = "ok";  // "ok" or "budget_exceeded"
};

enum class Suite { paths, small_trees, gadgets, random_stats };

std::optional<Suite> parse_suite(const std::string& name);

struct BenchOptions {
    std::uint64_t seed = 0;
    double time_budget_sec = 30.0;  // per instance, exact search only
    bool include_timing = true;     // false zeroes wall times for stable output
};

struct BenchResult {
    std::vector<RunReport> reports;  // sorted by (instance, algorithm)
    std::string csv;
    bool complete = true;  // false if any instance hit the budget
};

/// Runs one benchmark suite. Deterministic given the seed; with timing off
/// the reports and CSV are byte-identical across runs.
BenchResult run_bench(Suite suite, const BenchOptions& options = {});

/// Canonical JSON array of reports (keys sorted, stable formatting).
std::string reports_to_json(const std::vector<RunReport>& reports);

std::string schedule_to_json(const BurningSchedule& s);

}  // namespace burn
