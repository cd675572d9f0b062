#pragma once

#include "burn/graph.hpp"
#include "burn/greedy.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace burn {

struct Placement {
    int center = 0;
    double raw_radius = 0.0;  // drawn uniformly from [0, m); coverage uses the floor
};

/// Record of one randomized burning run: balls of uniformly random radius
/// placed at the lowest-index uncovered vertex until everything is covered.
struct TrialOutcome {
    double m = 0.0;
    std::vector<Placement> placements;
    std::uint64_t seed = 0;
};

/// Deterministic given (graph, m, seed). Places at most n balls.
TrialOutcome random_trial(const Graph& g, double m, std::uint64_t seed);

/// Smallest r such that the floored radii can be injectively assigned to
/// distinct slots in {0..r-1}, each slot at least its radius. slots[i] is the
/// slot of input radius i; the i-th largest floored radius gets slot r-i.
struct DominationCertificate {
    int r = 0;
    std::vector<int> slots;
};

/// Throws std::invalid_argument on negative radii. Empty input gives r = 0.
DominationCertificate min_domination_bound(std::span<const double> radii);

/// Reassigns each placement the certificate's slot as its radius. Slots only
/// grow radii, so coverage is preserved and the result is a valid schedule
/// with horizon c.r. Throws std::invalid_argument if c does not match t.
BurningSchedule outcome_to_schedule(const TrialOutcome& t,
                                    const DominationCertificate& c);

struct PerMStats {
    int m = 0;
    int trials = 0;
    std::optional<int> best_bound;
    double mean_placements = 0.0;
};

struct RandomizedConfig {
    double trials_factor = 1.0;  // trials per m = ceil(factor * m * ln(n+1))
    std::uint64_t seed = 0;
    int m_min = 1;
    std::optional<int> m_max;  // default: the greedy upper bound
    TieBreak greedy_tie_break = TieBreak::farthest;
};

struct RandomizedResult {
    int r_best = 0;
    BurningSchedule schedule;
    int greedy_r = 0;
    std::vector<PerMStats> per_m;
};

/// Sweeps integer m over [m_min, m_max], runs seeded trials for each, turns
/// every trial into a certified upper bound, and returns the best bound found
/// (never worse than greedy, whose schedule is the fallback).
RandomizedResult randomized_approx(const Graph& g, const RandomizedConfig& config = {});

}  // namespace burn
