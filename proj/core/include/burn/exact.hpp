#pragma once

#include "burn/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace burn {

struct SearchBudget {
    std::optional<double> time_limit_sec;
};

enum class SolveStatus {
    found,      // optimum proven, witness attached
    exceeded,   // no solution within the given bound
    timed_out,  // budget ran out before the search finished
};

struct BurningSearchResult {
    SolveStatus status = SolveStatus::exceeded;
    int value = 0;  // meaningful only when found
    BurningSchedule witness;
    std::uint64_t nodes_explored = 0;
    int b_max = 0;
};

/// Exact burning number by iterative deepening over the horizon b. For each b
/// the search walks radii b-1 down to 0; every radius is either skipped or
/// placed at a center covering at least one currently uncovered vertex (any
/// cover normalizes to this form by dropping redundant balls in decreasing
/// radius order). Coverage lives in bitmasks; a packing bound on uncovered
/// vertices pairwise farther apart than twice the largest remaining radius
/// prunes dead branches. Practical up to roughly 30 vertices / horizon 6.
BurningSearchResult exact_burning_number(const Graph& g, int b_max,
                                         const SearchBudget& budget = {});

struct DominationSearchResult {
    SolveStatus status = SolveStatus::found;
    int value = 0;
    std::vector<int> witness;  // ascending
    std::uint64_t nodes_explored = 0;
};

/// Minimum dominating set by branching on the closed neighborhood of the
/// lowest-index undominated vertex.
DominationSearchResult exact_domination_number(const Graph& g,
                                               const SearchBudget& budget = {});

}  // namespace burn
