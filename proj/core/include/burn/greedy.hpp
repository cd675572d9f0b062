#pragma once

#include "burn/graph.hpp"

#include <vector>

namespace burn {

enum class TieBreak {
    min_index,  // lowest-index uncovered vertex
    farthest,   // uncovered vertex farthest from the covered set, ties by index
};

struct GreedyResult {
    int r = 0;
    BurningSchedule schedule;           // horizon r, the i-th ball has radius i
    std::vector<int> centers_in_order;  // placement order
};

/// Greedy burning: repeatedly place a ball of radius 0, 1, 2, ... at an
/// uncovered vertex until everything is covered. The returned r satisfies
/// b(G) <= r <= 3 b(G).
GreedyResult greedy_burning(const Graph& g, TieBreak tie_break = TieBreak::farthest);

}  // namespace burn
