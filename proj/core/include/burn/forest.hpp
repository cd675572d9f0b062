#pragma once

#include "burn/graph.hpp"

#include <stdexcept>
#include <vector>

namespace burn {

struct NotAForestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A forest with one root per connected component (the minimum-index vertex).
/// parent[v] == -1 exactly at roots; depths increase by 1 along child edges.
struct RootedForest {
    Graph graph;
    std::vector<int> parent;
    std::vector<int> depth;
    std::vector<std::vector<int>> children;
    std::vector<int> roots;  // ascending
};

/// Roots every component at its minimum-index vertex.
/// Throws NotAForestError if the graph contains a cycle.
RootedForest root_forest(const Graph& g);

}  // namespace burn
