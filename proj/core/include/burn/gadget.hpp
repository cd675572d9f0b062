#pragma once

#include "burn/graph.hpp"

#include <vector>

namespace burn {

/// Hardness-reduction transform G -> G': every edge {u, w} becomes a path of
/// length 2d between u and w, and every vertex v gains a pendant copy v' at
/// the end of a path of length d. Vertex ids: originals 0..n-1 keep their id,
/// copies follow at n..2n-1, then edge-path internals in sorted edge order,
/// then copy-path internals in vertex order.
struct GadgetResult {
    Graph gprime;
    int d = 1;

    std::vector<int> original_vertex;  // original id -> id in gprime (identity)
    std::vector<int> copy_vertex;      // original id -> id of its copy

    struct EdgePath {
        int u = 0;
        int v = 0;
        std::vector<int> internal;  // the 2d-1 interior vertices, u side first
    };
    std::vector<EdgePath> edge_paths;  // sorted by (u, v)

    struct CopyPath {
        int v = 0;
        std::vector<int> internal;  // the d-1 interior vertices, v side first
    };
    std::vector<CopyPath> copy_paths;
};

/// Throws std::invalid_argument on an empty graph or d < 1.
GadgetResult build_gadget(const Graph& g, int d);

/// Reads a burning schedule of G' back into a vertex set of G: a ball
/// centered strictly inside an edge path contributes both endpoints, any
/// other center contributes the original vertex of its strand. The result
/// has at most 2 * |schedule.balls| vertices and dominates G whenever the
/// schedule is an optimal cover of G' with horizon below 5d.
std::vector<int> extract_dominating_set(const GadgetResult& gadget,
                                        const BurningSchedule& schedule);

}  // namespace burn
