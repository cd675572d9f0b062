#include "burn/gadget.hpp"

#include <algorithm>
#include <stdexcept>

namespace burn {

GadgetResult build_gadget(const Graph& g, int d) {
    if (g.vertex_count() == 0) throw std::invalid_argument("build_gadget: empty graph");
    if (d < 1) throw std::invalid_argument("build_gadget: d must be at least 1");
    int n = g.vertex_count();
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    int total = 2 * n + m * (2 * d - 1) + n * (d - 1);

    GadgetResult result;
    result.d = d;
    result.gprime = Graph(total);
    result.original_vertex.resize(n);
    result.copy_vertex.resize(n);
    for (int v = 0; v < n; ++v) {
        result.original_vertex[v] = v;
        result.copy_vertex[v] = n + v;
    }

    int next = 2 * n;
    for (const auto& [u, v] : edges) {
        GadgetResult::EdgePath path;
        path.u = u;
        path.v = v;
        int prev = u;
        for (int i = 0; i < 2 * d - 1; ++i) {
            path.internal.push_back(next);
            result.gprime.add_edge(prev, next);
            prev = next++;
        }
        result.gprime.add_edge(prev, v);
        result.edge_paths.push_back(std::move(path));
    }
    for (int v = 0; v < n; ++v) {
        GadgetResult::CopyPath path;
        path.v = v;
        int prev = v;
        for (int i = 0; i < d - 1; ++i) {
            path.internal.push_back(next);
            result.gprime.add_edge(prev, next);
            prev = next++;
        }
        result.gprime.add_edge(prev, result.copy_vertex[v]);
        result.copy_paths.push_back(std::move(path));
    }
    return result;
}

std::vector<int> extract_dominating_set(const GadgetResult& gadget,
                                        const BurningSchedule& schedule) {
    // strand[x] = the original vertex whose copy path (or x itself, or its
    // copy) contains x; -1 marks edge-path interiors.
    std::vector<int> strand(gadget.gprime.vertex_count(), -1);
    std::vector<std::pair<int, int>> edge_of(gadget.gprime.vertex_count(), {-1, -1});
    int n = static_cast<int>(gadget.original_vertex.size());
    for (int v = 0; v < n; ++v) {
        strand[gadget.original_vertex[v]] = v;
        strand[gadget.copy_vertex[v]] = v;
    }
    for (const auto& path : gadget.copy_paths)
        for (int x : path.internal) strand[x] = path.v;
    for (const auto& path : gadget.edge_paths)
        for (int x : path.internal) edge_of[x] = {path.u, path.v};

    std::vector<int> dominators;
    for (const Ball& b : schedule.balls) {
        gadget.gprime.check_vertex(b.center);
        if (strand[b.center] >= 0) {
            dominators.push_back(strand[b.center]);
        } else {
            dominators.push_back(edge_of[b.center].first);
            dominators.push_back(edge_of[b.center].second);
        }
    }
    std::sort(dominators.begin(), dominators.end());
    dominators.erase(std::unique(dominators.begin(), dominators.end()),
                     dominators.end());
    return dominators;
}

}  // namespace burn
