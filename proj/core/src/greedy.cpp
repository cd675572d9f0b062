#include "burn/greedy.hpp"

#include <stdexcept>

namespace burn {

namespace {

// Hop distance from every vertex to the nearest covered one; kUnreachable
// where no covered vertex lies in the component.
std::vector<int> distances_to_covered(const Graph& g, const std::vector<char>& covered) {
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::vector<int> queue;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (covered[v]) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : g.neighbors(v)) {
            if (dist[u] == kUnreachable) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

int pick_center(const Graph& g, const std::vector<char>& covered, TieBreak tie_break) {
    if (tie_break == TieBreak::min_index) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!covered[v]) return v;
        return -1;
    }
    // Farthest-first. Vertices out of reach of any covered vertex count as
    // infinitely far, so fresh components get burned before anything else.
    auto dist = distances_to_covered(g, covered);
    int best = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (covered[v]) continue;
        if (best == -1) {
            best = v;
            continue;
        }
        bool v_inf = dist[v] == kUnreachable;
        bool best_inf = dist[best] == kUnreachable;
        if (v_inf != best_inf) {
            if (v_inf) best = v;
        } else if (!v_inf && dist[v] > dist[best]) {
            best = v;
        }
    }
    return best;
}

}  // namespace

GreedyResult greedy_burning(const Graph& g, TieBreak tie_break) {
    if (g.vertex_count() == 0) throw std::invalid_argument("greedy_burning: empty graph");
    GreedyResult result;
    std::vector<char> covered(g.vertex_count(), 0);
    int uncovered = g.vertex_count();
    for (int radius = 0; uncovered > 0; ++radius) {
        int center = pick_center(g, covered, tie_break);
        result.centers_in_order.push_back(center);
        result.schedule.balls.push_back({center, radius});
        for (int v : ball(g, center, radius)) {
            if (!covered[v]) {
                covered[v] = 1;
                --uncovered;
            }
        }
    }
    result.r = static_cast<int>(result.schedule.balls.size());
    result.schedule.horizon = result.r;
    return result;
}

}  // namespace burn
