#include "burn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace burn {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("Graph: negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph Graph::from_edges(int vertex_count,
                        std::span<const std::pair<int, int>> edges) {
    Graph g(vertex_count);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::out_of_range("Graph: vertex id " + std::to_string(v) +
                                " out of range [0, " +
                                std::to_string(vertex_count()) + ")");
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return false;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edge_count_;
    return true;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& smaller =
        adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    int other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    return std::find(smaller.begin(), smaller.end(), other) != smaller.end();
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return adjacency_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[v].size());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    g.check_vertex(source);
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::vector<int> queue;
    queue.reserve(g.vertex_count());
    dist[source] = 0;
    queue.push_back(source);
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

std::vector<int> ball(const Graph& g, int center, int radius) {
    g.check_vertex(center);
    if (radius < 0) throw std::invalid_argument("ball: negative radius");
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::vector<int> queue;
    dist[center] = 0;
    queue.push_back(center);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        if (dist[v] == radius) continue;  // do not expand past the radius
        for (int u : g.neighbors(v)) {
            if (dist[u] == kUnreachable) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

void check_schedule_invariants(const Graph& g, const BurningSchedule& s) {
    if (s.horizon < 1)
        throw std::invalid_argument("schedule: horizon must be positive");
    if (s.balls.size() > static_cast<std::size_t>(s.horizon))
        throw std::invalid_argument("schedule: more balls than the horizon allows");
    std::vector<char> used(static_cast<std::size_t>(s.horizon), 0);
    for (const Ball& b : s.balls) {
        g.check_vertex(b.center);
        if (b.radius < 0 || b.radius >= s.horizon)
            throw std::invalid_argument("schedule: radius " + std::to_string(b.radius) +
                                        " outside [0, " + std::to_string(s.horizon) + ")");
        if (used[b.radius])
            throw std::invalid_argument("schedule: duplicate radius " +
                                        std::to_string(b.radius));
        used[b.radius] = 1;
    }
}

ScheduleCheck validate_schedule(const Graph& g, const BurningSchedule& s) {
    check_schedule_invariants(g, s);
    std::vector<char> covered(g.vertex_count(), 0);
    for (const Ball& b : s.balls)
        for (int v : ball(g, b.center, b.radius)) covered[v] = 1;
    ScheduleCheck result;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) result.uncovered.push_back(v);
    result.valid = result.uncovered.empty();
    return result;
}

}  // namespace burn
