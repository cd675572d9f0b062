#pragma once

#include <span>
#include <utility>
#include <vector>

namespace burn {

/// Marker used by bfs_distances for vertices in other components.
inline constexpr int kUnreachable = -1;

/// Simple undirected graph over dense vertex ids 0..n-1.
///
/// Self-loops are rejected, duplicate edges collapse to a single edge, and
/// adjacency is kept symmetric. Instances are cheap to copy and, once built,
/// safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    static Graph from_edges(int vertex_count,
                            std::span<const std::pair<int, int>> edges);

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Adds the edge {u, v}. Returns false if it was already present.
    /// Throws std::invalid_argument on self-loops, std::out_of_range on bad ids.
    bool add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    std::span<const int> neighbors(int v) const;
    int degree(int v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// Throws std::out_of_range unless 0 <= v < vertex_count().
    void check_vertex(int v) const;

private:
    std::vector<std::vector<int>> adjacency_;
    std::size_t edge_count_ = 0;
};

struct Ball {
    int center = 0;
    int radius = 0;
};

/// Certificate that the burning number is at most `horizon`: a set of balls
/// whose radii are pairwise distinct and all below the horizon. Unused radius
/// slots are fine; a cover that skips some radii still certifies the bound.
struct BurningSchedule {
    std::vector<Ball> balls;
    int horizon = 0;
};

struct ScheduleCheck {
    bool valid = false;
    std::vector<int> uncovered;  // ascending; empty iff valid
};

/// Hop distances from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Vertices at hop distance <= radius from `center`, ascending.
std::vector<int> ball(const Graph& g, int center, int radius);

/// Throws std::invalid_argument if the schedule breaks its own invariants
/// (duplicate radii, radius >= horizon, too many balls) and std::out_of_range
/// on centers outside the graph.
void check_schedule_invariants(const Graph& g, const BurningSchedule& s);

/// Checks that the union of the schedule's balls covers every vertex.
ScheduleCheck validate_schedule(const Graph& g, const BurningSchedule& s);

}  // namespace burn
