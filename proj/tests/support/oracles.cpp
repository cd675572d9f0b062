#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace burn::testing {
namespace {

std::uint64_t ball_mask(const Graph& g, int center, int radius) {
    std::uint64_t mask = 0;
    for (int v : ball(g, center, radius)) mask |= std::uint64_t{1} << v;
    return mask;
}

// Does any choice of centers for radii r, r-1, ..., 0 finish the cover?
bool tuple_cover(const std::vector<std::vector<std::uint64_t>>& balls, int n,
                 std::uint64_t covered, std::uint64_t full, int r) {
    if (covered == full) return true;
    if (r < 0) return false;
    for (int c = 0; c < n; ++c)
        if (tuple_cover(balls, n, covered | balls[c][r], full, r - 1)) return true;
    return false;
}

}  // namespace

int oracle_burning_number(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1 || n > 30) throw std::invalid_argument("oracle_burning_number: n out of range");
    std::vector<std::vector<std::uint64_t>> balls(n, std::vector<std::uint64_t>(n));
    for (int v = 0; v < n; ++v)
        for (int r = 0; r < n; ++r) balls[v][r] = ball_mask(g, v, r);
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (int b = 1; b <= n; ++b)
        if (tuple_cover(balls, n, 0, full, b - 1)) return b;
    return n;
}

int oracle_domination_number(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1 || n > 20) throw std::invalid_argument("oracle_domination_number: n out of range");
    std::vector<std::uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = std::uint32_t{1} << v;
        for (int u : g.neighbors(v)) closed[v] |= std::uint32_t{1} << u;
    }
    std::uint32_t full = (n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
    int best = n;
    for (std::uint32_t pick = 1; pick <= full; ++pick) {
        if (std::popcount(pick) >= best) continue;
        std::uint32_t dominated = 0;
        for (int v = 0; v < n; ++v)
            if (pick & (std::uint32_t{1} << v)) dominated |= closed[v];
        if (dominated == full) best = std::popcount(pick);
    }
    return best;
}

namespace {

bool assign_slots(const std::vector<int>& floors, std::size_t i,
                  std::vector<char>& used, int r) {
    if (i == floors.size()) return true;
    for (int s = floors[i]; s < r; ++s) {
        if (used[s]) continue;
        used[s] = 1;
        if (assign_slots(floors, i + 1, used, r)) return true;
        used[s] = 0;
    }
    return false;
}

}  // namespace

int oracle_min_domination_bound(const std::vector<double>& radii) {
    if (radii.empty()) return 0;
    std::vector<int> floors;
    for (double a : radii) {
        if (a < 0) throw std::invalid_argument("negative radius");
        floors.push_back(static_cast<int>(std::floor(a)));
    }
    int max_floor = *std::max_element(floors.begin(), floors.end());
    int k = static_cast<int>(floors.size());
    for (int r = std::max(k, max_floor + 1); ; ++r) {
        std::vector<char> used(r, 0);
        if (assign_slots(floors, 0, used, r)) return r;
    }
}

bool oracle_schedule_covers(const Graph& g, const BurningSchedule& s) {
    if (s.horizon < 1) return false;
    if (static_cast<int>(s.balls.size()) > s.horizon) return false;
    std::set<int> radii;
    std::vector<char> hit(g.vertex_count(), 0);
    for (const Ball& b : s.balls) {
        if (b.center < 0 || b.center >= g.vertex_count()) return false;
        if (b.radius < 0 || b.radius >= s.horizon) return false;
        if (!radii.insert(b.radius).second) return false;
        for (int v : ball(g, b.center, b.radius)) hit[v] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

namespace {

struct PartitionContext {
    const std::vector<std::vector<int>>& dist;
    const std::vector<int>& verts;
    int granularity;
    int class_count;
    std::set<std::vector<int>> found;
};

// Smallest class able to cover the part from one of its own vertices, or -1.
int min_class(const PartitionContext& ctx, const std::vector<int>& part) {
    int best = -1;
    for (int c : part) {
        int ecc = 0;
        for (int u : part) ecc = std::max(ecc, ctx.dist[c][u]);
        int cls = (ecc + ctx.granularity - 1) / ctx.granularity;
        if (best < 0 || cls < best) best = cls;
    }
    return best < ctx.class_count ? best : -1;
}

bool connected_part(const PartitionContext& ctx, const std::vector<int>& part) {
    std::vector<int> frontier{part[0]};
    std::set<int> seen{part[0]};
    while (!frontier.empty()) {
        int v = frontier.back();
        frontier.pop_back();
        for (int u : part)
            if (!seen.count(u) && ctx.dist[v][u] == 1) {
                seen.insert(u);
                frontier.push_back(u);
            }
    }
    return seen.size() == part.size();
}

void enumerate_assignments(PartitionContext& ctx,
                           const std::vector<int>& min_classes, std::size_t i,
                           std::vector<int>& counts) {
    if (i == min_classes.size()) {
        ctx.found.insert(counts);
        return;
    }
    for (int cls = min_classes[i]; cls < ctx.class_count; ++cls) {
        ++counts[cls];
        enumerate_assignments(ctx, min_classes, i + 1, counts);
        --counts[cls];
    }
}

void enumerate_partitions(PartitionContext& ctx, std::size_t i,
                          std::vector<std::vector<int>>& blocks) {
    if (i == ctx.verts.size()) {
        std::vector<int> min_classes;
        for (const auto& part : blocks) {
            if (!connected_part(ctx, part)) return;
            int cls = min_class(ctx, part);
            if (cls < 0) return;
            min_classes.push_back(cls);
        }
        std::vector<int> counts(ctx.class_count, 0);
        enumerate_assignments(ctx, min_classes, 0, counts);
        return;
    }
    int v = ctx.verts[i];
    // Index loop: deeper levels append to `blocks`, so references would dangle.
    std::size_t level_blocks = blocks.size();
    for (std::size_t bi = 0; bi < level_blocks; ++bi) {
        blocks[bi].push_back(v);
        enumerate_partitions(ctx, i + 1, blocks);
        blocks[bi].pop_back();
    }
    blocks.push_back({v});
    enumerate_partitions(ctx, i + 1, blocks);
    blocks.pop_back();
}

}  // namespace

std::vector<std::vector<int>> oracle_cover_vectors(const Graph& g, int root,
                                                   int granularity,
                                                   int class_count) {
    std::vector<int> from_root = bfs_distances(g, root);
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (from_root[v] != kUnreachable) verts.push_back(v);
    if (verts.size() > 7) throw std::invalid_argument("oracle_cover_vectors: component too large");
    std::vector<std::vector<int>> dist(g.vertex_count());
    for (int v : verts) dist[v] = bfs_distances(g, v);
    PartitionContext ctx{dist, verts, granularity, class_count, {}};
    std::vector<std::vector<int>> blocks;
    enumerate_partitions(ctx, 0, blocks);
    return {ctx.found.begin(), ctx.found.end()};
}

}  // namespace burn::testing
