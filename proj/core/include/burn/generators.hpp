#pragma once

#include "burn/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace burn {

enum class InstanceKind { path, star, spider, caterpillar, random_tree, grid, gnp };

struct GenParams {
    int n = 0;           // path, random_tree, gnp
    int leaves = 0;      // star
    int legs = 0;        // spider, caterpillar
    int leg_length = 0;  // spider
    int spine = 0;       // caterpillar
    int rows = 0;        // grid
    int cols = 0;        // grid
    double p = 0.0;      // gnp
};

struct GeneratedInstance {
    Graph graph;
    std::string name;
    /// Set only when a closed form exists (paths, stars); never guessed.
    std::optional<int> known_burning_number;
};

/// Deterministic given (kind, params, seed). random_tree attaches each new
/// vertex to a uniformly random earlier one; gnp samples each pair
/// independently. Throws std::invalid_argument on bad params.
GeneratedInstance generate(InstanceKind kind, const GenParams& params,
                           std::uint64_t seed);

std::optional<InstanceKind> parse_instance_kind(const std::string& name);

/// Seeded corpus of random trees and small forests, each at most max_n
/// vertices. Every fourth instance is a two-component forest.
std::vector<GeneratedInstance> forest_corpus(int count, int max_n, std::uint64_t seed);

/// Seeded mix of paths, stars, spiders, caterpillars, random trees, forests,
/// grids, cycles, complete graphs and G(n,p), all within max_n vertices.
std::vector<GeneratedInstance> mixed_corpus(int count, int max_n, std::uint64_t seed);

/// The ten connected graphs on at most four vertices, up to isomorphism.
std::vector<GeneratedInstance> connected_graphs_up_to_four();

}  // namespace burn
