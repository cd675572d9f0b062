#include "burn/generators.hpp"

#include "burn/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace burn {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument("generate: " + message);
}

Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

int ceil_sqrt(int n) {
    int r = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (r * r < n) ++r;
    while (r > 1 && (r - 1) * (r - 1) >= n) --r;
    return r;
}

// Each new vertex hangs off a uniformly random earlier one.
Graph make_random_tree(int n, std::mt19937_64& gen, int offset, Graph g) {
    for (int i = 1; i < n; ++i)
        g.add_edge(offset + rng::below(gen, i), offset + i);
    return g;
}

}  // namespace

GeneratedInstance generate(InstanceKind kind, const GenParams& params,
                           std::uint64_t seed) {
    GeneratedInstance out;
    std::mt19937_64 gen(rng::mix(seed, static_cast<std::uint64_t>(kind)));
    switch (kind) {
        case InstanceKind::path: {
            require(params.n >= 1, "path needs n >= 1");
            out.graph = make_path(params.n);
            out.name = "path-" + std::to_string(params.n);
            out.known_burning_number = ceil_sqrt(params.n);
            break;
        }
        case InstanceKind::star: {
            require(params.leaves >= 0, "star needs leaves >= 0");
            Graph g(params.leaves + 1);
            for (int i = 1; i <= params.leaves; ++i) g.add_edge(0, i);
            out.graph = std::move(g);
            out.name = "star-" + std::to_string(params.leaves);
            out.known_burning_number = params.leaves == 0 ? 1 : 2;
            break;
        }
        case InstanceKind::spider: {
            require(params.legs >= 0, "spider needs legs >= 0");
            require(params.legs == 0 || params.leg_length >= 1,
                    "spider needs leg_length >= 1");
            Graph g(1 + params.legs * params.leg_length);
            int next = 1;
            for (int leg = 0; leg < params.legs; ++leg) {
                int prev = 0;
                for (int i = 0; i < params.leg_length; ++i) {
                    g.add_edge(prev, next);
                    prev = next++;
                }
            }
            out.graph = std::move(g);
            out.name = "spider-" + std::to_string(params.legs) + "x" +
                       std::to_string(params.leg_length);
            break;
        }
        case InstanceKind::caterpillar: {
            require(params.spine >= 1, "caterpillar needs spine >= 1");
            require(params.legs >= 0, "caterpillar needs legs >= 0");
            Graph g(params.spine + params.legs);
            for (int i = 0; i + 1 < params.spine; ++i) g.add_edge(i, i + 1);
            for (int leg = 0; leg < params.legs; ++leg)
                g.add_edge(leg % params.spine, params.spine + leg);
            out.graph = std::move(g);
            out.name = "caterpillar-" + std::to_string(params.spine) + "+" +
                       std::to_string(params.legs);
            break;
        }
        case InstanceKind::random_tree: {
            require(params.n >= 1, "random_tree needs n >= 1");
            out.graph = make_random_tree(params.n, gen, 0, Graph(params.n));
            out.name = "random-tree-" + std::to_string(params.n) + "-s" +
                       std::to_string(seed);
            break;
        }
        case InstanceKind::grid: {
            require(params.rows >= 1 && params.cols >= 1,
                    "grid needs rows, cols >= 1");
            Graph g(params.rows * params.cols);
            for (int r = 0; r < params.rows; ++r) {
                for (int c = 0; c < params.cols; ++c) {
                    int id = r * params.cols + c;
                    if (c + 1 < params.cols) g.add_edge(id, id + 1);
                    if (r + 1 < params.rows) g.add_edge(id, id + params.cols);
                }
            }
            out.graph = std::move(g);
            out.name = "grid-" + std::to_string(params.rows) + "x" +
                       std::to_string(params.cols);
            break;
        }
        case InstanceKind::gnp: {
            require(params.n >= 1, "gnp needs n >= 1");
            require(params.p >= 0.0 && params.p <= 1.0, "gnp needs p in [0, 1]");
            Graph g(params.n);
            for (int u = 0; u < params.n; ++u)
                for (int v = u + 1; v < params.n; ++v)
                    if (rng::unit_double(gen) < params.p) g.add_edge(u, v);
            out.graph = std::move(g);
            out.name = "gnp-" + std::to_string(params.n) + "-s" + std::to_string(seed);
            break;
        }
    }
    return out;
}

std::optional<InstanceKind> parse_instance_kind(const std::string& name) {
    if (name == "path") return InstanceKind::path;
    if (name == "star") return InstanceKind::star;
    if (name == "spider") return InstanceKind::spider;
    if (name == "caterpillar") return InstanceKind::caterpillar;
    if (name == "random_tree" || name == "random-tree") return InstanceKind::random_tree;
    if (name == "grid") return InstanceKind::grid;
    if (name == "gnp") return InstanceKind::gnp;
    return std::nullopt;
}

std::vector<GeneratedInstance> forest_corpus(int count, int max_n,
                                             std::uint64_t seed) {
    if (count < 0 || max_n < 2)
        throw std::invalid_argument("forest_corpus: need count >= 0 and max_n >= 2");
    std::vector<GeneratedInstance> corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 gen(rng::mix(seed, static_cast<std::uint64_t>(i)));
        int n = 2 + rng::below(gen, max_n - 1);
        GeneratedInstance inst;
        if (i % 4 == 3 && n >= 2) {
            int n1 = 1 + rng::below(gen, n - 1);
            Graph g = make_random_tree(n1, gen, 0, Graph(n));
            inst.graph = make_random_tree(n - n1, gen, n1, std::move(g));
            inst.name = "forest-" + std::to_string(n1) + "+" +
                        std::to_string(n - n1) + "-i" + std::to_string(i);
        } else {
            inst.graph = make_random_tree(n, gen, 0, Graph(n));
            inst.name = "tree-" + std::to_string(n) + "-i" + std::to_string(i);
        }
        corpus.push_back(std::move(inst));
    }
    return corpus;
}

std::vector<GeneratedInstance> mixed_corpus(int count, int max_n,
                                            std::uint64_t seed) {
    if (count < 0 || max_n < 4)
        throw std::invalid_argument("mixed_corpus: need count >= 0 and max_n >= 4");
    std::vector<GeneratedInstance> corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 gen(rng::mix(seed, 0x6d69786564ull, static_cast<std::uint64_t>(i)));
        std::uint64_t inst_seed = gen();
        GenParams params;
        GeneratedInstance inst;
        switch (i % 10) {
            case 0:
                params.n = 1 + rng::below(gen, max_n);
                inst = generate(InstanceKind::path, params, inst_seed);
                break;
            case 1:
                params.leaves = rng::below(gen, max_n);
                inst = generate(InstanceKind::star, params, inst_seed);
                break;
            case 2: {
                params.legs = 1 + rng::below(gen, 4);
                params.leg_length =
                    1 + rng::below(gen, std::max(1, (max_n - 1) / params.legs));
                inst = generate(InstanceKind::spider, params, inst_seed);
                break;
            }
            case 3: {
                params.spine = 1 + rng::below(gen, max_n / 2);
                params.legs = rng::below(gen, max_n - params.spine + 1);
                inst = generate(InstanceKind::caterpillar, params, inst_seed);
                break;
            }
            case 4:
                params.n = 1 + rng::below(gen, max_n);
                inst = generate(InstanceKind::random_tree, params, inst_seed);
                break;
            case 5: {
                int n = std::max(2, rng::below(gen, max_n + 1));
                int n1 = 1 + rng::below(gen, n - 1);
                Graph g = make_random_tree(n1, gen, 0, Graph(n));
                inst.graph = make_random_tree(n - n1, gen, n1, std::move(g));
                inst.name = "forest-" + std::to_string(n1) + "+" + std::to_string(n - n1);
                break;
            }
            case 6: {
                params.rows = 1 + rng::below(gen, 3);
                params.cols = 1 + rng::below(gen, std::max(1, max_n / params.rows));
                inst = generate(InstanceKind::grid, params, inst_seed);
                break;
            }
            case 7: {
                // cycle C_n; no closed form asserted here
                int n = 3 + rng::below(gen, std::max(1, max_n - 2));
                Graph g(n);
                for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
                inst.graph = std::move(g);
                inst.name = "cycle-" + std::to_string(n);
                break;
            }
            case 8: {
                int n = 2 + rng::below(gen, max_n - 1);
                Graph g(n);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
                inst.graph = std::move(g);
                inst.name = "complete-" + std::to_string(n);
                break;
            }
            default: {
                params.n = 2 + rng::below(gen, max_n - 1);
                params.p = 0.1 + 0.8 * rng::unit_double(gen);
                inst = generate(InstanceKind::gnp, params, inst_seed);
                break;
            }
        }
        inst.name += "-c" + std::to_string(i);
        corpus.push_back(std::move(inst));
    }
    return corpus;
}

std::vector<GeneratedInstance> connected_graphs_up_to_four() {
    auto build = [](int n, std::vector<std::pair<int, int>> edges,
                    const std::string& name) {
        GeneratedInstance inst;
        inst.graph = Graph::from_edges(n, edges);
        inst.name = name;
        return inst;
    };
    std::vector<GeneratedInstance> out;
    out.push_back(build(1, {}, "k1"));
    out.push_back(build(2, {{0, 1}}, "k2"));
    out.push_back(build(3, {{0, 1}, {1, 2}}, "p3"));
    out.push_back(build(3, {{0, 1}, {1, 2}, {0, 2}}, "k3"));
    out.push_back(build(4, {{0, 1}, {1, 2}, {2, 3}}, "p4"));
    out.push_back(build(4, {{0, 1}, {0, 2}, {0, 3}}, "k13"));
    out.push_back(build(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, "paw"));
    out.push_back(build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, "c4"));
    out.push_back(build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}, "diamond"));
    out.push_back(
        build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, "k4"));
    return out;
}

}  // namespace burn
