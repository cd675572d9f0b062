#include "burn/forest.hpp"

#include <string>

namespace burn {

RootedForest root_forest(const Graph& g) {
    if (static_cast<long long>(g.edge_count()) >= g.vertex_count() &&
        g.vertex_count() > 0)
        throw NotAForestError("graph has " + std::to_string(g.edge_count()) +
                              " edges on " + std::to_string(g.vertex_count()) +
                              " vertices; a forest has fewer edges than vertices");
    RootedForest f;
    f.graph = g;
    int n = g.vertex_count();
    f.parent.assign(n, -1);
    f.depth.assign(n, -1);
    f.children.assign(n, {});
    for (int r = 0; r < n; ++r) {
        if (f.depth[r] != -1) continue;
        f.roots.push_back(r);
        f.depth[r] = 0;
        std::vector<int> queue{r};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : g.neighbors(v)) {
                if (u == f.parent[v]) continue;
                if (f.depth[u] != -1)
                    throw NotAForestError("cycle through vertex " + std::to_string(u));
                f.parent[u] = v;
                f.depth[u] = f.depth[v] + 1;
                f.children[v].push_back(u);
                queue.push_back(u);
            }
        }
    }
    return f;
}

}  // namespace burn
