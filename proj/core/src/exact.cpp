#include "burn/exact.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace burn {

namespace {

using Bitset = boost::dynamic_bitset<>;
using Clock = std::chrono::steady_clock;

struct TimedOut {};

struct Deadline {
    std::optional<Clock::time_point> at;

    explicit Deadline(const SearchBudget& budget) {
        if (budget.time_limit_sec)
            at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(*budget.time_limit_sec));
    }

    void check(std::uint64_t nodes) const {
        if (at && (nodes & 1023) == 0 && Clock::now() > *at) throw TimedOut{};
    }
};

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> dist(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dist[v] = bfs_distances(g, v);
    return dist;
}

class BurnSearch {
public:
    BurnSearch(const Graph& g, const Deadline& deadline)
        : g_(g), n_(g.vertex_count()), dist_(all_pairs_distances(g)), deadline_(deadline) {}

    std::uint64_t nodes() const { return nodes_; }

    // True iff some horizon-b schedule covers V; fills `witness` on success.
    bool solvable(int b, BurningSchedule& witness) {
        while (static_cast<int>(masks_.size()) < b) grow_masks();
        placements_.clear();
        Bitset covered(n_);
        if (!dfs(b - 1, covered)) return false;
        witness.balls = placements_;
        witness.horizon = b;
        return true;
    }

private:
    // masks_[r][v] = bitmask of ball(g, v, r).
    void grow_masks() {
        int r = static_cast<int>(masks_.size());
        std::vector<Bitset> layer(n_, Bitset(n_));
        for (int v = 0; v < n_; ++v) {
            if (r == 0) {
                layer[v].set(v);
            } else {
                layer[v] = masks_[r - 1][v];
                for (int u : g_.neighbors(v)) layer[v] |= masks_[r - 1][u];
            }
        }
        masks_.push_back(std::move(layer));
    }

    // Uncovered vertices pairwise farther apart than 2*radius need one ball
    // each, and only radius+1 balls remain. A greedy packing that exceeds
    // that count proves the branch dead.
    bool packing_exceeds(const Bitset& covered, int radius) const {
        std::vector<int> chosen;
        for (int v = 0; v < n_; ++v) {
            if (covered.test(v)) continue;
            bool far = true;
            for (int c : chosen) {
                int d = dist_[v][c];
                if (d != kUnreachable && d <= 2 * radius) {
                    far = false;
                    break;
                }
            }
            if (far) {
                chosen.push_back(v);
                if (static_cast<int>(chosen.size()) > radius + 1) return true;
            }
        }
        return false;
    }

    bool dfs(int radius, const Bitset& covered) {
        ++nodes_;
        deadline_.check(nodes_);
        if (covered.all()) return true;
        if (radius < 0) return false;
        if (packing_exceeds(covered, radius)) return false;

        // Candidate centers must cover something new; candidates whose new
        // coverage is contained in another's are interchangeable with it.
        struct Candidate {
            int center;
            Bitset gain;
        };
        std::vector<Candidate> cands;
        for (int v = 0; v < n_; ++v) {
            Bitset gain = masks_[radius][v] & ~covered;
            if (gain.any()) cands.push_back({v, std::move(gain)});
        }
        std::vector<char> dropped(cands.size(), 0);
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (dropped[i]) continue;
            for (std::size_t j = 0; j < cands.size(); ++j) {
                if (i == j || dropped[j]) continue;
                if (cands[i].gain.is_subset_of(cands[j].gain) &&
                    (cands[i].gain != cands[j].gain || j < i)) {
                    dropped[i] = 1;
                    break;
                }
            }
        }
        std::vector<int> order;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (!dropped[i]) order.push_back(static_cast<int>(i));
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            auto ca = cands[a].gain.count(), cb = cands[b].gain.count();
            if (ca != cb) return ca > cb;
            return cands[a].center < cands[b].center;
        });

        for (int i : order) {
            placements_.push_back({cands[i].center, radius});
            if (dfs(radius - 1, covered | cands[i].gain)) return true;
            placements_.pop_back();
        }
        return dfs(radius - 1, covered);  // leave this radius unused
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> dist_;
    const Deadline& deadline_;
    std::vector<std::vector<Bitset>> masks_;
    std::vector<Ball> placements_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

BurningSearchResult exact_burning_number(const Graph& g, int b_max,
                                         const SearchBudget& budget) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("exact_burning_number: empty graph");
    if (b_max < 1) throw std::invalid_argument("exact_burning_number: b_max must be positive");
    Deadline deadline(budget);
    BurnSearch search(g, deadline);
    BurningSearchResult result;
    result.b_max = b_max;
    try {
        for (int b = 1; b <= b_max; ++b) {
            BurningSchedule witness;
            if (search.solvable(b, witness)) {
                result.status = SolveStatus::found;
                result.value = b;
                result.witness = std::move(witness);
                break;
            }
        }
    } catch (const TimedOut&) {
        result.status = SolveStatus::timed_out;
    }
    result.nodes_explored = search.nodes();
    return result;
}

namespace {

class DominationSearch {
public:
    DominationSearch(const Graph& g, const Deadline& deadline)
        : g_(g), n_(g.vertex_count()), deadline_(deadline), closed_(n_, Bitset(n_)) {
        int max_closed = 0;
        for (int v = 0; v < n_; ++v) {
            closed_[v].set(v);
            for (int u : g.neighbors(v)) closed_[v].set(u);
            max_closed = std::max(max_closed, g.degree(v) + 1);
        }
        max_closed_ = max_closed;
    }

    std::uint64_t nodes() const { return nodes_; }

    bool solvable(int k, std::vector<int>& witness) {
        chosen_.clear();
        Bitset dominated(n_);
        if (!dfs(k, dominated)) return false;
        witness = chosen_;
        std::sort(witness.begin(), witness.end());
        return true;
    }

private:
    bool dfs(int k, const Bitset& dominated) {
        ++nodes_;
        deadline_.check(nodes_);
        if (dominated.all()) return true;
        if (k == 0) return false;
        std::size_t undominated = dominated.size() - dominated.count();
        if (undominated > static_cast<std::size_t>(k) * max_closed_) return false;
        int v = static_cast<int>((~dominated).find_first());
        // Whatever dominates v lies in N[v]; branch over it, lowest index first.
        std::vector<int> branch{v};
        branch.insert(branch.end(), g_.neighbors(v).begin(), g_.neighbors(v).end());
        std::sort(branch.begin() + 1, branch.end());
        for (int u : branch) {
            chosen_.push_back(u);
            if (dfs(k - 1, dominated | closed_[u])) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int n_;
    const Deadline& deadline_;
    std::vector<Bitset> closed_;
    std::size_t max_closed_ = 0;
    std::vector<int> chosen_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

DominationSearchResult exact_domination_number(const Graph& g,
                                               const SearchBudget& budget) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("exact_domination_number: empty graph");
    Deadline deadline(budget);
    DominationSearch search(g, deadline);
    DominationSearchResult result;
    try {
        for (int k = 1; k <= g.vertex_count(); ++k) {
            std::vector<int> witness;
            if (search.solvable(k, witness)) {
                result.status = SolveStatus::found;
                result.value = k;
                result.witness = std::move(witness);
                break;
            }
        }
    } catch (const TimedOut&) {
        result.status = SolveStatus::timed_out;
    }
    result.nodes_explored = search.nodes();
    return result;
}

}  // namespace burn
