#include "burn/ptas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace burn {

int CoverVector::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

CoverVector rounded_multiset(const RadiusClasses& classes, int b) {
    if (b < 1) throw std::invalid_argument("rounded_multiset: b must be positive");
    int a = classes.granularity;
    int top = a * ((b - 1 + a - 1) / a);
    if (top > classes.max_radius())
        throw std::invalid_argument("rounded_multiset: b = " + std::to_string(b) +
                                    " exceeds the radius classes");
    CoverVector v;
    v.counts.assign(classes.class_count, 0);
    for (int i = 0; i < b; ++i) ++v.counts[(i + a - 1) / a];
    return v;
}

bool fits(const CoverVector& c, const CoverVector& budget) {
    if (c.counts.size() != budget.counts.size())
        throw std::invalid_argument("fits: class mismatch");
    // Greedy matching from the largest class down = Hall's condition on
    // suffix sums.
    long long need = 0, have = 0;
    for (int j = static_cast<int>(c.counts.size()) - 1; j >= 0; --j) {
        need += c.counts[j];
        have += budget.counts[j];
        if (need > have) return false;
    }
    return true;
}

CoverSet::CoverSet(RadiusClasses classes, CoverSetOptions options)
    : classes_(classes), options_(options) {}

bool CoverSet::insert(CoverVector v) {
    if (static_cast<int>(v.counts.size()) != classes_.class_count)
        throw std::invalid_argument("CoverSet::insert: class mismatch");
    if (options_.sum_cap > 0 && v.total() > options_.sum_cap) return false;
    if (options_.prune) {
        for (const CoverVector& e : items_)
            if (fits(e, v)) return false;  // v is redundant (covers duplicates too)
        std::erase_if(items_, [&](const CoverVector& e) { return fits(v, e); });
    } else {
        if (std::find(items_.begin(), items_.end(), v) != items_.end()) return false;
    }
    items_.push_back(std::move(v));
    if (items_.size() > options_.max_size)
        throw CoverSetOverflow("cover set exceeded the configured size cap");
    return true;
}

namespace {

void add_into(CoverVector& acc, const CoverVector& v) {
    for (std::size_t j = 0; j < acc.counts.size(); ++j) acc.counts[j] += v.counts[j];
}

void check_same_classes(const CoverSet& a, const CoverSet& b, const char* op) {
    if (!(a.classes() == b.classes()))
        throw std::invalid_argument(std::string(op) + ": class mismatch");
}

}  // namespace

CoverSet sumset(const CoverSet& a, const CoverSet& b) {
    check_same_classes(a, b, "sumset");
    CoverSet out(a.classes(), a.options());
    for (const CoverVector& u : a.items()) {
        for (const CoverVector& v : b.items()) {
            CoverVector s = u;
            add_into(s, v);
            out.insert(std::move(s));
        }
    }
    return out;
}

CoverSet set_union(const CoverSet& a, const CoverSet& b) {
    check_same_classes(a, b, "set_union");
    CoverSet out(a.classes(), a.options());
    for (const CoverVector& u : a.items()) out.insert(u);
    for (const CoverVector& v : b.items()) out.insert(v);
    return out;
}

namespace {

struct Ref {
    int vertex;
    int k;
    int item;
};

// One generating choice for a retained vector. A "part" entry contributes a
// ball (center v0, class rclass); a pass-through entry only forwards to the
// referenced entries. References always point into tables finalized before
// the referencing set is built, so later evictions cannot dangle.
struct Prov {
    bool part = false;
    int v0 = -1;
    int rclass = -1;
    std::vector<Ref> children;
};

// CoverSet with a provenance payload per retained vector.
class ProvSet {
public:
    ProvSet(int class_count, const CoverSetOptions& options)
        : class_count_(class_count), options_(options) {}

    bool insert(CoverVector v, Prov p) {
        if (options_.sum_cap > 0 && v.total() > options_.sum_cap) return false;
        if (options_.prune) {
            for (const CoverVector& e : items_)
                if (fits(e, v)) return false;
            std::size_t w = 0;
            for (std::size_t i = 0; i < items_.size(); ++i) {
                if (!fits(v, items_[i])) {
                    if (w != i) {
                        items_[w] = std::move(items_[i]);
                        provs_[w] = std::move(provs_[i]);
                    }
                    ++w;
                }
            }
            items_.resize(w);
            provs_.resize(w);
        } else {
            if (std::find(items_.begin(), items_.end(), v) != items_.end())
                return false;
        }
        items_.push_back(std::move(v));
        provs_.push_back(std::move(p));
        if (items_.size() > options_.max_size)
            throw CoverSetOverflow("cover set exceeded the configured size cap");
        return true;
    }

    std::size_t size() const { return items_.size(); }
    const std::vector<CoverVector>& items() const { return items_; }
    const std::vector<Prov>& provs() const { return provs_; }
    int class_count() const { return class_count_; }

private:
    int class_count_;
    CoverSetOptions options_;
    std::vector<CoverVector> items_;
    std::vector<Prov> provs_;
};

class DpEngine {
public:
    DpEngine(const RootedForest& forest, const RadiusClasses& classes,
             const CoverSetOptions& options, int reach_delta)
        : f_(forest),
          classes_(classes),
          options_(options),
          reach_delta_(reach_delta),
          n_(forest.graph.vertex_count()),
          height_(n_, 0),
          tables_(n_) {
        if (reach_delta_ != 1 && reach_delta_ != -1)
            throw std::invalid_argument("reach_delta must be +1 or -1");
        for (int root : f_.roots) run_component(root);
    }

    const ProvSet& c0(int root) const { return tables_[root][0]; }

    // Expands a retained vector into the balls of one generating cover.
    void expand(int vertex, int k, int item, std::vector<Ball>& parts) const {
        const Prov& p = tables_[vertex][k].provs()[item];
        if (p.part) parts.push_back({p.v0, classes_.radius_of(p.rclass)});
        for (const Ref& r : p.children) expand(r.vertex, r.k, r.item, parts);
    }

    std::size_t max_set_size() const { return max_set_size_; }

private:
    // Partial sums while folding child sets, with the refs chosen so far.
    struct Partial {
        CoverVector vec;
        std::vector<Ref> refs;
    };

    int kcap(int v) const {
        return std::min(classes_.max_radius(), height_[v] + 1);
    }

    // C_k stabilizes once the excluded region may swallow all of D(v).
    const ProvSet& entry(int v, int k) const {
        return tables_[v][std::clamp(k, 0, kcap(v))];
    }

    std::vector<Partial> fold(const std::vector<Partial>& partials, int v, int k) const {
        int kq = std::clamp(k, 0, kcap(v));
        const ProvSet& child = tables_[v][kq];
        // A pruned intermediate set keeps the fold small; dropping dominated
        // partials cannot lose a minimal final vector because vector addition
        // preserves the fits order.
        ProvSet acc(classes_.class_count, options_);
        for (const Partial& p : partials) {
            for (std::size_t i = 0; i < child.items().size(); ++i) {
                CoverVector sum = p.vec;
                add_into(sum, child.items()[i]);
                Prov prov;
                prov.children = p.refs;
                prov.children.push_back({v, kq, static_cast<int>(i)});
                acc.insert(std::move(sum), std::move(prov));
            }
        }
        std::vector<Partial> out;
        out.reserve(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i)
            out.push_back({acc.items()[i], acc.provs()[i].children});
        return out;
    }

    void run_component(int root) {
        std::vector<int> order{root};
        for (std::size_t head = 0; head < order.size(); ++head)
            for (int w : f_.children[order[head]]) order.push_back(w);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            for (int w : f_.children[v])
                height_[v] = std::max(height_[v], height_[w] + 1);
            compute_tables(v);
        }
    }

    void compute_tables(int v) {
        auto& table = tables_[v];
        table.assign(kcap(v) + 1, ProvSet(classes_.class_count, options_));
        compute_c0(v, table[0]);
        note(table[0].size());
        for (int k = 1; k <= kcap(v); ++k) {
            ProvSet& set = table[k];
            for (std::size_t i = 0; i < table[0].items().size(); ++i) {
                Prov p;
                p.children.push_back({v, 0, static_cast<int>(i)});
                set.insert(table[0].items()[i], std::move(p));
            }
            std::vector<Partial> partials{{zero_vector(), {}}};
            for (int w : f_.children[v]) partials = fold(partials, w, k - 1);
            for (Partial& p : partials) {
                Prov prov;
                prov.children = std::move(p.refs);
                set.insert(std::move(p.vec), std::move(prov));
            }
            note(set.size());
        }
    }

    // C_0(v): the part containing v is a ball at some v0 in D(v) with class
    // radius r >= d(v, v0); subtrees hanging off the v0-v path are covered
    // by child entries whose exclusion reach is tied to r.
    void compute_c0(int v, ProvSet& out) {
        std::vector<int> subtree{v};
        for (std::size_t head = 0; head < subtree.size(); ++head)
            for (int w : f_.children[subtree[head]]) subtree.push_back(w);
        for (int v0 : subtree) {
            int dist_v_v0 = f_.depth[v0] - f_.depth[v];
            for (int j = 0; j < classes_.class_count; ++j) {
                int r = classes_.radius_of(j);
                if (r < dist_v_v0) continue;
                std::vector<Partial> partials{{zero_vector(), {}}};
                int p = v0;
                int below = -1;  // the path vertex hanging under p, if any
                int dist_v0_p = 0;
                while (true) {
                    for (int c : f_.children[p]) {
                        if (c == below) continue;
                        partials = fold(partials, c, r - (dist_v0_p + 1) + reach_delta_);
                    }
                    if (p == v) break;
                    below = p;
                    p = f_.parent[p];
                    ++dist_v0_p;
                }
                for (Partial& part : partials) {
                    CoverVector vec = std::move(part.vec);
                    ++vec.counts[j];
                    Prov prov;
                    prov.part = true;
                    prov.v0 = v0;
                    prov.rclass = j;
                    prov.children = std::move(part.refs);
                    out.insert(std::move(vec), std::move(prov));
                }
            }
        }
    }

    CoverVector zero_vector() const {
        CoverVector v;
        v.counts.assign(classes_.class_count, 0);
        return v;
    }

    void note(std::size_t size) { max_set_size_ = std::max(max_set_size_, size); }

    const RootedForest& f_;
    RadiusClasses classes_;
    CoverSetOptions options_;
    int reach_delta_;
    int n_;
    std::vector<int> height_;
    std::vector<std::vector<ProvSet>> tables_;
    std::size_t max_set_size_ = 0;
};

}  // namespace

std::vector<CoverSet> cover_sets(const RootedForest& forest,
                                 const RadiusClasses& classes,
                                 const CoverSetOptions& options, int reach_delta) {
    DpEngine engine(forest, classes, options, reach_delta);
    std::vector<CoverSet> out;
    out.reserve(forest.roots.size());
    for (int root : forest.roots) {
        CoverSet set(classes, options);
        for (const CoverVector& v : engine.c0(root).items()) set.insert(v);
        out.push_back(std::move(set));
    }
    return out;
}

PtasResult ptas_burning(const Graph& g, const PtasOptions& options) {
    if (g.vertex_count() == 0) throw std::invalid_argument("ptas_burning: empty graph");
    RootedForest forest = root_forest(g);
    GreedyResult greedy = greedy_burning(g, options.greedy_tie_break);

    int a = 1;
    if (options.a) {
        if (*options.a < 1)
            throw std::invalid_argument("ptas_burning: granularity must be positive");
        a = *options.a;
    } else if (options.epsilon) {
        if (!(*options.epsilon > 0.0))
            throw std::invalid_argument("ptas_burning: epsilon must be positive");
        a = std::max(1, static_cast<int>(std::floor(*options.epsilon * greedy.r / 3.0)));
    }

    RadiusClasses classes;
    classes.granularity = a;
    classes.class_count = (greedy.r - 1 + a - 1) / a + 1;
    CoverSetOptions copts;
    copts.sum_cap = g.vertex_count();
    copts.prune = options.prune;
    copts.max_size = options.max_set_size;

    DpEngine engine(forest, classes, copts, options.reach_delta);

    // Covers of the whole forest: fold the per-root sets, tracking one
    // originating item per root for witness reconstruction.
    struct Combined {
        CoverVector vec;
        std::vector<std::pair<int, int>> picks;  // (root, item)
    };
    std::vector<Combined> combined{{CoverVector{std::vector<int>(classes.class_count, 0)}, {}}};
    for (int root : forest.roots) {
        const ProvSet& c0 = engine.c0(root);
        ProvSet acc(classes.class_count, copts);
        for (const Combined& c : combined) {
            for (std::size_t i = 0; i < c0.items().size(); ++i) {
                CoverVector sum = c.vec;
                add_into(sum, c0.items()[i]);
                Prov prov;
                prov.children = {};
                for (auto [r, item] : c.picks) prov.children.push_back({r, 0, item});
                prov.children.push_back({root, 0, static_cast<int>(i)});
                acc.insert(std::move(sum), std::move(prov));
            }
        }
        combined.clear();
        for (std::size_t i = 0; i < acc.size(); ++i) {
            Combined c;
            c.vec = acc.items()[i];
            for (const Ref& ref : acc.provs()[i].children)
                c.picks.emplace_back(ref.vertex, ref.item);
            combined.push_back(std::move(c));
        }
    }

    PtasResult result;
    result.a = a;
    result.greedy_r = greedy.r;
    result.max_cover_set_size = engine.max_set_size();

    int b_star = 0;
    const Combined* chosen = nullptr;
    for (int b = 1; b <= greedy.r && chosen == nullptr; ++b) {
        CoverVector budget = rounded_multiset(classes, b);
        for (const Combined& c : combined) {
            if (fits(c.vec, budget)) {
                b_star = b;
                chosen = &c;
                break;
            }
        }
    }
    if (chosen == nullptr)
        throw std::logic_error("ptas_burning: no cover found up to the greedy bound");

    result.b_star = b_star;
    result.interval_lo = b_star;
    result.interval_hi = b_star + a - 1;

    if (options.emit_witness) {
        std::vector<Ball> parts;
        for (auto [root, item] : chosen->picks) engine.expand(root, 0, item, parts);
        std::sort(parts.begin(), parts.end(), [](const Ball& x, const Ball& y) {
            if (x.radius != y.radius) return x.radius > y.radius;
            return x.center < y.center;
        });
        // The t-th largest part (1-based) fits the budget element for index
        // b_star - t, and i <= a*ceil(i/a) <= i + a - 1 lets the schedule use
        // radius i + a - 1 instead; radii stay distinct and below the horizon.
        BurningSchedule schedule;
        schedule.horizon = b_star + a - 1;
        for (std::size_t t = 0; t < parts.size(); ++t) {
            int slot = b_star - 1 - static_cast<int>(t);
            if (slot < 0)
                throw std::logic_error("ptas_burning: witness has more parts than slots");
            schedule.balls.push_back({parts[t].center, slot + a - 1});
        }
        result.witness = std::move(schedule);
    }
    return result;
}

}  // namespace burn
