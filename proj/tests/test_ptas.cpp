#include "burn/ptas.hpp"

#include "burn/exact.hpp"
#include "burn/generators.hpp"

#include "doctest.h"
#include "support/oracles.hpp"

#include <algorithm>
#include <stdexcept>

using namespace burn;

namespace {

Graph path(int n) {
    GenParams p;
    p.n = n;
    return generate(InstanceKind::path, p, 0).graph;
}

std::vector<std::vector<int>> sorted_items(const CoverSet& s) {
    std::vector<std::vector<int>> out;
    for (const CoverVector& v : s.items()) out.push_back(v.counts);
    std::sort(out.begin(), out.end());
    return out;
}

// Same reachable multisets: each side dominated by a member of the other.
bool equivalent_under_fits(const CoverSet& dp,
                           const std::vector<std::vector<int>>& oracle,
                           const RadiusClasses& classes) {
    std::vector<std::vector<int>> dp_items = sorted_items(dp);
    for (const auto& v : dp_items)
        if (!std::binary_search(oracle.begin(), oracle.end(), v)) return false;
    for (const auto& v : oracle) {
        bool dominated = false;
        for (const CoverVector& e : dp.items())
            if (fits(e, CoverVector{v})) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rounded multiset and fits") {
    RadiusClasses classes{2, 4};  // radii 0, 2, 4, 6
    CHECK(classes.max_radius() == 6);
    CoverVector m = rounded_multiset(classes, 5);  // radii 0..4 round to 0,2,2,4,4
    CHECK(m.counts == std::vector<int>{1, 2, 2, 0});
    CHECK(m.total() == 5);
    CHECK_THROWS_AS(rounded_multiset(classes, 8), std::invalid_argument);

    CHECK(fits(CoverVector{{0, 1, 0, 0}}, m));
    CHECK(fits(m, m));
    CHECK_FALSE(fits(CoverVector{{0, 0, 0, 1}}, m));
    CHECK_FALSE(fits(CoverVector{{6, 0, 0, 0}}, m));
    CHECK(fits(CoverVector{{3, 2, 0, 0}}, m));  // class-2 budget can take class-1 balls
}

TEST_CASE("cover set pruning keeps only fit-minimal vectors") {
    RadiusClasses classes{1, 3};
    CoverSetOptions opts;
    opts.sum_cap = 10;
    CoverSet s(classes, opts);
    CHECK(s.insert(CoverVector{{0, 1, 0}}));
    CHECK_FALSE(s.insert(CoverVector{{0, 1, 0}}));  // duplicate
    CHECK(s.insert(CoverVector{{1, 0, 0}}));        // incomparable? no: fits into {0,1,0}
    // {1,0,0} fits into {0,1,0}, so the latter must be gone.
    CHECK(s.items().size() == 1);
    CHECK(s.items()[0].counts == std::vector<int>{1, 0, 0});
    CHECK_FALSE(s.insert(CoverVector{{0, 0, 1}}));  // {1,0,0} fits into it
    CHECK_FALSE(s.insert(CoverVector{{2, 0, 0}}));  // so does a second zero ball
    CHECK(s.items().size() == 1);
}

TEST_CASE("cover set respects the sum cap and overflow guard") {
    RadiusClasses classes{1, 2};
    CoverSetOptions opts;
    opts.sum_cap = 2;
    opts.prune = false;
    CoverSet s(classes, opts);
    CHECK_FALSE(s.insert(CoverVector{{2, 1}}));  // three balls, cap two
    CHECK(s.insert(CoverVector{{1, 1}}));

    opts.max_size = 1;
    CoverSet tiny(classes, opts);
    CHECK(tiny.insert(CoverVector{{1, 0}}));
    CHECK_THROWS_AS(tiny.insert(CoverVector{{0, 1}}), CoverSetOverflow);
}

TEST_CASE("sumset and union combine pointwise") {
    RadiusClasses classes{1, 2};
    CoverSetOptions opts;
    opts.sum_cap = 4;
    opts.prune = false;
    CoverSet a(classes, opts);
    a.insert(CoverVector{{1, 0}});
    a.insert(CoverVector{{0, 1}});
    CoverSet b(classes, opts);
    b.insert(CoverVector{{1, 0}});
    CoverSet sum = sumset(a, b);
    CHECK(sorted_items(sum) == std::vector<std::vector<int>>{{1, 1}, {2, 0}});
    CoverSet uni = set_union(a, b);
    CHECK(sorted_items(uni) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("cover sets match the partition oracle on tiny trees") {
    struct Case {
        const char* name;
        Graph g;
    };
    std::vector<Case> cases;
    cases.push_back({"path-5", path(5)});
    GenParams star;
    star.leaves = 4;
    cases.push_back({"star-4", generate(InstanceKind::star, star, 0).graph});
    GenParams spider;
    spider.legs = 3;
    spider.leg_length = 2;
    cases.push_back({"spider-3x2", generate(InstanceKind::spider, spider, 0).graph});
    GenParams tree;
    tree.n = 7;
    cases.push_back({"random-tree-7", generate(InstanceKind::random_tree, tree, 3).graph});

    for (auto& [name, g] : cases) {
        CAPTURE(name);
        for (int a : {1, 2}) {
            RadiusClasses classes{a, 4};
            auto oracle =
                burn::testing::oracle_cover_vectors(g, 0, a, classes.class_count);
            RootedForest forest = root_forest(g);

            CoverSetOptions exact_opts;
            exact_opts.sum_cap = g.vertex_count();
            exact_opts.prune = false;
            auto sets = cover_sets(forest, classes, exact_opts);
            REQUIRE(sets.size() == 1);
            CHECK(sorted_items(sets[0]) == oracle);

            CoverSetOptions pruned_opts;
            pruned_opts.sum_cap = g.vertex_count();
            auto pruned = cover_sets(forest, classes, pruned_opts);
            REQUIRE(pruned.size() == 1);
            CHECK(equivalent_under_fits(pruned[0], oracle, classes));
            CHECK(pruned[0].items().size() <= sets[0].items().size());
        }
    }
}

TEST_CASE("granularity one reproduces the exact burning number") {
    auto corpus = forest_corpus(60, 12, 0x9A);
    for (const auto& inst : corpus) {
        CAPTURE(inst.name);
        PtasOptions opts;
        opts.a = 1;
        PtasResult res = ptas_burning(inst.graph, opts);
        auto exact = exact_burning_number(inst.graph, inst.graph.vertex_count());
        REQUIRE(exact.status == SolveStatus::found);
        CHECK(res.b_star == exact.value);
        CHECK(res.interval_lo == exact.value);
        CHECK(res.interval_hi == exact.value);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->horizon == res.interval_hi);
        CHECK(burn::testing::oracle_schedule_covers(inst.graph, *res.witness));
    }
}

TEST_CASE("coarser granularities keep the optimum inside the interval") {
    auto corpus = forest_corpus(40, 12, 0x9B);
    for (const auto& inst : corpus) {
        int b = burn::testing::oracle_burning_number(inst.graph);
        for (int a : {2, 3}) {
            CAPTURE(inst.name);
            CAPTURE(a);
            PtasOptions opts;
            opts.a = a;
            PtasResult res = ptas_burning(inst.graph, opts);
            CHECK(res.a == a);
            CHECK(res.interval_lo == res.b_star);
            CHECK(res.interval_hi == res.b_star + a - 1);
            CHECK(res.interval_lo <= b);
            CHECK(b <= res.interval_hi);
            REQUIRE(res.witness.has_value());
            CHECK(res.witness->horizon == res.interval_hi);
            CHECK(burn::testing::oracle_schedule_covers(inst.graph, *res.witness));
        }
    }
}

TEST_CASE("epsilon picks the granularity from the greedy radius") {
    Graph g = path(100);
    PtasOptions opts;
    opts.epsilon = 0.5;
    PtasResult res = ptas_burning(g, opts);
    CHECK(res.a == std::max(1, int(0.5 * res.greedy_r / 3)));
    CHECK(res.interval_hi - res.interval_lo == res.a - 1);
}

TEST_CASE("hand checked sixteen vertex path") {
    PtasOptions opts;
    opts.a = 1;
    PtasResult res = ptas_burning(path(16), opts);
    CHECK(res.b_star == 4);
    opts.a = 2;
    PtasResult coarse = ptas_burning(path(16), opts);
    CHECK(coarse.interval_lo <= 4);
    CHECK(4 <= coarse.interval_hi);
}

TEST_CASE("single vertex burns in one step") {
    PtasOptions opts;
    opts.a = 1;
    PtasResult res = ptas_burning(path(1), opts);
    CHECK(res.b_star == 1);
    REQUIRE(res.witness.has_value());
    CHECK(validate_schedule(path(1), *res.witness).valid);
}

TEST_CASE("the shortened reach variant is not sound") {
    // Tightening the subtree reach by one drops real covers; the four vertex
    // path is the smallest witness. The default reach stays exact.
    PtasOptions sound;
    sound.a = 1;
    CHECK(ptas_burning(path(4), sound).b_star == 2);

    PtasOptions variant;
    variant.a = 1;
    variant.reach_delta = -1;
    int diverged = false;
    try {
        diverged = ptas_burning(path(4), variant).b_star != 2;
    } catch (const std::exception&) {
        diverged = true;
    }
    CHECK(diverged);
}

TEST_CASE("ptas rejects bad options") {
    CHECK_THROWS_AS(ptas_burning(Graph()), std::invalid_argument);
    PtasOptions opts;
    opts.a = 0;
    CHECK_THROWS_AS(ptas_burning(path(4), opts), std::invalid_argument);
    PtasOptions eps;
    eps.epsilon = -1.0;
    CHECK_THROWS_AS(ptas_burning(path(4), eps), std::invalid_argument);
    PtasOptions delta;
    delta.reach_delta = 0;
    CHECK_THROWS_AS(ptas_burning(path(4), delta), std::invalid_argument);

    Graph cyc(3);
    cyc.add_edge(0, 1);
    cyc.add_edge(1, 2);
    cyc.add_edge(2, 0);
    CHECK_THROWS_AS(ptas_burning(cyc), NotAForestError);
}
