#include "burn/greedy.hpp"

#include "burn/generators.hpp"

#include "doctest.h"
#include "support/oracles.hpp"

#include <stdexcept>

using namespace burn;

namespace {

Graph path(int n) {
    GenParams p;
    p.n = n;
    return generate(InstanceKind::path, p, 0).graph;
}

}  // namespace

TEST_CASE("min-index trace on the nine vertex path") {
    auto res = greedy_burning(path(9), TieBreak::min_index);
    CHECK(res.r == 4);
    CHECK(res.centers_in_order == std::vector<int>{0, 1, 3, 6});
    REQUIRE(res.schedule.balls.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(res.schedule.balls[i].radius == i);
    CHECK(res.schedule.horizon == 4);
    CHECK(validate_schedule(path(9), res.schedule).valid);
}

TEST_CASE("farthest tie-break also covers the nine vertex path") {
    auto res = greedy_burning(path(9), TieBreak::farthest);
    CHECK(res.centers_in_order.front() == 0);  // nothing covered yet, lowest index
    CHECK(res.centers_in_order[1] == 8);       // farthest from {0}
    CHECK(validate_schedule(path(9), res.schedule).valid);
}

TEST_CASE("greedy lands within the three approximation bracket") {
    for (auto tie : {TieBreak::min_index, TieBreak::farthest}) {
        auto corpus = mixed_corpus(80, 12, 0x6D);
        for (const auto& inst : corpus) {
            CAPTURE(inst.name);
            auto res = greedy_burning(inst.graph, tie);
            int b = burn::testing::oracle_burning_number(inst.graph);
            CHECK(b <= res.r);
            CHECK(res.r <= 3 * b);
            CHECK(burn::testing::oracle_schedule_covers(inst.graph, res.schedule));
        }
    }
}

TEST_CASE("disconnected graphs force a ball per component") {
    Graph g(3);  // an edge plus an isolated vertex
    g.add_edge(0, 1);
    auto res = greedy_burning(g);
    CHECK(validate_schedule(g, res.schedule).valid);
    CHECK(res.r >= 2);
}

TEST_CASE("greedy edge cases") {
    CHECK_THROWS_AS(greedy_burning(Graph()), std::invalid_argument);
    auto res = greedy_burning(path(1));
    CHECK(res.r == 1);
    CHECK(res.schedule.balls.size() == 1);
    CHECK(res.schedule.balls[0].radius == 0);
}

TEST_CASE("greedy is deterministic") {
    GenParams p;
    p.n = 30;
    Graph g = generate(InstanceKind::random_tree, p, 7).graph;
    auto a = greedy_burning(g);
    auto b = greedy_burning(g);
    CHECK(a.r == b.r);
    CHECK(a.centers_in_order == b.centers_in_order);
}
