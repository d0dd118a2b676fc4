#include <doctest.h>

#include <sstream>

#include "forestlab/graph.hpp"
#include "test_util.hpp"

using namespace forestlab;

TEST_CASE("components of small graphs") {
    CHECK(components(LabelledGraph(3, {})).count() == 3);
    CHECK(components(LabelledGraph(3, {{1, 2}, {2, 3}})).count() == 1);

    const auto part = components(LabelledGraph(4, {{1, 2}, {3, 4}}));
    REQUIRE(part.count() == 2);
    CHECK(part.blocks[0] == std::vector<int>{1, 2});
    CHECK(part.blocks[1] == std::vector<int>{3, 4});
    CHECK(part.block_of[3] == 1);
}

TEST_CASE("a single vertex is connected") {
    CHECK(is_connected(LabelledGraph(1, {})));
}

TEST_CASE("bridges of small graphs") {
    CHECK(find_bridges(LabelledGraph(3, {{1, 2}, {2, 3}, {1, 3}})).empty());
    CHECK(find_bridges(LabelledGraph(3, {{1, 2}, {2, 3}})) ==
          std::vector<Edge>{{1, 2}, {2, 3}});
    // triangle plus pendant edge: only the pendant edge is a bridge
    const LabelledGraph g(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    CHECK(find_bridges(g) == std::vector<Edge>{{3, 4}});
    CHECK(find_bridges(g) == test::bridges_by_recount(g));
}

TEST_CASE("bridges match the per-edge recount oracle on random graphs") {
    SplitMix64 rng(0xB81D6E5u);
    for (int trial = 0; trial < 1200; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(6));  // up to 7
        const LabelledGraph g = test::random_graph(n, rng);
        CHECK(find_bridges(g) == test::bridges_by_recount(g));
    }
}

TEST_CASE("bridge core") {
    // every tree edge is a bridge
    const LabelledGraph path(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(bridge_core(path).edge_count() == 0);

    const LabelledGraph g(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    const LabelledGraph core = bridge_core(g);
    CHECK(core.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(find_bridges(core).empty());
    CHECK(bridge_core(core) == core);  // idempotent

    const LabelledGraph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(bridge_core(triangle) == triangle);
}

TEST_CASE("bridge core is always bridgeless (randomized)") {
    SplitMix64 rng(0x5EEDu);
    for (int trial = 0; trial < 300; ++trial) {
        const LabelledGraph g = test::random_graph(2 + rng.next_below(6), rng);
        CHECK(find_bridges(bridge_core(g)).empty());
    }
}

TEST_CASE("contract: singleton cores reproduce the tree shape") {
    const LabelledGraph tree(3, {{1, 2}, {2, 3}});
    const auto [forest, w] = contract(tree);
    CHECK(forest.graph().edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(w.values() == std::vector<int>{1, 1, 1});
}

TEST_CASE("contract: two triangles joined by an edge") {
    const LabelledGraph g(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 4}});
    const auto [forest, w] = contract(g);
    CHECK(forest.vertex_count() == 2);
    CHECK(forest.graph().edges() == std::vector<Edge>{{1, 2}});
    CHECK(w.values() == std::vector<int>{3, 3});
}

TEST_CASE("contract: bridgeless graph gives an edgeless forest") {
    const LabelledGraph g(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    const auto [forest, w] = contract(g);
    CHECK(forest.vertex_count() == 2);
    CHECK(forest.graph().edge_count() == 0);
}

TEST_CASE("contract invariants on random graphs") {
    SplitMix64 rng(0xC0117u);
    for (int trial = 0; trial < 300; ++trial) {
        const LabelledGraph g = test::random_graph(2 + rng.next_below(6), rng);
        const auto [forest, w] = contract(g);
        CHECK(forest.graph().edge_count() == static_cast<int>(find_bridges(g).size()));
        CHECK(is_acyclic(forest.graph()));
        CHECK(forest.component_count() == components(g).count());
        int total = 0;
        for (int x : w.values()) total += x;
        CHECK(total == g.vertex_count());
    }
}

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS(LabelledGraph(3, {{1, 1}}));
    CHECK_THROWS(LabelledGraph(3, {{1, 4}}));
    CHECK_THROWS(LabelledGraph(3, {{1, 2}, {2, 1}}));
    CHECK_THROWS(LabelledGraph(0, {}));
    CHECK_THROWS(LabelledGraph(65, {}));
}

TEST_CASE("graph text format round trip") {
    std::istringstream in("# a comment\nn 4\n\n1 2   # pendant\n3 4\n");
    const LabelledGraph g = parse_graph(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {3, 4}});

    std::istringstream again(format_graph(g));
    CHECK(parse_graph(again) == g);
}
