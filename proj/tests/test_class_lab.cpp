#include <doctest.h>

#include "forestlab/class_lab.hpp"
#include "test_util.hpp"

using namespace forestlab;

namespace {

GraphClass all_forests(int n) {
    GraphClass c(n);
    for (GraphMask m = 0; m < c.universe_size(); ++m)
        if (is_acyclic(c.graph_of(m))) c.insert(m);
    return c;
}

GraphClass all_graphs(int n) {
    GraphClass c(n);
    for (GraphMask m = 0; m < c.universe_size(); ++m) c.insert(m);
    return c;
}

}  // namespace

TEST_CASE("forests form a bridge-addable, monotone, bridge-alterable class") {
    const GraphClass c = all_forests(4);
    CHECK(c.size() == 38);
    CHECK(is_bridge_addable(c).holds);
    CHECK(is_monotone(c).holds);
    CHECK(is_bridge_alterable(c).holds);
}

TEST_CASE("the universal class satisfies all predicates") {
    const GraphClass c = all_graphs(3);
    CHECK(is_bridge_addable(c).holds);
    CHECK(is_monotone(c).holds);
    CHECK(is_bridge_alterable(c).holds);
}

TEST_CASE("predicate failures carry witnesses") {
    GraphClass lonely(3);
    lonely.insert(0);  // just the edgeless graph
    const PredicateResult addable = is_bridge_addable(lonely);
    CHECK_FALSE(addable.holds);
    CHECK(*addable.witness_graph == 0);
    CHECK(*addable.witness_edge == Edge{1, 2});

    GraphClass triangle_only(3);
    triangle_only.insert(0b111);
    CHECK_FALSE(is_monotone(triangle_only).holds);
    // vacuously alterable: the triangle has no bridge and on 3 vertices no
    // graph outside reaches it by deleting one
    CHECK(is_bridge_alterable(triangle_only).holds);

    // {edge} alone: the edge is a bridge, its deletion leaves the class
    GraphClass edge_only(2);
    edge_only.insert(0b1);
    const PredicateResult alterable = is_bridge_alterable(edge_only);
    CHECK_FALSE(alterable.holds);
}

TEST_CASE("bridge-addable closure from seeds") {
    const GraphClass c2 = bridge_addable_closure(2, {0});
    CHECK(c2.size() == 2);

    // edgeless seed on 3 vertices closes to exactly the 7 forests
    const GraphClass c3 = bridge_addable_closure(3, {0});
    CHECK(c3.size() == 7);
    for (GraphMask m : c3.members()) CHECK(is_acyclic(c3.graph_of(m)));

    // triangle + isolated vertex: one round of additions
    GraphClass scratch(4);
    const GraphMask triangle = scratch.mask_of(LabelledGraph(4, {{1, 2}, {1, 3}, {2, 3}}));
    const GraphClass c4 = bridge_addable_closure(4, {triangle});
    CHECK(c4.size() == 4);
    CHECK(is_bridge_addable(c4).holds);
}

TEST_CASE("addable and monotone imply alterable on generated classes") {
    SplitMix64 rng(0xA17Eu);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(4));  // up to 5
        const GraphClass c = random_closure_class(n, 1 + rng.next_below(3), rng,
                                                  trial % 2 == 0);
        CHECK(is_bridge_addable(c).holds);
        if (is_monotone(c).holds) CHECK(is_bridge_alterable(c).holds);
        // alterable implies addable as well
        if (is_bridge_alterable(c).holds) CHECK(is_bridge_addable(c).holds);
    }
}

TEST_CASE("decompose: forests on 4 vertices form a single block") {
    const ClassReport report = decompose(all_forests(4));
    REQUIRE(report.blocks.size() == 1);
    CHECK(report.blocks[0].size == 38);
    CHECK(report.blocks[0].p_connected == Rational(16, 38));
    CHECK(report.blocks[0].core_weights == std::vector<int>{1, 1, 1, 1});
    CHECK(report.blocks[0].equivalence_holds);
}

TEST_CASE("decompose: all graphs on 3 vertices split into two blocks") {
    const ClassReport report = decompose(all_graphs(3));
    CHECK(report.p_connected == Rational(4, 8));
    REQUIRE(report.blocks.size() == 2);
    std::size_t total = 0;
    for (const BlockReport& b : report.blocks) {
        total += b.size;
        CHECK(b.equivalence_holds);
    }
    CHECK(total == 8);
}

TEST_CASE("decompose: triangle-plus-pendant block has weights (3,1)") {
    GraphClass scratch(4);
    const GraphMask triangle = scratch.mask_of(LabelledGraph(4, {{1, 2}, {1, 3}, {2, 3}}));
    const GraphClass c = bridge_addable_closure(4, {triangle}, true);
    const ClassReport report = decompose(c);
    REQUIRE(report.blocks.size() == 1);
    CHECK(report.blocks[0].core_weights == std::vector<int>{3, 1});
    CHECK(report.blocks[0].p_connected == Rational(3, 4));
    CHECK(report.blocks[0].equivalence_holds);
}

TEST_CASE("decompose rejects non-alterable classes") {
    GraphClass lonely(3);
    lonely.insert(0b1);
    CHECK_THROWS(decompose(lonely));
}

TEST_CASE("block probabilities respect the e^{-n/W} transfer bound") {
    SplitMix64 rng(0xE8Du);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(4));
        const GraphClass c = random_closure_class(n, 1 + rng.next_below(2), rng, true);
        for (const BlockReport& block : decompose(c).blocks) {
            const int n_block = static_cast<int>(block.core_weights.size());
            int w_block = 0;
            for (int x : block.core_weights) w_block += x;
            CHECK(certified_greater_than_exp_neg(block.p_connected,
                                                 Rational(n_block, w_block)));
        }
    }
}

TEST_CASE("conjecture check on explicit classes") {
    const ConjectureCheck all3 = conjecture_check(all_graphs(3));
    CHECK(all3.p_class == Rational(1, 2));
    CHECK(all3.p_forest_baseline == Rational(3, 7));
    CHECK(all3.holds);

    const ConjectureCheck forests3 = conjecture_check(all_forests(3));
    CHECK(forests3.p_class == forests3.p_forest_baseline);  // equality at the baseline
    CHECK(forests3.holds);

    // triangle-free graphs on 4 vertices
    GraphClass tf(4);
    for (GraphMask m = 0; m < tf.universe_size(); ++m) {
        const LabelledGraph g = tf.graph_of(m);
        bool triangle = false;
        for (int a = 1; a <= 4 && !triangle; ++a)
            for (int b = a + 1; b <= 4 && !triangle; ++b)
                for (int c = b + 1; c <= 4 && !triangle; ++c)
                    triangle = g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
        if (!triangle) tf.insert(m);
    }
    CHECK(is_bridge_addable(tf).holds);
    CHECK(conjecture_check(tf).holds);
}

TEST_CASE("conjecture check requires a bridge-addable class") {
    GraphClass lonely(3);
    lonely.insert(0);
    CHECK_THROWS(conjecture_check(lonely));
}

TEST_CASE("randomized conjecture scan finds no counterexample") {
    SplitMix64 rng(0x5CA9u);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(4));  // up to 5
        const GraphClass c = random_closure_class(n, 1 + rng.next_below(3), rng,
                                                  trial % 3 == 0);
        CHECK(conjecture_check(c).holds);
    }
}
