#include <doctest.h>

#include <set>

#include "forestlab/forest_model.hpp"
#include "test_util.hpp"

using namespace forestlab;

TEST_CASE("mass evaluation") {
    const Forest path{LabelledGraph(3, {{1, 2}, {2, 3}})};
    CHECK(mass(path, WeightVector::unit(3)) == 1);
    CHECK(mass(Forest{LabelledGraph(3, {})}, WeightVector({5, 7, 9})) == 1);
    CHECK(mass(Forest{LabelledGraph(2, {{1, 2}})}, WeightVector({2, 3})) == 6);
    CHECK_THROWS(mass(path, WeightVector({1, 1})));
}

TEST_CASE("forest enumeration counts match the edge-subset oracle") {
    const std::size_t expected[] = {0, 1, 2, 7, 38, 291, 2932};
    for (int n = 1; n <= 6; ++n) {
        CHECK(count_forests(n) == expected[n]);
        CHECK(count_forests_edge_subset_oracle(n) == expected[n]);
    }
}

TEST_CASE("enumeration yields each forest exactly once") {
    for (int n = 2; n <= 5; ++n) {
        std::set<std::vector<Edge>> seen;
        enumerate_forests(n, [&](const Forest& f) {
            CHECK(seen.insert(f.graph().edges()).second);
        });
        CHECK(seen.size() == count_forests_edge_subset_oracle(n));
    }
}

TEST_CASE("enumeration cap is enforced") {
    CHECK_THROWS_AS(enumerate_forests(10, [](const Forest&) {}), std::length_error);
    CHECK_THROWS_AS(enumerate_trees(12, [](const Forest&) {}), std::length_error);
}

TEST_CASE("mass distribution on tiny weight vectors") {
    const MassDistribution d1 = mass_distribution(WeightVector({1, 1}));
    CHECK(d1.partition_function == 2);
    CHECK(d1.mass_by_kappa[0] == 1);
    CHECK(d1.mass_by_kappa[1] == 1);
    CHECK(d1.p_connected() == Rational(1, 2));

    const MassDistribution d2 = mass_distribution(WeightVector({2, 1}));
    CHECK(d2.partition_function == 3);
    CHECK(d2.p_connected() == Rational(2, 3));

    const MassDistribution d3 = mass_distribution(WeightVector::unit(3));
    CHECK(d3.partition_function == 7);
    CHECK(d3.mass_by_kappa[0] == 3);
    CHECK(d3.p_connected() == Rational(3, 7));
}

TEST_CASE("unit weights make the distribution uniform over forests") {
    for (int n = 2; n <= 5; ++n) {
        const MassDistribution d = mass_distribution(WeightVector::unit(n));
        CHECK(d.partition_function == BigInt(count_forests(n)));
    }
}

TEST_CASE("weighted Cayley identity on random weight vectors") {
    SplitMix64 rng(0xCA71E4u);
    for (int n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            const WeightVector w = test::random_weights(n, 14, rng);
            CHECK(mass_distribution(w).tree_mass() == tree_partition_closed_form(w));
        }
    }
    CHECK(tree_partition_closed_form(WeightVector({2, 1})) == 2);
    CHECK(tree_partition_closed_form(WeightVector::unit(3)) == 3);
    CHECK(tree_partition_closed_form(WeightVector::unit(6)) == BigInt(6 * 6 * 6 * 6));
}

TEST_CASE("partition masses sum to K") {
    SplitMix64 rng(0x51u);
    for (int trial = 0; trial < 10; ++trial) {
        const WeightVector w = test::random_weights(2 + rng.next_below(5), 14, rng);
        const MassDistribution d = mass_distribution(w);
        BigInt total = 0;
        for (const BigInt& m : d.mass_by_kappa) total += m;
        CHECK(total == d.partition_function);
    }
}

TEST_CASE("connectivity lower bound e^{-n/W}") {
    CHECK(connectivity_lower_bound_check(WeightVector({1, 1})).holds);
    CHECK(connectivity_lower_bound_check(WeightVector::unit(3)).holds);
    const auto check = connectivity_lower_bound_check(WeightVector({5, 5}));
    CHECK(check.p_connected == Rational(25, 26));
    CHECK(check.holds);
}

TEST_CASE("contract of a tree is mass-compatible with unit weights") {
    // cores are singletons, so the contracted forest is the tree itself
    const LabelledGraph tree(4, {{1, 2}, {2, 3}, {3, 4}});
    const auto [forest, w] = contract(tree);
    CHECK(mass(forest, w) == 1);
}
