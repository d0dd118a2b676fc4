#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forestlab/forest_model.hpp"
#include "forestlab/graph.hpp"
#include "forestlab/numbers.hpp"
#include "forestlab/rng.hpp"

namespace forestlab {

using GraphMask = std::uint32_t;  // edge-set bitmask; n <= 6 keeps it in 15 bits

// An explicit finite set of labelled graphs on {1..n}, membership by edge
// bitmask. Predicates quantify over all 2^C(n,2) graphs, so explicitness is
// required.
class GraphClass {
public:
    explicit GraphClass(int n);

    int vertex_count() const { return n_; }
    int edge_slots() const { return slots_; }
    std::size_t universe_size() const { return member_.size(); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(GraphMask mask) const { return member_[mask]; }
    void insert(GraphMask mask);

    LabelledGraph graph_of(GraphMask mask) const;
    GraphMask mask_of(const LabelledGraph& g) const;
    Edge edge_of_slot(int slot) const { return slot_edges_[slot]; }

    std::vector<GraphMask> members() const;

    // Exact connectivity probability of a uniformly random member.
    Rational p_connected() const;
    std::size_t connected_count() const;

private:
    int n_;
    int slots_;
    std::vector<Edge> slot_edges_;
    std::vector<bool> member_;
    std::size_t count_ = 0;
};

// Witness-carrying predicate result.
struct PredicateResult {
    bool holds;
    std::optional<GraphMask> witness_graph;
    std::optional<Edge> witness_edge;
};

// Closed under adding an edge between distinct components of a member.
PredicateResult is_bridge_addable(const GraphClass& c);

// Closed under edge deletion.
PredicateResult is_monotone(const GraphClass& c);

// For every graph G (member or not) and every bridge e of G, membership of
// G and G - e agree.
PredicateResult is_bridge_alterable(const GraphClass& c);

// Smallest bridge-addable class containing the seeds; with
// close_under_bridge_deletion the fixed point is bridge-alterable.
GraphClass bridge_addable_closure(int n, const std::vector<GraphMask>& seeds,
                                  bool close_under_bridge_deletion = false);

// One equivalence block of the bridge-core partition.
struct BlockReport {
    GraphMask core;                     // shared b(G) of the block
    std::size_t size;
    std::size_t connected;
    Rational p_connected;
    std::vector<int> core_weights;      // component sizes of the core
    Rational forest_p_connected;        // P(F_w connected) for those weights
    bool equivalence_holds;             // the two probabilities agree exactly
};

struct ClassReport {
    bool bridge_addable;
    bool monotone;
    bool bridge_alterable;
    Rational p_connected;
    std::vector<BlockReport> blocks;
};

// Partitions a bridge-alterable class by bridge core and checks each block's
// connectivity probability against the weighted-forest law.
ClassReport decompose(const GraphClass& c);

struct ConjectureCheck {
    Rational p_class;
    Rational p_forest_baseline;  // |trees_n| / |forests_n|
    bool holds;
};

// P(G connected) >= P(uniform forest connected) for bridge-addable classes.
ConjectureCheck conjecture_check(const GraphClass& c);

// Seeded random closure-generated class: `seed_count` uniformly random edge
// masks, closed under bridge addition (and optionally bridge deletion).
GraphClass random_closure_class(int n, int seed_count, SplitMix64& rng,
                                bool close_under_bridge_deletion);

}  // namespace forestlab
