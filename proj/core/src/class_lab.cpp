#include "forestlab/class_lab.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace forestlab {

GraphClass::GraphClass(int n) : n_(n), slots_(n * (n - 1) / 2) {
    if (n < 1 || n > 6) throw std::invalid_argument("GraphClass: n must be in [1, 6]");
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slot_edges_.emplace_back(u, v);
    member_.assign(std::size_t{1} << slots_, false);
}

void GraphClass::insert(GraphMask mask) {
    if (mask >= member_.size()) throw std::invalid_argument("GraphClass::insert: mask out of range");
    if (!member_[mask]) {
        member_[mask] = true;
        ++count_;
    }
}

LabelledGraph GraphClass::graph_of(GraphMask mask) const {
    std::vector<Edge> edges;
    for (int s = 0; s < slots_; ++s)
        if (mask >> s & 1u) edges.push_back(slot_edges_[s]);
    return LabelledGraph(n_, std::move(edges));
}

GraphMask GraphClass::mask_of(const LabelledGraph& g) const {
    if (g.vertex_count() != n_) throw std::invalid_argument("mask_of: vertex count mismatch");
    GraphMask mask = 0;
    for (int s = 0; s < slots_; ++s)
        if (g.has_edge(slot_edges_[s].first, slot_edges_[s].second)) mask |= GraphMask{1} << s;
    return mask;
}

std::vector<GraphMask> GraphClass::members() const {
    std::vector<GraphMask> out;
    out.reserve(count_);
    for (GraphMask m = 0; m < member_.size(); ++m)
        if (member_[m]) out.push_back(m);
    return out;
}

std::size_t GraphClass::connected_count() const {
    std::size_t connected = 0;
    for (GraphMask m = 0; m < member_.size(); ++m)
        if (member_[m] && is_connected(graph_of(m))) ++connected;
    return connected;
}

Rational GraphClass::p_connected() const {
    if (count_ == 0) throw std::logic_error("p_connected: empty class");
    return Rational(BigInt(connected_count()), BigInt(count_));
}

PredicateResult is_bridge_addable(const GraphClass& c) {
    for (GraphMask m : c.members()) {
        const LabelledGraph g = c.graph_of(m);
        const ComponentPartition part = components(g);
        for (int s = 0; s < c.edge_slots(); ++s) {
            if (m >> s & 1u) continue;
            const auto [u, v] = c.edge_of_slot(s);
            if (part.block_of[u] == part.block_of[v]) continue;
            if (!c.contains(m | GraphMask{1} << s))
                return {false, m, Edge{u, v}};
        }
    }
    return {true, std::nullopt, std::nullopt};
}

PredicateResult is_monotone(const GraphClass& c) {
    for (GraphMask m : c.members()) {
        for (int s = 0; s < c.edge_slots(); ++s) {
            if (!(m >> s & 1u)) continue;
            if (!c.contains(m & ~(GraphMask{1} << s)))
                return {false, m, c.edge_of_slot(s)};
        }
    }
    return {true, std::nullopt, std::nullopt};
}

PredicateResult is_bridge_alterable(const GraphClass& c) {
    const std::size_t universe = c.universe_size();
    for (GraphMask m = 0; m < universe; ++m) {
        const LabelledGraph g = c.graph_of(m);
        for (const Edge& e : find_bridges(g)) {
            GraphMask bit = 0;
            for (int s = 0; s < c.edge_slots(); ++s)
                if (c.edge_of_slot(s) == e) bit = GraphMask{1} << s;
            if (c.contains(m) != c.contains(m & ~bit))
                return {false, m, e};
        }
    }
    return {true, std::nullopt, std::nullopt};
}

GraphClass bridge_addable_closure(int n, const std::vector<GraphMask>& seeds,
                                  bool close_under_bridge_deletion) {
    GraphClass c(n);
    std::vector<GraphMask> work = seeds;
    for (GraphMask m : work) c.insert(m);
    while (!work.empty()) {
        const GraphMask m = work.back();
        work.pop_back();
        const LabelledGraph g = c.graph_of(m);
        const ComponentPartition part = components(g);
        for (int s = 0; s < c.edge_slots(); ++s) {
            if (m >> s & 1u) continue;
            const auto [u, v] = c.edge_of_slot(s);
            if (part.block_of[u] == part.block_of[v]) continue;
            const GraphMask added = m | GraphMask{1} << s;
            if (!c.contains(added)) {
                c.insert(added);
                work.push_back(added);
            }
        }
        if (close_under_bridge_deletion) {
            for (const Edge& e : find_bridges(g)) {
                GraphMask bit = 0;
                for (int s = 0; s < c.edge_slots(); ++s)
                    if (c.edge_of_slot(s) == e) bit = GraphMask{1} << s;
                const GraphMask removed = m & ~bit;
                if (!c.contains(removed)) {
                    c.insert(removed);
                    work.push_back(removed);
                }
            }
        }
    }
    return c;
}

ClassReport decompose(const GraphClass& c) {
    if (c.empty()) throw std::logic_error("decompose: empty class");
    ClassReport report;
    report.bridge_addable = is_bridge_addable(c).holds;
    report.monotone = is_monotone(c).holds;
    report.bridge_alterable = is_bridge_alterable(c).holds;
    if (!report.bridge_alterable)
        throw std::invalid_argument("decompose: class is not bridge-alterable");
    report.p_connected = c.p_connected();

    std::map<GraphMask, std::vector<GraphMask>> blocks;
    for (GraphMask m : c.members())
        blocks[c.mask_of(bridge_core(c.graph_of(m)))].push_back(m);

    for (const auto& [core, member_masks] : blocks) {
        BlockReport block;
        block.core = core;
        block.size = member_masks.size();
        block.connected = 0;
        for (GraphMask m : member_masks)
            if (is_connected(c.graph_of(m))) ++block.connected;
        block.p_connected = Rational(BigInt(block.connected), BigInt(block.size));

        const ComponentPartition part = components(c.graph_of(core));
        for (const auto& b : part.blocks) block.core_weights.push_back(static_cast<int>(b.size()));
        const MassDistribution dist = mass_distribution(WeightVector(block.core_weights));
        block.forest_p_connected = dist.p_connected();
        block.equivalence_holds = block.p_connected == block.forest_p_connected;
        report.blocks.push_back(std::move(block));
    }
    return report;
}

ConjectureCheck conjecture_check(const GraphClass& c) {
    const int n = c.vertex_count();
    if (n > 5) throw std::length_error("conjecture_check: n <= 5 required");
    if (c.empty()) throw std::logic_error("conjecture_check: empty class");
    if (!is_bridge_addable(c).holds)
        throw std::invalid_argument("conjecture_check: class is not bridge-addable");
    std::size_t trees = 0, forests = 0;
    enumerate_forests(n, [&](const Forest& f) {
        ++forests;
        if (f.is_tree()) ++trees;
    });
    ConjectureCheck check;
    check.p_class = c.p_connected();
    check.p_forest_baseline = Rational(BigInt(trees), BigInt(forests));
    check.holds = check.p_class >= check.p_forest_baseline;
    return check;
}

GraphClass random_closure_class(int n, int seed_count, SplitMix64& rng,
                                bool close_under_bridge_deletion) {
    const int slots = n * (n - 1) / 2;
    std::vector<GraphMask> seeds;
    seeds.reserve(seed_count);
    for (int i = 0; i < seed_count; ++i)
        seeds.push_back(static_cast<GraphMask>(rng.next_below(std::uint64_t{1} << slots)));
    return bridge_addable_closure(n, seeds, close_under_bridge_deletion);
}

}  // namespace forestlab
