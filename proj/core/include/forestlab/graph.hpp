#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace forestlab {

using Edge = std::pair<int, int>;  // 1-based, first < second

// Simple labelled graph on {1..n}, n <= 64. Edges are kept sorted and the
// adjacency is mirrored into per-vertex bitsets for O(1) edge tests.
class LabelledGraph {
public:
    LabelledGraph() = default;
    LabelledGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const {
        return u >= 1 && v >= 1 && u <= n_ && v <= n_ && (adj_[u] >> (v - 1) & 1u);
    }
    std::uint64_t neighbours(int v) const { return adj_[v]; }

    bool operator==(const LabelledGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;  // 1-based; bit v-1 set iff edge to v
};

struct ComponentPartition {
    std::vector<std::vector<int>> blocks;  // ordered by smallest vertex label
    std::vector<int> block_of;             // 1-based vertex -> block index

    int count() const { return static_cast<int>(blocks.size()); }
};

ComponentPartition components(const LabelledGraph& g);

bool is_connected(const LabelledGraph& g);

// Edges whose removal increases the component count (linear-time low-link).
std::vector<Edge> find_bridges(const LabelledGraph& g);

// b(g): g with every bridge deleted. Always bridgeless; idempotent.
LabelledGraph bridge_core(const LabelledGraph& g);

bool is_acyclic(const LabelledGraph& g);

// Text format: "n <n>" then one "u v" line per edge; '#' comments and blank
// lines are skipped. All CLI graph inputs use this format.
LabelledGraph parse_graph(std::istream& in);
LabelledGraph parse_graph_file(const std::string& path);
std::string format_graph(const LabelledGraph& g);

}  // namespace forestlab
