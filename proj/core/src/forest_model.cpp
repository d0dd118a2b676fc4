#include "forestlab/forest_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "forestlab/prufer.hpp"

namespace forestlab {

WeightVector::WeightVector(std::vector<int> w) : w_(std::move(w)) {
    if (w_.empty()) throw std::invalid_argument("WeightVector: need n >= 1");
    for (int x : w_) {
        if (x < 1) throw std::invalid_argument("WeightVector: weights must be >= 1");
        total_ += x;
    }
}

Forest::Forest(LabelledGraph g) : g_(std::move(g)) {
    const int n = g_.vertex_count();
    degree_.assign(n, 0);
    for (auto [u, v] : g_.edges()) {
        ++degree_[u - 1];
        ++degree_[v - 1];
    }
    components_ = n - g_.edge_count();
    if (!is_acyclic(g_)) throw std::invalid_argument("Forest: graph has a cycle");
}

std::pair<Forest, WeightVector> contract(const LabelledGraph& g) {
    const LabelledGraph core = bridge_core(g);
    const ComponentPartition part = components(core);
    const int k = part.count();
    std::vector<int> weights(k);
    for (int i = 0; i < k; ++i) weights[i] = static_cast<int>(part.blocks[i].size());
    std::vector<Edge> edges;
    for (const Edge& e : find_bridges(g)) {
        const int bu = part.block_of[e.first];
        const int bv = part.block_of[e.second];
        if (bu == bv)
            throw std::invalid_argument("contract: bridge joins vertices of the same core component");
        edges.emplace_back(std::min(bu, bv) + 1, std::max(bu, bv) + 1);
    }
    return {Forest(LabelledGraph(k, std::move(edges))), WeightVector(std::move(weights))};
}

BigInt mass(const Forest& f, const WeightVector& w) {
    if (w.size() != f.vertex_count())
        throw std::invalid_argument("mass: weight length mismatch");
    BigInt m = 1;
    for (int v = 1; v <= f.vertex_count(); ++v)
        m *= pow(BigInt(w.weight(v)), f.degree(v));
    return m;
}

int enumeration_cap() {
    if (const char* env = std::getenv("FORESTLAB_MAX_N")) {
        const int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    return 9;
}

namespace {

// All trees on the label set `block` (ascending), via Prüfer codes over
// local indices. Emits edge lists in original labels.
void for_each_block_tree(const std::vector<int>& block,
                         const std::function<void(const std::vector<Edge>&)>& visit) {
    const int m = static_cast<int>(block.size());
    std::vector<Edge> edges;
    if (m == 1) {
        visit(edges);
        return;
    }
    if (m == 2) {
        edges.emplace_back(block[0], block[1]);
        visit(edges);
        return;
    }
    PrueferCode code{m, std::vector<int>(m - 2, 1)};
    for (;;) {
        const Forest local = decode(code);
        edges.clear();
        for (auto [u, v] : local.graph().edges()) {
            int a = block[u - 1], b = block[v - 1];
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        visit(edges);
        // odometer increment
        int pos = m - 3;
        while (pos >= 0 && code.seq[pos] == m) code.seq[pos--] = 1;
        if (pos < 0) break;
        ++code.seq[pos];
    }
}

// Set partitions of {1..n} as blocks (canonical: block order by minimum
// element), recursing over which block each vertex joins.
void for_each_partition(int n,
                        const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> place = [&](int v) {
        if (v > n) {
            visit(blocks);
            return;
        }
        // index loop: the recursion grows `blocks`, which would invalidate
        // range-for iterators; deeper levels restore the size before returning
        for (std::size_t i = 0, existing = blocks.size(); i < existing; ++i) {
            blocks[i].push_back(v);
            place(v + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({v});
        place(v + 1);
        blocks.pop_back();
    };
    place(1);
}

}  // namespace

void enumerate_forests(int n, const std::function<void(const Forest&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_forests: n >= 1 required");
    if (n > enumeration_cap())
        throw std::length_error("enumerate_forests: n exceeds the enumeration cap");
    for_each_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        // Cartesian product of tree choices across blocks.
        std::vector<Edge> edges;
        std::function<void(std::size_t)> pick = [&](std::size_t b) {
            if (b == blocks.size()) {
                std::vector<Edge> sorted = edges;
                visit(Forest(LabelledGraph(n, std::move(sorted))));
                return;
            }
            for_each_block_tree(blocks[b], [&](const std::vector<Edge>& tree_edges) {
                const std::size_t mark = edges.size();
                edges.insert(edges.end(), tree_edges.begin(), tree_edges.end());
                pick(b + 1);
                edges.resize(mark);
            });
        };
        pick(0);
    });
}

void enumerate_trees(int n, const std::function<void(const Forest&)>& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: n >= 1 required");
    if (n > enumeration_cap())
        throw std::length_error("enumerate_trees: n exceeds the enumeration cap");
    std::vector<int> block(n);
    std::iota(block.begin(), block.end(), 1);
    for_each_block_tree(block, [&](const std::vector<Edge>& tree_edges) {
        std::vector<Edge> edges = tree_edges;
        visit(Forest(LabelledGraph(n, std::move(edges))));
    });
}

std::size_t count_forests(int n) {
    std::size_t count = 0;
    enumerate_forests(n, [&](const Forest&) { ++count; });
    return count;
}

std::size_t count_forests_edge_subset_oracle(int n) {
    if (n < 1) throw std::invalid_argument("n >= 1 required");
    // Include/exclude recursion over the edges of K_n; a branch that would
    // close a cycle (union-find) is cut, so exactly the acyclic subsets are
    // counted.
    std::vector<Edge> all_edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all_edges.emplace_back(u, v);
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    // No path compression: the include branch must be undoable by resetting
    // a single root pointer.
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    std::size_t count = 0;
    std::function<void(std::size_t)> recurse = [&](std::size_t idx) {
        if (idx == all_edges.size()) {
            ++count;
            return;
        }
        recurse(idx + 1);  // exclude
        const auto [u, v] = all_edges[idx];
        const int ru = find(u), rv = find(v);
        if (ru == rv) return;  // would close a cycle
        parent[ru] = rv;
        recurse(idx + 1);  // include
        // restore (ru was a root before the union)
        parent[ru] = ru;
    };
    recurse(0);
    return count;
}

MassDistribution mass_distribution(const WeightVector& w) {
    const int n = w.size();
    MassDistribution dist{w, 0, std::vector<BigInt>(n, 0)};
    enumerate_forests(n, [&](const Forest& f) {
        const BigInt m = mass(f, w);
        dist.mass_by_kappa[f.component_count() - 1] += m;
        dist.partition_function += m;
    });
    return dist;
}

BigInt tree_partition_closed_form(const WeightVector& w) {
    if (w.size() < 2) throw std::invalid_argument("tree_partition_closed_form: n >= 2 required");
    BigInt result = 1;
    for (int x : w.values()) result *= x;
    return result * pow(BigInt(w.total()), w.size() - 2);
}

ConnectivityBoundCheck connectivity_lower_bound_check(const WeightVector& w) {
    const MassDistribution dist = mass_distribution(w);
    const Rational exponent(w.size(), w.total());
    const Rational p = dist.p_connected();
    return {p, exponent, certified_greater_than_exp_neg(p, exponent)};
}

}  // namespace forestlab
