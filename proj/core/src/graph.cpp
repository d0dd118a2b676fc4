#include "forestlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace forestlab {

LabelledGraph::LabelledGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 1 || n > 64) throw std::invalid_argument("vertex count must be in [1, 64]");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n || u == v)
            throw std::invalid_argument("edge endpoints must be distinct labels in {1..n}");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    adj_.assign(n_ + 1, 0);
    for (auto [u, v] : edges_) {
        adj_[u] |= std::uint64_t{1} << (v - 1);
        adj_[v] |= std::uint64_t{1} << (u - 1);
    }
}

ComponentPartition components(const LabelledGraph& g) {
    const int n = g.vertex_count();
    ComponentPartition part;
    part.block_of.assign(n + 1, -1);
    for (int s = 1; s <= n; ++s) {
        if (part.block_of[s] != -1) continue;
        const int id = part.count();
        std::vector<int> block;
        std::vector<int> stack{s};
        part.block_of[s] = id;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            block.push_back(u);
            std::uint64_t nb = g.neighbours(u);
            while (nb) {
                const int v = std::countr_zero(nb) + 1;
                nb &= nb - 1;
                if (part.block_of[v] == -1) {
                    part.block_of[v] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(block.begin(), block.end());
        part.blocks.push_back(std::move(block));
    }
    return part;
}

bool is_connected(const LabelledGraph& g) {
    return components(g).count() == 1;
}

std::vector<Edge> find_bridges(const LabelledGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n + 1, -1), low(n + 1, 0), parent(n + 1, 0);
    std::vector<Edge> bridges;
    int timer = 0;
    // Iterative DFS; frame = (vertex, remaining neighbour mask).
    for (int root = 1; root <= n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<std::pair<int, std::uint64_t>> stack;
        disc[root] = low[root] = timer++;
        parent[root] = 0;
        stack.emplace_back(root, g.neighbours(root));
        while (!stack.empty()) {
            auto& [u, nb] = stack.back();
            if (nb) {
                const int v = std::countr_zero(nb) + 1;
                nb &= nb - 1;
                if (disc[v] == -1) {
                    parent[v] = u;
                    disc[v] = low[v] = timer++;
                    stack.emplace_back(v, g.neighbours(v) & ~(std::uint64_t{1} << (u - 1)));
                } else {
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    const int p = stack.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > disc[p])
                        bridges.emplace_back(std::min(p, u), std::max(p, u));
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

LabelledGraph bridge_core(const LabelledGraph& g) {
    const auto bridges = find_bridges(g);
    std::vector<Edge> kept;
    kept.reserve(g.edge_count() - bridges.size());
    std::set_difference(g.edges().begin(), g.edges().end(), bridges.begin(), bridges.end(),
                        std::back_inserter(kept));
    return LabelledGraph(g.vertex_count(), std::move(kept));
}

bool is_acyclic(const LabelledGraph& g) {
    return g.edge_count() + components(g).count() == g.vertex_count();
}

LabelledGraph parse_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (n < 0) {
            int value;
            if (tok != "n" || !(ls >> value))
                throw std::invalid_argument("graph file must start with 'n <count>'");
            n = value;
        } else {
            int u = 0, v = 0;
            std::istringstream es(line);
            if (!(es >> u >> v)) throw std::invalid_argument("bad edge line: " + line);
            edges.emplace_back(u, v);
        }
    }
    if (n < 0) throw std::invalid_argument("empty graph file");
    return LabelledGraph(n, std::move(edges));
}

LabelledGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string format_graph(const LabelledGraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace forestlab
