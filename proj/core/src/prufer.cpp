#include "forestlab/prufer.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

namespace forestlab {

PrueferCode encode(const Forest& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("encode: not a tree");
    const int n = tree.vertex_count();
    if (n < 2) throw std::invalid_argument("encode: need n >= 2");
    std::vector<int> deg(n + 1);
    std::vector<std::uint64_t> adj(n + 1);
    for (int v = 1; v <= n; ++v) {
        deg[v] = tree.degree(v);
        adj[v] = tree.graph().neighbours(v);
    }
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    PrueferCode code{n, {}};
    code.seq.reserve(n - 2);
    for (int step = 0; step < n - 2; ++step) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        const int parent = std::countr_zero(adj[leaf]) + 1;
        code.seq.push_back(parent);
        adj[leaf] = 0;
        adj[parent] &= ~(std::uint64_t{1} << (leaf - 1));
        if (--deg[parent] == 1) leaves.insert(parent);
    }
    return code;
}

Forest decode(const PrueferCode& code) {
    const int n = code.n;
    if (n < 2) throw std::invalid_argument("decode: need n >= 2");
    if (static_cast<int>(code.seq.size()) != n - 2)
        throw std::invalid_argument("decode: code length must be n - 2");
    std::vector<int> deg(n + 1, 1);
    for (int z : code.seq) {
        if (z < 1 || z > n) throw std::invalid_argument("decode: entry out of range");
        ++deg[z];
    }
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int z : code.seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, z), std::max(leaf, z));
        if (--deg[z] == 1) leaves.insert(z);
    }
    const int a = *leaves.begin();
    const int b = *leaves.rbegin();
    edges.emplace_back(a, b);
    return Forest(LabelledGraph(n, std::move(edges)));
}

TreeSampler::TreeSampler(const WeightVector& w)
    : w_(w),
      alias_([&] {
          std::vector<std::uint64_t> ws;
          ws.reserve(w.size());
          for (int x : w.values()) ws.push_back(static_cast<std::uint64_t>(x));
          return ws;
      }()) {
    if (w.size() < 2) throw std::invalid_argument("TreeSampler: need n >= 2");
}

PrueferCode TreeSampler::sample_code(SplitMix64& rng) const {
    PrueferCode code{w_.size(), {}};
    code.seq.reserve(w_.size() - 2);
    for (int i = 0; i < w_.size() - 2; ++i) code.seq.push_back(alias_.draw(rng) + 1);
    return code;
}

Forest TreeSampler::sample(SplitMix64& rng) const {
    return decode(sample_code(rng));
}

std::map<std::vector<int>, std::uint64_t> sample_code_histogram(
    const WeightVector& w, std::uint64_t master_seed, std::uint64_t samples,
    int threads) {
    const TreeSampler sampler(w);
    constexpr std::uint64_t kChunk = 1 << 16;
    const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;

    using Histogram = std::map<std::vector<int>, std::uint64_t>;
    const auto run_chunk = [&](std::uint64_t c, Histogram& hist) {
        SplitMix64 rng = substream(master_seed, c);
        const std::uint64_t count = std::min(kChunk, samples - c * kChunk);
        for (std::uint64_t s = 0; s < count; ++s) ++hist[sampler.sample_code(rng).seq];
    };

    if (threads <= 1) {
        Histogram hist;
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c, hist);
        return hist;
    }
    std::vector<Histogram> partial(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::uint64_t c = t; c < chunks; c += threads) run_chunk(c, partial[t]);
        });
    }
    for (auto& th : pool) th.join();
    Histogram hist = std::move(partial[0]);
    for (int t = 1; t < threads; ++t)
        for (const auto& [code, cnt] : partial[t]) hist[code] += cnt;
    return hist;
}

PendantCensus pendant_census(const Forest& tree, const WeightVector& w) {
    if (!tree.is_tree()) throw std::invalid_argument("pendant_census: not a tree");
    const int n = tree.vertex_count();
    if (w.size() != n) throw std::invalid_argument("pendant_census: weight length mismatch");
    const int W = w.total();
    PendantCensus census;
    census.histogram.assign(W / 2 + 1, 0);
    for (const Edge& e : tree.graph().edges()) {
        // Vertices on u's side of T - e, by DFS avoiding the cut edge.
        std::uint64_t side = 0;
        std::vector<int> stack{e.first};
        side |= std::uint64_t{1} << (e.first - 1);
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            std::uint64_t nb = tree.graph().neighbours(x);
            if (x == e.first) nb &= ~(std::uint64_t{1} << (e.second - 1));
            while (nb) {
                const int y = std::countr_zero(nb) + 1;
                nb &= nb - 1;
                if (!(side >> (y - 1) & 1u)) {
                    side |= std::uint64_t{1} << (y - 1);
                    stack.push_back(y);
                }
            }
        }
        int side_weight = 0;
        for (int v = 1; v <= n; ++v)
            if (side >> (v - 1) & 1u) side_weight += w.weight(v);
        const int other_weight = W - side_weight;
        std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        std::uint64_t recorded = side;
        int recorded_weight = side_weight;
        if (other_weight < side_weight ||
            (other_weight == side_weight && !(side & 1u))) {
            recorded = all & ~side;
            recorded_weight = other_weight;
        }
        census.cuts.push_back({e, recorded, recorded_weight});
        ++census.histogram[recorded_weight];
    }
    return census;
}

Rational pendant_probability(std::uint64_t vertex_mask, const WeightVector& w) {
    const int n = w.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (vertex_mask == 0 || (vertex_mask & ~all) || vertex_mask == all)
        throw std::invalid_argument("pendant_probability: I must be a proper nonempty subset");
    int size = std::popcount(vertex_mask);
    int weight = 0;
    for (int v = 1; v <= n; ++v)
        if (vertex_mask >> (v - 1) & 1u) weight += w.weight(v);
    const Rational p(weight, w.total());
    Rational result = 1;
    for (int i = 0; i < size - 1; ++i) result *= p;
    const Rational q = 1 - p;
    for (int i = 0; i < n - size - 1; ++i) result *= q;
    return result;
}

Rational expected_census(const WeightVector& w, int k) {
    const int n = w.size();
    const int W = w.total();
    if (n > 20) throw std::length_error("expected_census: n > 20");
    if (k < 1 || 2 * k >= W)
        throw std::domain_error("expected_census: need 1 <= k < W/2 (tie weight unsupported)");
    // N[i][s]: subsets of size i with weight s (knapsack over vertices).
    std::vector<std::vector<BigInt>> N(n + 1, std::vector<BigInt>(k + 1, 0));
    N[0][0] = 1;
    for (int v = 1; v <= n; ++v) {
        const int wv = w.weight(v);
        for (int i = std::min(v, n) ; i >= 1; --i)
            for (int s = k; s >= wv; --s) N[i][s] += N[i - 1][s - wv];
    }
    Rational total = 0;
    const Rational p(k, W), q = 1 - p;
    for (int i = 1; i <= n - 1; ++i) {
        if (N[i][k] == 0) continue;
        Rational term(N[i][k]);
        for (int t = 0; t < i - 1; ++t) term *= p;
        for (int t = 0; t < n - i - 1; ++t) term *= q;
        total += term;
    }
    return total;
}

Rational expected_census_by_enumeration(const WeightVector& w, int k) {
    const int n = w.size();
    if (k < 1 || 2 * k > w.total())
        throw std::domain_error("expected_census_by_enumeration: need 1 <= k <= W/2");
    if (n == 1) return 0;
    BigInt weighted_count = 0;  // sum over trees of mass(T) * c(T, k)
    BigInt tree_mass_total = 0;
    enumerate_trees(n, [&](const Forest& t) {
        const BigInt m = mass(t, w);
        tree_mass_total += m;
        const PendantCensus census = pendant_census(t, w);
        if (k < static_cast<int>(census.histogram.size()))
            weighted_count += m * census.histogram[k];
    });
    return Rational(weighted_count, tree_mass_total);
}

}  // namespace forestlab
