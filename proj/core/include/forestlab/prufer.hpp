#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "forestlab/forest_model.hpp"
#include "forestlab/numbers.hpp"
#include "forestlab/rng.hpp"

namespace forestlab {

// A sequence in {1..n}^{n-2} encoding a tree on n >= 2 vertices.
struct PrueferCode {
    int n;
    std::vector<int> seq;  // length n-2
};

// Standard encoding: repeatedly remove the smallest-labelled leaf and record
// its neighbour. Vertex i occurs exactly d_T(i) - 1 times.
PrueferCode encode(const Forest& tree);

Forest decode(const PrueferCode& code);

// Lemma-style weighted tree sampler: draws the n-2 code entries iid with
// P(Z = i) = w_i / W and decodes. Output law is mass(T) / K'.
class TreeSampler {
public:
    explicit TreeSampler(const WeightVector& w);

    Forest sample(SplitMix64& rng) const;
    PrueferCode sample_code(SplitMix64& rng) const;

    const WeightVector& weights() const { return w_; }

private:
    WeightVector w_;
    AliasTable alias_;
};

// Deterministic parallel-friendly bulk sampling: the sample index space is
// chunked and chunk j uses substream j of the master seed, so the histogram
// is identical for any thread count.
std::map<std::vector<int>, std::uint64_t> sample_code_histogram(
    const WeightVector& w, std::uint64_t master_seed, std::uint64_t samples,
    int threads = 1);

// Per-edge record of the lighter side of T - e (ties go to the side
// containing vertex 1).
struct PendantCut {
    Edge edge;
    std::uint64_t side_mask;  // bit v-1 set iff vertex v on the recorded side
    int side_weight;
};

struct PendantCensus {
    std::vector<PendantCut> cuts;        // one per edge, in edge order
    std::vector<int> histogram;          // c(T, k) at index k, k = 0..floor(W/2)
};

PendantCensus pendant_census(const Forest& tree, const WeightVector& w);

// Lemma 12 closed form: P(P_I) = (w(I)/W)^{|I|-1} (1 - w(I)/W)^{n-|I|-1}.
// I is a vertex bitmask; must be a proper nonempty subset.
Rational pendant_probability(std::uint64_t vertex_mask, const WeightVector& w);

// E[c(T, k)] = sum over subsets I with w(I) = k of P(P_I), valid for
// 1 <= k < W/2 (the tie weight is excluded from the subset-sum expansion).
Rational expected_census(const WeightVector& w, int k);

// E[c(T, k)] for any k by full tree enumeration (n <= cap).
Rational expected_census_by_enumeration(const WeightVector& w, int k);

}  // namespace forestlab
