#pragma once

#include <cstdint>
#include <vector>

namespace forestlab {

// SplitMix64. Used both as a stream in its own right and as the seed
// derivation function for substreams, so results are reproducible and
// independent of thread count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw in [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::uint64_t state_;
};

// Deterministic substream derivation: substream k of a master seed is a
// SplitMix64 seeded by a hash of (seed, k).
inline SplitMix64 substream(std::uint64_t master_seed, std::uint64_t index) {
    SplitMix64 d(master_seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
    d.next();
    return d;
}

// Walker/Vose alias table over integer weights, built with exact integer
// arithmetic so construction is deterministic. Draws are O(1).
class AliasTable {
public:
    explicit AliasTable(const std::vector<std::uint64_t>& weights);

    // Returns an index in [0, n) with probability weights[i] / total.
    int draw(SplitMix64& rng) const;

    int size() const { return static_cast<int>(threshold_.size()); }

private:
    std::vector<std::uint64_t> threshold_;  // column i picks i if r < threshold_[i]
    std::vector<int> alias_;
    std::uint64_t total_ = 0;  // common column capacity
};

}  // namespace forestlab
