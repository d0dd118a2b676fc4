#include "forestlab/rng.hpp"

#include <stdexcept>

namespace forestlab {

AliasTable::AliasTable(const std::vector<std::uint64_t>& weights) {
    const int n = static_cast<int>(weights.size());
    if (n == 0) throw std::invalid_argument("AliasTable: empty weights");
    std::uint64_t sum = 0;
    for (auto w : weights) {
        if (w == 0) throw std::invalid_argument("AliasTable: zero weight");
        sum += w;
    }
    total_ = sum;
    threshold_.assign(n, 0);
    alias_.assign(n, 0);

    // Scaled mass per column: weights[i] * n against column capacity `sum`.
    std::vector<std::uint64_t> scaled(n);
    std::vector<int> small, large;
    for (int i = 0; i < n; ++i) {
        scaled[i] = weights[i] * static_cast<std::uint64_t>(n);
        (scaled[i] < sum ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
        const int s = small.back();
        small.pop_back();
        const int l = large.back();
        threshold_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] -= (sum - scaled[s]);
        if (scaled[l] < sum) {
            large.pop_back();
            small.push_back(l);
        }
    }
    for (int i : large) {
        threshold_[i] = sum;
        alias_[i] = i;
    }
    for (int i : small) {  // only by exhausted large list; column is full
        threshold_[i] = sum;
        alias_[i] = i;
    }
}

int AliasTable::draw(SplitMix64& rng) const {
    const int col = static_cast<int>(rng.next_below(threshold_.size()));
    const std::uint64_t r = rng.next_below(total_);
    return r < threshold_[col] ? col : alias_[col];
}

}  // namespace forestlab
