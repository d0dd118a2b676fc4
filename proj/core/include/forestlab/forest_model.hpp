#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "forestlab/graph.hpp"
#include "forestlab/numbers.hpp"

namespace forestlab {

// Positive integer vertex weights with cached total.
class WeightVector {
public:
    explicit WeightVector(std::vector<int> w);

    int size() const { return static_cast<int>(w_.size()); }
    int weight(int vertex) const { return w_[vertex - 1]; }  // 1-based
    int total() const { return total_; }
    const std::vector<int>& values() const { return w_; }

    static WeightVector unit(int n) { return WeightVector(std::vector<int>(n, 1)); }

    bool operator==(const WeightVector& other) const { return w_ == other.w_; }

private:
    std::vector<int> w_;
    int total_ = 0;
};

// An acyclic labelled graph with its degree sequence and component count.
class Forest {
public:
    explicit Forest(LabelledGraph g);

    const LabelledGraph& graph() const { return g_; }
    int vertex_count() const { return g_.vertex_count(); }
    int degree(int vertex) const { return degree_[vertex - 1]; }
    int component_count() const { return components_; }
    bool is_tree() const { return components_ == 1; }

    bool operator==(const Forest& other) const { return g_ == other.g_; }

private:
    LabelledGraph g_;
    std::vector<int> degree_;
    int components_ = 0;
};

// f(g): contract each component of b(g) to a point; bridges of g become the
// edges and component sizes the weights. Throws if an alleged bridge joins
// vertices of the same core component.
std::pair<Forest, WeightVector> contract(const LabelledGraph& g);

// mass_w(F) = prod_i w_i^{d_F(i)}.
BigInt mass(const Forest& f, const WeightVector& w);

// Exact law of the weighted random forest: partition function K and the
// per-component-count masses M_1..M_n.
struct MassDistribution {
    WeightVector weights;
    BigInt partition_function;        // K
    std::vector<BigInt> mass_by_kappa;  // M_1..M_n (index 0 = connected)

    const BigInt& tree_mass() const { return mass_by_kappa[0]; }  // K' = M_1
    Rational probability(int kappa) const {
        return Rational(mass_by_kappa[kappa - 1], partition_function);
    }
    Rational p_connected() const { return probability(1); }
};

// Enumeration size cap. Defaults to 9; FORESTLAB_MAX_N overrides it.
int enumeration_cap();

// Visits every forest on {1..n} exactly once, driven by set partitions of
// the vertex set with a Prüfer-decoded tree on each block. Throws
// SizeLimitExceeded (std::length_error) beyond the cap.
void enumerate_forests(int n, const std::function<void(const Forest&)>& visit);

// Visits every tree on {1..n} exactly once (the kappa = 1 slice).
void enumerate_trees(int n, const std::function<void(const Forest&)>& visit);

std::size_t count_forests(int n);

// Independent oracle: counts acyclic edge subsets of K_n directly.
std::size_t count_forests_edge_subset_oracle(int n);

MassDistribution mass_distribution(const WeightVector& w);

// Weighted Cayley: K' = (prod_j w_j) * W^{n-2} for n >= 2.
BigInt tree_partition_closed_form(const WeightVector& w);

struct ConnectivityBoundCheck {
    Rational p_connected;
    Rational exponent;  // n/W
    bool holds;         // p_connected > e^{-n/W}, certified
};

ConnectivityBoundCheck connectivity_lower_bound_check(const WeightVector& w);

}  // namespace forestlab
