#pragma once

#include <optional>
#include <vector>

#include "forestlab/forest_model.hpp"
#include "forestlab/numbers.hpp"

namespace forestlab {

// Flow between adjacent component-count layers:
// phi(F', F) = mass(F') / sum_{T != T' in c(F)} w(T) w(T') when F' = F plus
// one edge, else 0.
Rational flow(const Forest& fprime, const Forest& f, const WeightVector& w);

// Total flow from layer i into layer i+1 equals M_{i+1}; each F in the upper
// layer absorbs exactly mass(F).
struct FlowLedger {
    WeightVector weights;
    int layer;            // i
    Rational total_flow;
    BigInt reference_mass;  // M_{i+1}
    bool total_matches;
    bool absorption_ok;
};

FlowLedger verify_mass_flow(const WeightVector& w, int i);

// P(F in F_{n,i+1}) <= P(F in F_{n,i}) * (n/W) / i, for every feasible i,
// plus the split inequality sum_{j<k} a_j a_k >= i(W-i) + C(i,2) over the
// component weights of every enumerated forest.
struct RatioBoundEntry {
    int layer;      // i
    Rational lhs;   // P(F_{n,i+1})
    Rational rhs;   // P(F_{n,i}) * (n/W) / i
    bool holds;
};

struct ComponentRatioReport {
    WeightVector weights;
    std::vector<RatioBoundEntry> bounds;
    bool partition_minimum_ok;
    bool all_hold;
};

ComponentRatioReport verify_component_ratio_bound(const WeightVector& w);

// M_2/K = (M_1/K) * sum_k E[c(T,k)] / (k(W-k)), with the expectations taken
// by full tree enumeration.
struct TwoComponentIdentityReport {
    WeightVector weights;
    Rational lhs;   // P(F_{n,2})
    Rational rhs;
    std::vector<Rational> terms;  // E[c(T,k)]/(k(W-k)) for k = 1..floor(W/2)
    bool holds;
};

TwoComponentIdentityReport verify_two_component_identity(const WeightVector& w);

// Cascade of the two-component hypothesis through higher layers:
// if M_2(V) <= gamma * M_1(V) for every induced sub-weight-vector with total
// >= m0, then M_{k+1} <= (gamma/k) * M_k for k <= j with n >= k * m0.
struct CascadeStep {
    int k;
    bool applicable;  // n >= k * m0
    Rational lhs;     // P(F_{n,k+1})
    Rational rhs;     // (gamma/k) * P(F_{n,k})
    bool holds;
};

struct CascadeReport {
    WeightVector weights;
    Rational gamma;
    int m0;
    int j;
    bool hypothesis_holds;
    std::optional<std::vector<int>> hypothesis_witness;  // failing vertex set V
    std::vector<CascadeStep> steps;
    bool conclusion_holds;
};

CascadeReport verify_cascade(const WeightVector& w, const Rational& gamma, int m0, int j);

// p_i(k) = P(Z_i = k) for Z_i the sum of i iid uniformly-chosen weights.
struct ConvolutionTable {
    int i_max;
    int k_max;
    std::vector<std::vector<Rational>> p;  // p[i-1][k], k = 0..k_max

    const Rational& operator()(int i, int k) const { return p[i - 1][k]; }
};

ConvolutionTable convolution_table(const WeightVector& w, int i_max, int k_max);

// sum_{I: w(I)=k} x^{|I|} <= sum_{i=1}^{k} (nx)^i / i! * p_i(k).
struct GfBoundCheck {
    Rational lhs;
    Rational rhs;
    bool holds;
};

GfBoundCheck verify_gf_bound(const WeightVector& w, int k, const Rational& x);

// Partial sum of sum_{i>=1} i^{i-2} / (i! e^i), which converges to 1/2.
// Terms evaluated in log-space; Kahan-compensated accumulation.
double half_constant(std::int64_t terms);

// Maximum of x^i e^{-alpha x} over x > 0, attained at x = i/alpha.
double envelope_max(int i, double alpha);

// Exact r_1(n) = P(F_{n,2}) / P(F_{n,1}) at unit weights, via the pendant
// closed form E[c(T,k)] = C(n,k) k^{k-1} (n-k)^{n-k-1} / n^{n-2} (halved at
// the tie weight k = n/2).
Rational unit_ratio_closed_form(int n);

struct TrendEntry {
    int n;
    Rational r1;
};

std::vector<TrendEntry> ratio_trend(int n_max);

}  // namespace forestlab
