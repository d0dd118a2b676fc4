#include "forestlab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "forestlab/prufer.hpp"

namespace forestlab {

namespace {

// sum_{T != T' in c(f)} w(T) w(T') = (W^2 - sum_T w(T)^2) / 2.
BigInt cross_component_weight_pairs(const Forest& f, const WeightVector& w) {
    const ComponentPartition part = components(f.graph());
    BigInt sum_sq = 0;
    for (const auto& block : part.blocks) {
        BigInt wt = 0;
        for (int v : block) wt += w.weight(v);
        sum_sq += wt * wt;
    }
    return (BigInt(w.total()) * w.total() - sum_sq) / 2;
}

// True iff fprime's edge set is f's plus exactly one edge.
bool is_one_edge_extension(const Forest& fprime, const Forest& f) {
    if (fprime.vertex_count() != f.vertex_count()) return false;
    const auto& big = fprime.graph().edges();
    const auto& small = f.graph().edges();
    if (big.size() != small.size() + 1) return false;
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Forest> forests_with_components(int n, int kappa) {
    std::vector<Forest> result;
    enumerate_forests(n, [&](const Forest& f) {
        if (f.component_count() == kappa) result.push_back(f);
    });
    return result;
}

}  // namespace

Rational flow(const Forest& fprime, const Forest& f, const WeightVector& w) {
    if (!is_one_edge_extension(fprime, f)) return 0;
    return Rational(mass(fprime, w), cross_component_weight_pairs(f, w));
}

FlowLedger verify_mass_flow(const WeightVector& w, int i) {
    const int n = w.size();
    if (i < 1 || i > n - 1) throw std::invalid_argument("verify_mass_flow: need 1 <= i <= n-1");
    const MassDistribution dist = mass_distribution(w);
    const std::vector<Forest> upper = forests_with_components(n, i + 1);

    Rational total = 0;
    bool absorption_ok = true;
    for (const Forest& f : upper) {
        const ComponentPartition part = components(f.graph());
        Rational absorbed = 0;
        for (int u = 1; u <= n; ++u) {
            for (int v = u + 1; v <= n; ++v) {
                if (part.block_of[u] == part.block_of[v]) continue;
                std::vector<Edge> edges = f.graph().edges();
                edges.emplace_back(u, v);
                const Forest fprime{LabelledGraph(n, std::move(edges))};
                absorbed += flow(fprime, f, w);
            }
        }
        if (absorbed != Rational(mass(f, w))) absorption_ok = false;
        total += absorbed;
    }
    const BigInt& reference = dist.mass_by_kappa[i];  // M_{i+1}
    return {w, i, total, reference, total == Rational(reference), absorption_ok};
}

ComponentRatioReport verify_component_ratio_bound(const WeightVector& w) {
    const int n = w.size();
    const int W = w.total();
    const MassDistribution dist = mass_distribution(w);

    ComponentRatioReport report{w, {}, true, true};
    for (int i = 1; i <= n - 1; ++i) {
        const Rational lhs = dist.probability(i + 1);
        const Rational rhs = dist.probability(i) * Rational(n, W) / i;
        const bool holds = lhs <= rhs;
        report.bounds.push_back({i, lhs, rhs, holds});
        if (!holds) report.all_hold = false;
    }
    // Eq-(8)-style split minimum over the component weights of every forest
    // with at least two components.
    enumerate_forests(n, [&](const Forest& f) {
        const int kappa = f.component_count();
        if (kappa < 2) return;
        const int i = kappa - 1;
        const ComponentPartition part = components(f.graph());
        BigInt pairs = 0, sum_sq = 0;
        for (const auto& block : part.blocks) {
            BigInt wt = 0;
            for (int v : block) wt += w.weight(v);
            sum_sq += wt * wt;
        }
        pairs = (BigInt(W) * W - sum_sq) / 2;
        const BigInt floor_value = BigInt(i) * (W - i) + BigInt(i) * (i - 1) / 2;
        if (pairs < floor_value) report.partition_minimum_ok = false;
    });
    if (!report.partition_minimum_ok) report.all_hold = false;
    return report;
}

TwoComponentIdentityReport verify_two_component_identity(const WeightVector& w) {
    const int n = w.size();
    if (n < 2) throw std::invalid_argument("verify_two_component_identity: n >= 2 required");
    const int W = w.total();
    const MassDistribution dist = mass_distribution(w);

    // A_k = sum over trees of mass(T) * c(T, k); E[c(T,k)] = A_k / K'.
    std::vector<BigInt> weighted_census(W / 2 + 1, 0);
    BigInt tree_mass = 0;
    enumerate_trees(n, [&](const Forest& t) {
        const BigInt m = mass(t, w);
        tree_mass += m;
        const PendantCensus census = pendant_census(t, w);
        for (int k = 1; k < static_cast<int>(census.histogram.size()); ++k)
            weighted_census[k] += m * census.histogram[k];
    });

    TwoComponentIdentityReport report{w, dist.probability(2), 0, {}, false};
    Rational sum = 0;
    for (int k = 1; k <= W / 2; ++k) {
        const Rational term =
            Rational(weighted_census[k], tree_mass) / (BigInt(k) * (W - k));
        report.terms.push_back(term);
        sum += term;
    }
    report.rhs = dist.p_connected() * sum;
    report.holds = report.lhs == report.rhs;
    return report;
}

CascadeReport verify_cascade(const WeightVector& w, const Rational& gamma, int m0, int j) {
    const int n = w.size();
    if (m0 < 1) throw std::invalid_argument("verify_cascade: m0 >= 1 required");
    if (j < 0) throw std::invalid_argument("verify_cascade: j >= 0 required");
    CascadeReport report{w, gamma, m0, j, true, std::nullopt, {}, true};

    // Hypothesis: every induced sub-weight-vector with total >= m0 satisfies
    // M_2(V) <= gamma * M_1(V).
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> labels, sub;
        int total = 0;
        for (int v = 1; v <= n; ++v) {
            if (mask >> (v - 1) & 1u) {
                labels.push_back(v);
                sub.push_back(w.weight(v));
                total += w.weight(v);
            }
        }
        if (total < m0) continue;
        const MassDistribution d = mass_distribution(WeightVector(sub));
        const BigInt m2 = sub.size() >= 2 ? d.mass_by_kappa[1] : BigInt(0);
        if (Rational(m2) > gamma * Rational(d.mass_by_kappa[0])) {
            report.hypothesis_holds = false;
            report.hypothesis_witness = labels;
            break;
        }
    }

    const MassDistribution dist = mass_distribution(w);
    for (int k = 1; k <= j; ++k) {
        CascadeStep step{k, n >= k * m0, 0, 0, true};
        if (step.applicable && k + 1 <= n) {
            step.lhs = dist.probability(k + 1);
            step.rhs = gamma * dist.probability(k) / k;
            step.holds = step.lhs <= step.rhs;
        }
        if (!step.holds) report.conclusion_holds = false;
        report.steps.push_back(step);
    }
    return report;
}

ConvolutionTable convolution_table(const WeightVector& w, int i_max, int k_max) {
    if (i_max < 1 || i_max > 64 || k_max < 0 || k_max > 64)
        throw std::invalid_argument("convolution_table: i_max, k_max must be in [1, 64]");
    const int n = w.size();
    std::vector<Rational> base(k_max + 1, 0);
    for (int x : w.values())
        if (x <= k_max) base[x] += Rational(1, n);

    ConvolutionTable table{i_max, k_max, {}};
    table.p.push_back(base);
    for (int i = 2; i <= i_max; ++i) {
        std::vector<Rational> next(k_max + 1, 0);
        const auto& prev = table.p.back();
        for (int a = 0; a <= k_max; ++a) {
            if (prev[a] == 0) continue;
            for (int b = 1; a + b <= k_max; ++b) {
                if (base[b] == 0) continue;
                next[a + b] += prev[a] * base[b];
            }
        }
        table.p.push_back(std::move(next));
    }
    return table;
}

GfBoundCheck verify_gf_bound(const WeightVector& w, int k, const Rational& x) {
    const int n = w.size();
    if (n > 20) throw std::length_error("verify_gf_bound: n > 20");
    if (k < 1 || k > w.total()) throw std::invalid_argument("verify_gf_bound: k out of range");
    if (k > 64) throw std::length_error("verify_gf_bound: k > 64");

    // LHS by subset-size/weight DP: N[i][s] = #subsets of size i, weight s.
    std::vector<std::vector<BigInt>> N(n + 1, std::vector<BigInt>(k + 1, 0));
    N[0][0] = 1;
    for (int v = 1; v <= n; ++v) {
        const int wv = w.weight(v);
        for (int i = n; i >= 1; --i)
            for (int s = k; s >= wv; --s) N[i][s] += N[i - 1][s - wv];
    }
    Rational lhs = 0;
    Rational x_pow = 1;
    for (int i = 1; i <= n; ++i) {
        x_pow *= x;
        if (N[i][k] != 0) lhs += Rational(N[i][k]) * x_pow;
    }

    const ConvolutionTable table = convolution_table(w, k, k);
    Rational rhs = 0;
    Rational nx_pow = 1;
    BigInt factorial = 1;
    for (int i = 1; i <= k; ++i) {
        nx_pow *= Rational(n) * x;
        factorial *= i;
        const Rational p = table(i, k);
        if (p != 0) rhs += nx_pow / Rational(factorial) * p;
    }
    return {lhs, rhs, lhs <= rhs};
}

double half_constant(std::int64_t terms) {
    if (terms < 1) throw std::invalid_argument("half_constant: terms >= 1 required");
    double sum = 0.0, comp = 0.0;
    for (std::int64_t i = 1; i <= terms; ++i) {
        const double di = static_cast<double>(i);
        const double log_term = (di - 2.0) * std::log(di) - std::lgamma(di + 1.0) - di;
        const double term = std::exp(log_term);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (term == 0.0) break;  // underflow; tail is zero in double
    }
    return sum;
}

double envelope_max(int i, double alpha) {
    if (i < 1 || !(alpha > 0)) throw std::invalid_argument("envelope_max: need i >= 1, alpha > 0");
    return std::exp(i * (std::log(static_cast<double>(i)) - std::log(alpha) - 1.0));
}

Rational unit_ratio_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("unit_ratio_closed_form: n >= 2 required");
    // r_1 = sum_{k=1}^{floor(n/2)} E[c(T,k)] / (k(n-k)) with
    // E[c(T,k)] = C(n,k) k^{k-1} (n-k)^{n-k-1} / n^{n-2}; the k = n/2 term is
    // halved because both sides of a balanced cut are pendant subtrees but
    // only one is recorded per edge.
    // Negative exponents only arise with base 1 (k = 1 or n - k = 1).
    const auto ipow = [](int base, int exponent) {
        return exponent < 0 ? BigInt(1) : pow(BigInt(base), exponent);
    };
    BigInt twice_numerator = 0;
    BigInt binom = 1;  // C(n,k), updated incrementally
    for (int k = 1; k <= n / 2; ++k) {
        binom = binom * (n - k + 1) / k;
        BigInt term = binom * ipow(k, k - 2) * ipow(n - k, n - k - 2);
        twice_numerator += (2 * k == n) ? term : 2 * term;
    }
    return Rational(twice_numerator, 2 * pow(BigInt(n), n - 2));
}

std::vector<TrendEntry> ratio_trend(int n_max) {
    if (n_max < 2 || n_max > 1000)
        throw std::invalid_argument("ratio_trend: n_max must be in [2, 1000]");
    std::vector<TrendEntry> table;
    table.reserve(n_max - 1);
    for (int n = 2; n <= n_max; ++n) table.push_back({n, unit_ratio_closed_form(n)});
    return table;
}

}  // namespace forestlab
