#pragma once

#include "blockspec/series.hpp"
#include "blockspec/singularity.hpp"

#include <map>
#include <optional>
#include <vector>

namespace blockspec {

/// Probability mass function over consecutive integers starting at `begin`.
/// Finite-n laws are exact rationals; limit laws are high-precision floats.
struct Pmf {
    long begin = 0;
    std::vector<Rat> exact;
    std::vector<Real> values;

    bool is_exact() const { return !exact.empty(); }
    size_t size() const { return is_exact() ? exact.size() : values.size(); }
    Real value(size_t i) const { return is_exact() ? Real(exact[i]) : values[i]; }
    Rat exact_sum() const;
};

/// Exact law of the longest-block length at size n, over m = 1..n, from the
/// truncation differences of 1/(1 - F_{<=m}).  Sums to exactly 1.
Pmf longest_block_exact_dist(const SeriesBundle& bundle, int n, int max_n = 800);

/// Exact P(longest block = n - k) for k <= n/2: [z^k]G^2 * f(n-k) / g(n).
/// g_squared must be bundle.G * bundle.G.  Agrees exactly with the
/// truncation-difference law on its range.
Rat longest_block_prob_fastpath(const SeriesBundle& bundle, const PowerSeries& g_squared, int n,
                                int k);

/// The discrete limit law of n - (longest block): k -> tau^{-2} b_k rho^k
/// with b_k = [z^k] G^2.
class LongestBlockLimitLaw {
public:
    LongestBlockLimitLaw(const SeriesBundle& bundle, const SingularityData& data);

    Real pmf(int k) const;
    /// sum_{k=0}^{t} pmf(k); approaches 1 from below.
    Real partial_sum(int t) const;
    int max_k() const { return static_cast<int>(b_.size()) - 1; }
    const SingularityData& data() const { return data_; }
    const Rat& b(int k) const { return b_[static_cast<size_t>(k)]; }

private:
    SingularityData data_;
    std::vector<Rat> b_;  // coefficients of G^2
};

/// lim P(longest block >= n - t) = sum_{k<=t} tau^{-2} b_k rho^k.
Real tail_probability(const SeriesBundle& bundle, const SingularityData& data, int t);

struct LongestBlockMoments {
    Real expectation;  // n - alpha sqrt(n)
    Real variance;     // beta n^{3/2}
};
LongestBlockMoments longest_block_moments(const SingularityData& data, int n);

/// Asymptotic pmf of the longest block at (n, k), k and n large, k < n/2:
/// 2 c tau^{-1} (1 - k/n)^{-3/2} k^{-3/2}.
Real longest_block_asymptotic_pmf(const SingularityData& data, int n, int k);

/// NB(2, t): P(b) = (b+1) t^b (1-t)^2.
struct NegBinomialParams {
    Real t;
    Real pmf(int b) const;
    Real cdf(int b) const;
    Real mean() const;  // 2t / (1-t)
};

struct ShortBlockLimitLaw {
    NegBinomialParams nb;
    Real limit_expectation;  // 2 a_k rho^k / (1 - tau') = 2 tau a_k rho^k
    Rat a_k;                 // f(k) or b^I(k)
};

/// Limit law of the number of length-k blocks (of a type, when given):
/// NB(2, t) with t = a_k rho^k / (1 - tau' + a_k rho^k).
ShortBlockLimitLaw short_block_limit_law(const SeriesBundle& bundle, const SingularityData& data,
                                         int k, std::optional<BlockType> type = std::nullopt);

/// Exact law of the number of length-k (type-I) blocks at size n, over
/// b = 0..floor(n/k).  Sums to exactly 1.
Pmf short_block_exact_dist(const SeriesBundle& bundle, int k, std::optional<BlockType> type, int n,
                           int max_n = 800);

/// Limit probability of a block to be of each type, in the eta form
///   P(T) = eta, P(H) = eta^2 (3+eta)/(1-eta)^3,
///   P(K) = P(L) = eta^3 (5+eta)/(1-eta)^4, P(M) = eta^4 (7+eta)/(1-eta)^5,
/// and independently in the (rho, tau) form; the two must agree to 1e-10.
/// conditional normalizes over {T, H, K, L, M} with K and L separate.
struct TypeProbabilities {
    std::map<BlockType, Real> eta_form;
    std::map<BlockType, Real> rho_tau_form;
    std::map<BlockType, Real> conditional;
    Real named_sum;        // sum of the five eta-form values
    Real form_discrepancy; // max |eta form - rho/tau form|
};
TypeProbabilities block_type_limit_prob(const SingularityData& data);

/// Lower-bound constant for the expected longest-arc length in units of n,
/// sum_I d_I P(type I) with d_T = 1, d_H = 1/2, d_K = d_L = d_M = 1/3.
/// combined_kl counts the K/L mass once (matching the combined-column
/// reading of the type table); separate_kl counts K and L separately.
struct LongestArcBound {
    Real combined_kl;
    Real separate_kl;
};
LongestArcBound longest_arc_bound(const SingularityData& data);

/// Limit-law masses tau^{-2} b_k rho^k for k = 0..kmax-1, computed on
/// rho-scaled long-double coefficients so partial sums far beyond exact
/// big-integer reach stay cheap.  Cross-validated against the exact series
/// in the tests.
std::vector<long double> longest_block_limit_pmf_numeric(const StructureParams& p,
                                                         const SingularityData& data, int kmax);

}  // namespace blockspec
