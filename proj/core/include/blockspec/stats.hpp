#pragma once

#include "blockspec/numeric.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace blockspec {

/// max_k |CDF_p(k) - CDF_q(k)| for two pmfs aligned on the same support
/// prefix; q may carry extra tail mass beyond the common range (it only
/// raises the final CDF gap, which is checked as well).
Real kolmogorov_distance(std::span<const Real> p, std::span<const Real> q);

/// Total variation (1/2) [ sum_b |p_b - q_b| + q_tail ] between a finitely
/// supported p and a law q given on the same prefix with mass q_tail above.
Real total_variation(std::span<const Real> p, std::span<const Real> q, const Real& q_tail);

struct ChiSquareResult {
    double statistic = 0;
    int dof = 0;
    double p_value = 0;
    int bins = 0;  // after pooling
};

/// Pearson goodness-of-fit of observed counts against expected
/// probabilities, pooling adjacent cells until every expected count is at
/// least min_expected.
ChiSquareResult chi_square_gof(const std::vector<std::int64_t>& observed,
                               const std::vector<double>& expected_probs, std::int64_t total,
                               double min_expected = 5.0);

}  // namespace blockspec
