#include "blockspec/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>

namespace blockspec {

Real kolmogorov_distance(std::span<const Real> p, std::span<const Real> q) {
    const size_t n = std::min(p.size(), q.size());
    Real cp(0), cq(0), best(0);
    for (size_t i = 0; i < n; ++i) {
        cp += p[i];
        cq += q[i];
        best = std::max(best, Real(abs(cp - cq)));
    }
    return best;
}

Real total_variation(std::span<const Real> p, std::span<const Real> q, const Real& q_tail) {
    const size_t n = std::min(p.size(), q.size());
    Real acc(0);
    for (size_t i = 0; i < n; ++i) acc += abs(p[i] - q[i]);
    for (size_t i = n; i < p.size(); ++i) acc += abs(p[i]);
    for (size_t i = n; i < q.size(); ++i) acc += abs(q[i]);
    acc += abs(q_tail);
    return acc / 2;
}

ChiSquareResult chi_square_gof(const std::vector<std::int64_t>& observed,
                               const std::vector<double>& expected_probs, std::int64_t total,
                               double min_expected) {
    if (observed.size() != expected_probs.size())
        throw config_error("chi-square: observed/expected size mismatch");
    std::vector<double> exp_counts;
    std::vector<double> obs_counts;
    double acc_e = 0, acc_o = 0;
    for (size_t i = 0; i < observed.size(); ++i) {
        acc_e += expected_probs[i] * static_cast<double>(total);
        acc_o += static_cast<double>(observed[i]);
        if (acc_e >= min_expected) {
            exp_counts.push_back(acc_e);
            obs_counts.push_back(acc_o);
            acc_e = acc_o = 0;
        }
    }
    if (acc_e > 0 || acc_o > 0) {
        if (!exp_counts.empty()) {
            exp_counts.back() += acc_e;
            obs_counts.back() += acc_o;
        } else {
            exp_counts.push_back(acc_e);
            obs_counts.push_back(acc_o);
        }
    }
    ChiSquareResult r;
    r.bins = static_cast<int>(exp_counts.size());
    r.dof = std::max(r.bins - 1, 1);
    for (size_t i = 0; i < exp_counts.size(); ++i) {
        const double d = obs_counts[i] - exp_counts[i];
        if (exp_counts[i] > 0) r.statistic += d * d / exp_counts[i];
    }
    boost::math::chi_squared_distribution<double> law(static_cast<double>(r.dof));
    r.p_value = boost::math::cdf(boost::math::complement(law, r.statistic));
    return r;
}

}  // namespace blockspec
