#include "blockspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace blockspec {

Rat Pmf::exact_sum() const {
    Rat s(0);
    for (const Rat& p : exact) s += p;
    return s;
}

Pmf longest_block_exact_dist(const SeriesBundle& bundle, int n, int max_n) {
    if (n < 1) throw config_error("longest-block law: n must be >= 1");
    if (n > max_n)
        throw config_error("longest-block law: n exceeds the exact-distribution bound " +
                           std::to_string(max_n));
    if (bundle.order <= n)
        throw config_error("longest-block law: series order must exceed n");
    const Rat& total = bundle.g(n);
    Pmf pmf;
    pmf.begin = 1;
    pmf.exact.resize(static_cast<size_t>(n));
    Rat prev(0);  // [z^n] G_{<=0}
    for (int m = 1; m <= n; ++m) {
        Rat cur = truncated_structure_series(bundle, m)[n];
        pmf.exact[static_cast<size_t>(m - 1)] = (cur - prev) / total;
        prev = std::move(cur);
    }
    if (pmf.exact_sum() != 1)
        throw consistency_error("longest-block law: exact pmf does not sum to 1");
    return pmf;
}

Rat longest_block_prob_fastpath(const SeriesBundle& bundle, const PowerSeries& g_squared, int n,
                                int k) {
    // Strict k < n/2: at k = n/2 a structure can carry two blocks of
    // length n - k and the one-block expansion term no longer suffices.
    if (k < 0 || 2 * k >= n) throw config_error("fast path needs 0 <= k < n/2");
    if (bundle.order <= n) throw config_error("fast path: series order must exceed n");
    return g_squared[k] * bundle.f(n - k) / bundle.g(n);
}

LongestBlockLimitLaw::LongestBlockLimitLaw(const SeriesBundle& bundle, const SingularityData& data)
    : data_(data) {
    PowerSeries g2 = bundle.G * bundle.G;
    b_.assign(g2.coeffs().begin(), g2.coeffs().end());
}

Real LongestBlockLimitLaw::pmf(int k) const {
    if (k < 0 || k > max_k()) throw config_error("limit pmf: k outside the computed range");
    ScopedPrecision guard(data_.digits + 20);
    return Real(b_[static_cast<size_t>(k)]) * pow_ui(data_.rho, static_cast<unsigned long>(k)) /
           (data_.tau * data_.tau);
}

Real LongestBlockLimitLaw::partial_sum(int t) const {
    if (t < 0 || t > max_k()) throw config_error("limit pmf: t outside the computed range");
    ScopedPrecision guard(data_.digits + 20);
    Real sum(0), zpow(1);
    for (int k = 0; k <= t; ++k) {
        sum += Real(b_[static_cast<size_t>(k)]) * zpow;
        zpow *= data_.rho;
    }
    return sum / (data_.tau * data_.tau);
}

Real tail_probability(const SeriesBundle& bundle, const SingularityData& data, int t) {
    return LongestBlockLimitLaw(bundle, data).partial_sum(t);
}

LongestBlockMoments longest_block_moments(const SingularityData& data, int n) {
    if (n < 1) throw config_error("moments: n must be >= 1");
    ScopedPrecision guard(data.digits + 20);
    LongestBlockMoments m;
    m.expectation = Real(n) - data.alpha * sqrt(Real(n));
    m.variance = data.beta * pow(Real(n), Real(3) / 2);
    return m;
}

Real longest_block_asymptotic_pmf(const SingularityData& data, int n, int k) {
    if (k < 1 || 2 * k >= n) throw config_error("asymptotic pmf needs 1 <= k < n/2");
    ScopedPrecision guard(data.digits + 20);
    Real kk(k);
    return 2 * data.c / data.tau * pow(1 - kk / n, Real(-3) / 2) * pow(kk, Real(-3) / 2);
}

Real NegBinomialParams::pmf(int b) const {
    if (b < 0) return Real(0);
    if (t == 0) return b == 0 ? Real(1) : Real(0);
    return Real(b + 1) * pow_ui(t, static_cast<unsigned long>(b)) * (1 - t) * (1 - t);
}

Real NegBinomialParams::cdf(int b) const {
    if (b < 0) return Real(0);
    if (t == 0) return Real(1);
    return 1 - Real(b + 2) * pow_ui(t, static_cast<unsigned long>(b) + 1) +
           Real(b + 1) * pow_ui(t, static_cast<unsigned long>(b) + 2);
}

Real NegBinomialParams::mean() const { return 2 * t / (1 - t); }

ShortBlockLimitLaw short_block_limit_law(const SeriesBundle& bundle, const SingularityData& data,
                                         int k, std::optional<BlockType> type) {
    if (k < 1) throw config_error("short-block law: k must be >= 1");
    if (k >= bundle.order) throw config_error("short-block law: k must be below the series order");
    ScopedPrecision guard(data.digits + 20);
    ShortBlockLimitLaw law;
    law.a_k = type ? block_type_series(bundle, *type)[k] : bundle.f(k);
    Real mass = Real(law.a_k) * pow_ui(data.rho, static_cast<unsigned long>(k));
    law.nb.t = mass / (1 - data.tau_prime + mass);
    law.limit_expectation = 2 * mass / (1 - data.tau_prime);
    return law;
}

Pmf short_block_exact_dist(const SeriesBundle& bundle, int k, std::optional<BlockType> type, int n,
                           int max_n) {
    if (n < 0) throw config_error("short-block law: n must be >= 0");
    if (n > max_n)
        throw config_error("short-block law: n exceeds the exact-distribution bound " +
                           std::to_string(max_n));
    if (bundle.order <= n) throw config_error("short-block law: series order must exceed n");
    const int bmax = n / k;
    auto slices = bivariate_block_count_series(bundle, k, type, bmax);
    const Rat& total = bundle.g(n);
    Pmf pmf;
    pmf.begin = 0;
    pmf.exact.resize(static_cast<size_t>(bmax) + 1);
    for (int b = 0; b <= bmax; ++b) pmf.exact[static_cast<size_t>(b)] = slices[static_cast<size_t>(b)][n] / total;
    if (pmf.exact_sum() != 1)
        throw consistency_error("short-block law: exact pmf does not sum to 1");
    return pmf;
}

namespace {

Real eta_form_probability(BlockType t, const Real& eta) {
    switch (t) {
        case BlockType::T: return eta;
        case BlockType::H: return eta * eta * (3 + eta) / pow_ui(1 - eta, 3);
        case BlockType::K:
        case BlockType::L: return pow_ui(eta, 3) * (5 + eta) / pow_ui(1 - eta, 4);
        case BlockType::M: return pow_ui(eta, 4) * (7 + eta) / pow_ui(1 - eta, 5);
        default: throw config_error("type probability: unsupported type");
    }
}

Real rho_tau_form_probability(BlockType t, const SingularityData& d) {
    const unsigned long r2 = static_cast<unsigned long>(2 * d.params.r);
    Real u = pow_ui(d.rho, r2);                  // rho^{2r}
    Real dd = 1 - d.rho * d.rho + u;             // 1 - rho^2 + rho^{2r}
    Real t2 = d.tau * d.tau;
    Real e = dd - u * t2;                        // denominator of w at (rho, tau)
    switch (t) {
        case BlockType::T: return u * t2 / dd;
        case BlockType::H: return pow_ui(u * t2, 2) * (3 * dd + u * t2) / pow_ui(e, 3);
        case BlockType::K:
        case BlockType::L: return pow_ui(u * t2, 3) * (5 * dd + u * t2) / pow_ui(e, 4);
        case BlockType::M: return pow_ui(u * t2, 4) * (7 * dd + u * t2) / pow_ui(e, 5);
        default: throw config_error("type probability: unsupported type");
    }
}

}  // namespace

TypeProbabilities block_type_limit_prob(const SingularityData& data) {
    ScopedPrecision guard(data.digits + 20);
    TypeProbabilities out;
    const std::vector<BlockType> named = {BlockType::T, BlockType::H, BlockType::K, BlockType::L,
                                          BlockType::M};
    if (data.params.gamma == 0) {
        // Every block closes with a rainbow; eta = 1 and the pseudoknot
        // forms are vacuous.
        for (BlockType t : named) {
            Real v = t == BlockType::T ? Real(1) : Real(0);
            out.eta_form[t] = v;
            out.rho_tau_form[t] = v;
            out.conditional[t] = v;
        }
        out.named_sum = 1;
        out.form_discrepancy = 0;
        return out;
    }
    out.named_sum = 0;
    out.form_discrepancy = 0;
    for (BlockType t : named) {
        Real a = eta_form_probability(t, data.eta);
        Real b = rho_tau_form_probability(t, data);
        out.eta_form[t] = a;
        out.rho_tau_form[t] = b;
        out.named_sum += a;
        out.form_discrepancy = std::max(out.form_discrepancy, Real(abs(a - b)));
    }
    if (out.form_discrepancy > Real("1e-10"))
        throw consistency_error("type probabilities: eta form and rho/tau form disagree");
    for (BlockType t : named) out.conditional[t] = out.eta_form[t] / out.named_sum;
    return out;
}

LongestArcBound longest_arc_bound(const SingularityData& data) {
    if (data.params.gamma != 1)
        throw config_error("longest-arc bound: defined for gamma = 1 constants");
    ScopedPrecision guard(data.digits + 20);
    TypeProbabilities p = block_type_limit_prob(data);
    const Real t = p.eta_form.at(BlockType::T);
    const Real h = p.eta_form.at(BlockType::H);
    const Real k = p.eta_form.at(BlockType::K);
    const Real l = p.eta_form.at(BlockType::L);
    const Real m = p.eta_form.at(BlockType::M);
    LongestArcBound out;
    out.combined_kl = t + h / 2 + (k + m) / 3;
    out.separate_kl = t + h / 2 + (k + l + m) / 3;
    return out;
}

// ---------------------------------------------------------------------------
// rho-scaled numeric evaluation.
//
// With zhat = z / rho every sequence x_n in the system is replaced by
// x_n rho^n = O(n^{-3/2}), so long-double coefficients neither overflow nor
// lose more than ~n eps relative accuracy.  All recurrences below are the
// online (coefficient-at-a-time) forms of the defining equations.
// ---------------------------------------------------------------------------

namespace {

struct ScaledSystem {
    // z-polynomials with z = rho * zhat substituted.
    std::vector<long double> denom;  // 1 - z^2 + z^{2r}
    std::vector<long double> seg;    // short-segment polynomial
    long double scaled_z = 0;        // coefficient of zhat in F (= rho)
    long double shift_scale = 0;     // rho^{2r}, carried by every z^{2r} shift
    int two_r = 2;
    int gamma = 1;

    std::vector<long double> g, f, b0, bgamma;
    std::vector<long double> g2;                  // g * g, filled through n - 2r
    std::vector<long double> e, einv, w;          // w = z^{2r} g^2 / e
    std::vector<long double> w2, wa, i1;          // i1 = (w + w^2)^2
    std::vector<long double> i1sq, i1sqw, itotal; // genus-2 chain
    std::vector<long double> ginv;

    static long double conv_at(const std::vector<long double>& a,
                               const std::vector<long double>& b, int n) {
        long double s = 0;
        for (int i = 0; i <= n; ++i) s += a[static_cast<size_t>(i)] * b[static_cast<size_t>(n - i)];
        return s;
    }

    static long double at(const std::vector<long double>& v, int i) {
        return i >= 0 && i < static_cast<int>(v.size()) ? v[static_cast<size_t>(i)] : 0.0L;
    }

    // Appends index n to every sequence.  Dependencies resolve because the
    // feedback into g passes through a z^{2r} shift: b0[n] and bgamma[n]
    // only read g / ginv up to n - 2r.
    void extend(int n) {
        while (static_cast<int>(g2.size()) <= n - two_r)
            g2.push_back(conv_at(g, g, static_cast<int>(g2.size())));
        e.push_back(at(denom, n) - shift_scale * at(g2, n - two_r));
        einv.push_back(n == 0 ? 1.0L : -[&] {
            long double s = 0;
            for (int d = 1; d <= n; ++d) s += e[static_cast<size_t>(d)] * einv[static_cast<size_t>(n - d)];
            return s;
        }());
        {
            long double s = 0;
            for (int j = two_r; j <= n; ++j)
                s += shift_scale * at(g2, j - two_r) * einv[static_cast<size_t>(n - j)];
            w.push_back(s);
        }
        w2.push_back(conv_at(w, w, n));
        wa.push_back(w[static_cast<size_t>(n)] + w2[static_cast<size_t>(n)]);
        i1.push_back(conv_at(wa, wa, n));
        long double itot = gamma >= 1 ? i1[static_cast<size_t>(n)] : 0.0L;
        if (gamma >= 2) {
            i1sq.push_back(conv_at(i1, i1, n));
            i1sqw.push_back(conv_at(i1sq, w, n));
            itot += 17.0L * i1sq[static_cast<size_t>(n)] + 92.0L * i1sqw[static_cast<size_t>(n)] +
                    96.0L * conv_at(i1sqw, w, n);
        }
        itotal.push_back(itot);
        // itotal vanishes identically below 4r, so ginv is only read
        // through index n - 4r, which is already present.
        {
            long double s = 0;
            for (int j = 2 * two_r; j <= n; ++j)
                s += itotal[static_cast<size_t>(j)] * ginv[static_cast<size_t>(n - j)];
            bgamma.push_back(gamma >= 1 ? s : 0.0L);
        }
        {
            long double rhs = shift_scale * (at(g, n - two_r) - at(seg, n - two_r));
            for (int d = 1; d < static_cast<int>(denom.size()) && d <= n; ++d)
                rhs -= denom[static_cast<size_t>(d)] * b0[static_cast<size_t>(n - d)];
            b0.push_back(rhs);
        }
        f.push_back((n == 1 ? scaled_z : 0.0L) + b0[static_cast<size_t>(n)] +
                    bgamma[static_cast<size_t>(n)]);
        if (n == 0) {
            g.push_back(1.0L);
        } else {
            long double s = 0;
            for (int i = 1; i <= n; ++i) s += f[static_cast<size_t>(i)] * g[static_cast<size_t>(n - i)];
            g.push_back(s);
        }
        if (n == 0) {
            ginv.push_back(1.0L);
        } else {
            long double s = 0;
            for (int d = 1; d <= n; ++d) s += g[static_cast<size_t>(d)] * ginv[static_cast<size_t>(n - d)];
            ginv.push_back(-s);
        }
    }
};

}  // namespace

std::vector<long double> longest_block_limit_pmf_numeric(const StructureParams& p,
                                                         const SingularityData& data, int kmax) {
    if (kmax < 1) throw config_error("scaled limit pmf: kmax must be >= 1");
    const long double rho = data.rho.convert_to<long double>();
    const long double tau = data.tau.convert_to<long double>();
    ScaledSystem sys;
    sys.two_r = 2 * p.r;
    sys.gamma = p.gamma;
    sys.scaled_z = rho;
    sys.denom.assign(static_cast<size_t>(sys.two_r) + 1, 0.0L);
    sys.denom[0] = 1.0L;
    long double rp = rho * rho;
    sys.denom[2] -= rp;
    for (int i = 2; i < sys.two_r; ++i) rp *= rho;
    sys.denom[static_cast<size_t>(sys.two_r)] += rp;
    sys.shift_scale = rp;
    sys.seg.assign(static_cast<size_t>(std::max(p.lambda - 1, 1)), 0.0L);
    long double zp = 1.0L;
    for (int i = 0; i + 2 <= p.lambda; ++i) {
        sys.seg[static_cast<size_t>(i)] = zp;
        zp *= rho;
    }
    for (int n = 0; n < kmax; ++n) sys.extend(n);
    // b_k rho^k = (g*g)[k] in scaled coordinates; recompute the full
    // convolution since sys.g2 lags by one index.
    std::vector<long double> out(static_cast<size_t>(kmax));
    for (int k = 0; k < kmax; ++k) {
        long double s = 0;
        for (int i = 0; i <= k; ++i) s += sys.g[static_cast<size_t>(i)] * sys.g[static_cast<size_t>(k - i)];
        out[static_cast<size_t>(k)] = s / (tau * tau);
    }
    return out;
}

}  // namespace blockspec
