#include "blockspec/series.hpp"

#include "blockspec/bivariate_poly.hpp"

#include <algorithm>

namespace blockspec {

// ---------------------------------------------------------------------------
// ShadowPolynomial
// ---------------------------------------------------------------------------

ShadowPolynomial::ShadowPolynomial(int g, std::vector<Int> coeffs)
    : genus_(g), coeffs_(std::move(coeffs)) {}

ShadowPolynomial ShadowPolynomial::genus1() {
    // z^2 (1+z)^2 = z^2 + 2 z^3 + z^4
    return ShadowPolynomial(1, {0, 0, 1, 2, 1});
}

ShadowPolynomial ShadowPolynomial::genus2() {
    // z^4 (1+z)^4 (17 + 92 z + 96 z^2)
    return ShadowPolynomial(2, {0, 0, 0, 0, 17, 160, 566, 1004, 961, 476, 96});
}

const Int& ShadowPolynomial::coeff(int d) const {
    static const Int zero(0);
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(d)];
}

Int ShadowPolynomial::value_at_one() const {
    Int s(0);
    for (const Int& c : coeffs_) s += c;
    return s;
}

PowerSeries ShadowPolynomial::as_series(int order) const {
    PowerSeries s(order);
    for (int d = 0; d < static_cast<int>(coeffs_.size()) && d < order; ++d)
        s.set(d, Rat(coeffs_[static_cast<size_t>(d)]));
    return s;
}

PowerSeries ShadowPolynomial::eval(const PowerSeries& w) const {
    PowerSeries w2 = w * w;
    PowerSeries a = (w + w2) * (w + w2);  // w^2 (1+w)^2
    if (genus_ == 1) return a;
    // w^4 (1+w)^4 (17 + 92 w + 96 w^2)
    PowerSeries a2 = a * a;
    PowerSeries a2w = a2 * w;
    return a2.scaled(17) + a2w.scaled(92) + (a2w * w).scaled(96);
}

// ---------------------------------------------------------------------------
// Functional-equation system
// ---------------------------------------------------------------------------

namespace {

// 1 - z^2 + z^{2r} as a dense coefficient vector.
std::vector<Rat> stack_denominator(int r) {
    std::vector<Rat> d(static_cast<size_t>(2 * r) + 1, Rat(0));
    d[0] = 1;
    d[2] -= 1;
    d[static_cast<size_t>(2 * r)] += 1;
    return d;
}

// sum_{i=0}^{lambda-2} z^i (empty for lambda = 1).
std::vector<Rat> short_segment_polynomial(int lambda) {
    std::vector<Rat> s(static_cast<size_t>(std::max(lambda - 1, 1)), Rat(0));
    for (int i = 0; i + 2 <= lambda; ++i) s[static_cast<size_t>(i)] = 1;
    return s;
}

struct SystemParts {
    PowerSeries B0, Bgamma, F;
};

// One application of the defining equations to a candidate G.  If G is
// correct to order m, the result is correct to order m + 2r.
SystemParts apply_system(const PowerSeries& G, const StructureParams& p) {
    const int N = G.order();
    const auto denom = stack_denominator(p.r);
    const auto seg = short_segment_polynomial(p.lambda);

    PowerSeries g_minus_seg = G - PowerSeries::from_coeffs(seg, N);
    PowerSeries b0 = g_minus_seg.shifted(2 * p.r).div_poly(denom);

    PowerSeries bgamma(N);
    if (p.gamma >= 1) {
        PowerSeries g2 = G * G;
        PowerSeries shifted_g2 = g2.shifted(2 * p.r);
        PowerSeries e = PowerSeries::from_coeffs(denom, N) - shifted_g2;
        PowerSeries w = shifted_g2 * e.reciprocal();
        PowerSeries total = ShadowPolynomial::genus1().eval(w);
        if (p.gamma >= 2) total += ShadowPolynomial::genus2().eval(w);
        bgamma = G.reciprocal() * total;
    }

    PowerSeries f = PowerSeries::monomial(Rat(1), 1, N) + b0 + bgamma;
    return {std::move(b0), std::move(bgamma), std::move(f)};
}

SeriesBundle assemble_and_verify(PowerSeries G, const StructureParams& p) {
    SystemParts parts = apply_system(G, p);
    PowerSeries phi = (PowerSeries::one(G.order()) - parts.F).reciprocal();
    if (!(phi == G))
        throw consistency_error("solve_system: iteration did not reach the fixed point");
    SeriesBundle b;
    b.params = p;
    b.order = G.order();
    b.G = std::move(G);
    b.F = std::move(parts.F);
    b.B0 = std::move(parts.B0);
    b.Bgamma = std::move(parts.Bgamma);
    verify_bundle(b);
    return b;
}

PowerSeries solve_fixed_point(const StructureParams& p, int order) {
    PowerSeries G = PowerSeries::one(1);
    int correct = 1;
    const int gain = 2 * p.r;
    while (correct < order) {
        const int work = std::min(order, correct + gain);
        SystemParts parts = apply_system(G.with_order(work), p);
        G = (PowerSeries::one(work) - parts.F).reciprocal();
        correct = work;
    }
    return G;
}

PowerSeries solve_newton(const StructureParams& p, int order) {
    BivariatePoly q = build_witness_polynomial(p);
    BivariatePoly qx = q.partial_x();
    // Simple root at (z, X) = (0, 1) is required for quadratic lifting.
    {
        ScopedPrecision guard(30);
        if (qx.eval_real(Real(0), Real(1)) == 0)
            throw consistency_error("solve_system: degenerate witness polynomial at origin");
    }
    PowerSeries G = PowerSeries::one(1);
    int correct = 1;
    while (correct < order) {
        const int work = std::min(order, 2 * correct);
        PowerSeries g = G.with_order(work);
        PowerSeries qv = q.eval_series(g);
        PowerSeries qxv = qx.eval_series(g);
        G = g - qv * qxv.reciprocal();
        correct = work;
    }
    return G;
}

}  // namespace

SeriesBundle solve_system(const StructureParams& p, int order, SolveMethod method) {
    if (order < 1) throw config_error("solve_system: order must be >= 1");
    PowerSeries G = method == SolveMethod::FixedPoint ? solve_fixed_point(p, order)
                                                      : solve_newton(p, order);
    return assemble_and_verify(std::move(G), p);
}

void verify_bundle(const SeriesBundle& b) {
    const int N = b.order;
    const auto& p = b.params;
    const auto denom = stack_denominator(p.r);
    const auto seg = short_segment_polynomial(p.lambda);
    const PowerSeries one = PowerSeries::one(N);

    if (!(b.G * (one - b.F) == one))
        throw consistency_error("bundle: G != 1/(1-F) [" + p.label() + "]");
    if (!(b.F == PowerSeries::monomial(Rat(1), 1, N) + b.B0 + b.Bgamma))
        throw consistency_error("bundle: F != z + B0 + Bgamma [" + p.label() + "]");

    PowerSeries seg_series = PowerSeries::from_coeffs(seg, N);
    if (!(b.B0.mul_poly(denom) == (b.G - seg_series).shifted(2 * p.r)))
        throw consistency_error("bundle: solved zero-block equation fails [" + p.label() + "]");
    // The unsolved form: B0 (1 - z^2) = z^{2r} (G - B0 - seg).
    const std::vector<Rat> one_minus_z2 = {Rat(1), Rat(0), Rat(-1)};
    if (!(b.B0.mul_poly(one_minus_z2) == (b.G - b.B0 - seg_series).shifted(2 * p.r)))
        throw consistency_error("bundle: unsolved zero-block equation fails [" + p.label() + "]");

    PowerSeries total(N);
    if (p.gamma >= 1) {
        PowerSeries shifted_g2 = (b.G * b.G).shifted(2 * p.r);
        PowerSeries e = PowerSeries::from_coeffs(denom, N) - shifted_g2;
        PowerSeries w = shifted_g2 * e.reciprocal();
        total = ShadowPolynomial::genus1().eval(w);
        if (p.gamma >= 2) total += ShadowPolynomial::genus2().eval(w);
    }
    if (!(b.Bgamma * b.G == total))
        throw consistency_error("bundle: gamma-block equation fails [" + p.label() + "]");

    for (const auto* s : {&b.G, &b.F, &b.B0, &b.Bgamma})
        if (!s->is_nonnegative_integer_series())
            throw consistency_error("bundle: non-integer or negative coefficient [" + p.label() + "]");
}

PowerSeries block_type_series(const SeriesBundle& bundle, BlockType type) {
    const int N = bundle.order;
    const auto& p = bundle.params;
    const auto denom = stack_denominator(p.r);
    switch (type) {
        case BlockType::T: {
            const auto seg = short_segment_polynomial(p.lambda);
            return (bundle.G - PowerSeries::from_coeffs(seg, N)).shifted(2 * p.r).div_poly(denom);
        }
        case BlockType::H:
        case BlockType::K:
        case BlockType::L:
        case BlockType::M: {
            PowerSeries shifted_g2 = (bundle.G * bundle.G).shifted(2 * p.r);
            PowerSeries e = PowerSeries::from_coeffs(denom, N) - shifted_g2;
            PowerSeries w = shifted_g2 * e.reciprocal();
            unsigned m = type == BlockType::H ? 2 : type == BlockType::M ? 4 : 3;
            return bundle.G.reciprocal() * w.pow(m);
        }
        default:
            throw config_error("block_type_series: type must be one of T, H, K, L, M");
    }
}

std::map<BlockType, PowerSeries> block_type_series_all(const SeriesBundle& bundle) {
    std::map<BlockType, PowerSeries> out;
    out.emplace(BlockType::T, block_type_series(bundle, BlockType::T));
    const int N = bundle.order;
    const auto& p = bundle.params;
    if (p.gamma >= 1) {
        PowerSeries shifted_g2 = (bundle.G * bundle.G).shifted(2 * p.r);
        PowerSeries e = PowerSeries::from_coeffs(stack_denominator(p.r), N) - shifted_g2;
        PowerSeries w = shifted_g2 * e.reciprocal();
        PowerSeries ginv = bundle.G.reciprocal();
        PowerSeries w2 = w * w;
        PowerSeries w3 = w2 * w;
        out.emplace(BlockType::H, ginv * w2);
        out.emplace(BlockType::K, ginv * w3);
        out.emplace(BlockType::L, ginv * w3);
        out.emplace(BlockType::M, ginv * (w3 * w));
    } else {
        out.emplace(BlockType::H, PowerSeries(N));
        out.emplace(BlockType::K, PowerSeries(N));
        out.emplace(BlockType::L, PowerSeries(N));
        out.emplace(BlockType::M, PowerSeries(N));
    }
    PowerSeries named = out.at(BlockType::T) + out.at(BlockType::H) + out.at(BlockType::K) +
                        out.at(BlockType::L) + out.at(BlockType::M);
    PowerSeries other = bundle.B0 + bundle.Bgamma - named;
    if (!other.is_nonnegative_integer_series())
        throw consistency_error("block types: genus-2 remainder is not a counting series");
    if (p.gamma < 2 && other.valuation() < bundle.order)
        throw consistency_error("block types: unexpected remainder below gamma = 2");
    out.emplace(BlockType::Other, std::move(other));
    return out;
}

PowerSeries truncated_structure_series(const SeriesBundle& bundle, int m) {
    if (m < 0) throw config_error("truncated_structure_series: m must be >= 0");
    return (PowerSeries::one(bundle.order) - bundle.F.truncated_to_degree(m)).reciprocal();
}

std::vector<PowerSeries> bivariate_block_count_series(const SeriesBundle& bundle, int k,
                                                      std::optional<BlockType> type, int bmax) {
    if (k < 1) throw config_error("bivariate series: k must be >= 1");
    if (bmax < 0) throw config_error("bivariate series: bmax must be >= 0");
    const int N = bundle.order;
    if (k >= N) throw config_error("bivariate series: k must be below the series order");
    const Rat a_k = type ? block_type_series(bundle, *type)[k] : bundle.F[k];

    // Coefficients of 1 / (1 - F - (u-1) a_k z^k) as u-polynomials capped at
    // degree bmax: row[j][b].  The recurrence is the plain sequence
    // convolution with the length-k term shifted by one u-degree.
    const size_t width = static_cast<size_t>(bmax) + 1;
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(N), std::vector<Rat>(width, Rat(0)));
    rows[0][0] = 1;
    std::vector<int> support;
    for (int i = 1; i < N; ++i)
        if (bundle.F[i] != 0) support.push_back(i);
    for (int j = 1; j < N; ++j) {
        auto& row = rows[static_cast<size_t>(j)];
        for (int i : support) {
            if (i > j) break;
            const Rat& fi = bundle.F[i];
            const auto& prev = rows[static_cast<size_t>(j - i)];
            for (size_t b = 0; b < width; ++b)
                if (prev[b] != 0) row[b] += fi * prev[b];
        }
        if (j >= k && a_k != 0) {
            const auto& prev = rows[static_cast<size_t>(j - k)];
            for (size_t b = 0; b < width; ++b)
                if (prev[b] != 0) row[b] -= a_k * prev[b];  // remove unmarked copy
            for (size_t b = 1; b < width; ++b)
                if (prev[b - 1] != 0) row[b] += a_k * prev[b - 1];  // add marked copy
        }
    }
    std::vector<PowerSeries> out(width, PowerSeries(N));
    for (int j = 0; j < N; ++j)
        for (size_t b = 0; b < width; ++b) out[b].set(j, rows[static_cast<size_t>(j)][b]);
    return out;
}

}  // namespace blockspec
