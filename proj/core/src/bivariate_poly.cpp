#include "blockspec/bivariate_poly.hpp"

#include "blockspec/series.hpp"

#include <algorithm>

namespace blockspec {

namespace {
const Int kZero(0);
}

BivariatePoly BivariatePoly::zero() { return BivariatePoly(); }

BivariatePoly BivariatePoly::monomial(Int c, int xdeg, int zdeg) {
    BivariatePoly p;
    p.rows_.resize(static_cast<size_t>(xdeg) + 1);
    p.rows_[static_cast<size_t>(xdeg)].resize(static_cast<size_t>(zdeg) + 1, Int(0));
    p.rows_[static_cast<size_t>(xdeg)][static_cast<size_t>(zdeg)] = std::move(c);
    p.trim();
    return p;
}

BivariatePoly BivariatePoly::from_z_poly(std::vector<Int> zpoly) {
    BivariatePoly p;
    p.rows_.push_back(std::move(zpoly));
    p.trim();
    return p;
}

void BivariatePoly::trim() {
    for (auto& row : rows_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

int BivariatePoly::degree_x() const { return static_cast<int>(rows_.size()) - 1; }

int BivariatePoly::degree_z() const {
    int d = -1;
    for (const auto& row : rows_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

const Int& BivariatePoly::coefficient(int xdeg, int zdeg) const {
    if (xdeg < 0 || xdeg >= static_cast<int>(rows_.size())) return kZero;
    const auto& row = rows_[static_cast<size_t>(xdeg)];
    if (zdeg < 0 || zdeg >= static_cast<int>(row.size())) return kZero;
    return row[static_cast<size_t>(zdeg)];
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly p = *this;
    p += o;
    return p;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    BivariatePoly p = *this;
    p -= o;
    return p;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    rows_.resize(std::max(rows_.size(), o.rows_.size()));
    for (size_t a = 0; a < o.rows_.size(); ++a) {
        auto& row = rows_[a];
        row.resize(std::max(row.size(), o.rows_[a].size()), Int(0));
        for (size_t b = 0; b < o.rows_[a].size(); ++b) row[b] += o.rows_[a][b];
    }
    trim();
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    rows_.resize(std::max(rows_.size(), o.rows_.size()));
    for (size_t a = 0; a < o.rows_.size(); ++a) {
        auto& row = rows_[a];
        row.resize(std::max(row.size(), o.rows_[a].size()), Int(0));
        for (size_t b = 0; b < o.rows_[a].size(); ++b) row[b] -= o.rows_[a][b];
    }
    trim();
    return *this;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    if (rows_.empty() || o.rows_.empty()) return BivariatePoly();
    BivariatePoly p;
    p.rows_.assign(rows_.size() + o.rows_.size() - 1, {});
    for (size_t a1 = 0; a1 < rows_.size(); ++a1) {
        if (rows_[a1].empty()) continue;
        for (size_t a2 = 0; a2 < o.rows_.size(); ++a2) {
            if (o.rows_[a2].empty()) continue;
            auto& dst = p.rows_[a1 + a2];
            dst.resize(std::max(dst.size(), rows_[a1].size() + o.rows_[a2].size() - 1), Int(0));
            for (size_t b1 = 0; b1 < rows_[a1].size(); ++b1) {
                if (rows_[a1][b1] == 0) continue;
                for (size_t b2 = 0; b2 < o.rows_[a2].size(); ++b2) {
                    if (o.rows_[a2][b2] == 0) continue;
                    dst[b1 + b2] += rows_[a1][b1] * o.rows_[a2][b2];
                }
            }
        }
    }
    p.trim();
    return p;
}

BivariatePoly BivariatePoly::pow(unsigned e) const {
    BivariatePoly r = monomial(Int(1), 0, 0);
    BivariatePoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

BivariatePoly BivariatePoly::scaled(const Int& c) const {
    BivariatePoly p = *this;
    for (auto& row : p.rows_)
        for (auto& v : row) v *= c;
    p.trim();
    return p;
}

BivariatePoly BivariatePoly::shifted_x(int k) const {
    BivariatePoly p;
    p.rows_.assign(static_cast<size_t>(k), {});
    for (const auto& row : rows_) p.rows_.push_back(row);
    p.trim();
    return p;
}

BivariatePoly BivariatePoly::partial_x() const {
    BivariatePoly p;
    for (size_t a = 1; a < rows_.size(); ++a) {
        std::vector<Int> row = rows_[a];
        for (auto& v : row) v *= Int(a);
        p.rows_.push_back(std::move(row));
    }
    p.trim();
    return p;
}

BivariatePoly BivariatePoly::partial_z() const {
    BivariatePoly p;
    p.rows_.resize(rows_.size());
    for (size_t a = 0; a < rows_.size(); ++a) {
        const auto& row = rows_[a];
        if (row.size() <= 1) continue;
        auto& dst = p.rows_[a];
        dst.resize(row.size() - 1, Int(0));
        for (size_t b = 1; b < row.size(); ++b) dst[b - 1] = row[b] * Int(b);
    }
    p.trim();
    return p;
}

PowerSeries BivariatePoly::eval_series(const PowerSeries& s) const {
    const int N = s.order();
    PowerSeries acc(N);
    for (int a = degree_x(); a >= 0; --a) {
        acc = acc * s;
        const auto& row = rows_[static_cast<size_t>(a)];
        for (int b = 0; b < static_cast<int>(row.size()) && b < N; ++b)
            if (row[static_cast<size_t>(b)] != 0)
                acc.set(b, acc[b] + Rat(row[static_cast<size_t>(b)]));
    }
    return acc;
}

Real BivariatePoly::eval_real(const Real& z0, const Real& x0) const {
    Real acc(0);
    for (int a = degree_x(); a >= 0; --a) {
        acc *= x0;
        const auto& row = rows_[static_cast<size_t>(a)];
        Real inner(0);
        for (int b = static_cast<int>(row.size()) - 1; b >= 0; --b) {
            inner *= z0;
            inner += Real(row[static_cast<size_t>(b)]);
        }
        acc += inner;
    }
    return acc;
}

BivariatePoly build_witness_polynomial(const StructureParams& p) {
    const int r = p.r;
    const int m_top = std::max(6 * p.gamma - 2, 0);

    // 1 - z^2 + z^{2r}  (collapses to 1 when r = 1).
    std::vector<Int> denom(static_cast<size_t>(2 * r) + 1, Int(0));
    denom[0] = 1;
    denom[2] -= 1;
    denom[static_cast<size_t>(2 * r)] += 1;
    BivariatePoly d = BivariatePoly::from_z_poly(denom);
    BivariatePoly u = BivariatePoly::monomial(Int(1), 0, 2 * r);

    std::vector<Int> seg(static_cast<size_t>(std::max(p.lambda - 1, 1)), Int(0));
    for (int i = 0; i + 2 <= p.lambda; ++i) seg[static_cast<size_t>(i)] = 1;
    BivariatePoly s = BivariatePoly::from_z_poly(seg);

    // E = 1 - z^2 + z^{2r} - z^{2r} X^2, the cleared w-denominator.
    BivariatePoly e = d - u.shifted_x(2);
    std::vector<BivariatePoly> epow(static_cast<size_t>(m_top) + 1);
    epow[0] = BivariatePoly::monomial(Int(1), 0, 0);
    for (int j = 1; j <= m_top; ++j) epow[static_cast<size_t>(j)] = epow[static_cast<size_t>(j - 1)] * e;

    const BivariatePoly x = BivariatePoly::monomial(Int(1), 1, 0);
    const BivariatePoly one_minus_z =
        BivariatePoly::from_z_poly({Int(1), Int(-1)});

    // D E^M - (1-z) D X E^M + u X (X - s) E^M + D sum_g sum_m i_g(m) u^m X^{2m} E^{M-m}
    BivariatePoly q = d * epow[static_cast<size_t>(m_top)];
    q -= one_minus_z * d * x * epow[static_cast<size_t>(m_top)];
    q += u * x * (x - s) * epow[static_cast<size_t>(m_top)];
    for (int g = 1; g <= p.gamma; ++g) {
        ShadowPolynomial ig = g == 1 ? ShadowPolynomial::genus1() : ShadowPolynomial::genus2();
        for (int m = ig.degree_low(); m <= ig.degree_high(); ++m) {
            if (ig.coeff(m) == 0) continue;
            BivariatePoly term = u.pow(static_cast<unsigned>(m)).shifted_x(2 * m) *
                                 epow[static_cast<size_t>(m_top - m)];
            q += d * term.scaled(ig.coeff(m));
        }
    }

    const int expect = p.gamma >= 1 ? 12 * p.gamma - 2 : 2;
    if (q.degree_x() != expect)
        throw consistency_error("witness polynomial: unexpected X-degree " +
                                std::to_string(q.degree_x()));
    return q;
}

void validate_witness_polynomial(const BivariatePoly& q, const PowerSeries& g,
                                 const StructureParams& p) {
    PowerSeries v = q.eval_series(g);
    if (v.valuation() < v.order())
        throw consistency_error("witness polynomial: Q(z, G) != 0 at order " +
                                std::to_string(v.valuation()) + " [" + p.label() + "]");
}

}  // namespace blockspec
