#include "blockspec/power_series.hpp"

#include <algorithm>

namespace blockspec {

size_t PowerSeries::check_order(int order) {
    if (order < 1) throw config_error("power series: order must be >= 1");
    return static_cast<size_t>(order);
}

void PowerSeries::require_same_order(const PowerSeries& o) const {
    if (order() != o.order())
        throw consistency_error("power series: mixed truncation orders (" +
                                std::to_string(order()) + " vs " + std::to_string(o.order()) + ")");
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s(order);
    s.c_[0] = 1;
    return s;
}

PowerSeries PowerSeries::monomial(Rat coeff, int degree, int order) {
    PowerSeries s(order);
    if (degree < 0) throw config_error("power series: negative degree");
    if (degree < order) s.c_[static_cast<size_t>(degree)] = std::move(coeff);
    return s;
}

PowerSeries PowerSeries::from_coeffs(std::vector<Rat> coeffs, int order) {
    PowerSeries s(order);
    for (size_t k = 0; k < coeffs.size() && k < s.c_.size(); ++k) s.c_[k] = std::move(coeffs[k]);
    return s;
}

int PowerSeries::valuation() const {
    for (int k = 0; k < order(); ++k)
        if (c_[static_cast<size_t>(k)] != 0) return k;
    return order();
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries s(order());
    for (size_t k = 0; k < c_.size(); ++k) s.c_[k] = -c_[k];
    return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    PowerSeries s = *this;
    s += o;
    return s;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    PowerSeries s = *this;
    s -= o;
    return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    require_same_order(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    require_same_order(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    require_same_order(o);
    const int N = order();
    PowerSeries s(N);
    const int va = valuation(), vb = o.valuation();
    Rat t;
    for (int a = va; a < N; ++a) {
        if (c_[static_cast<size_t>(a)] == 0) continue;
        const int bend = N - a;
        for (int b = vb; b < bend; ++b) {
            if (o.c_[static_cast<size_t>(b)] == 0) continue;
            t = c_[static_cast<size_t>(a)];
            t *= o.c_[static_cast<size_t>(b)];
            s.c_[static_cast<size_t>(a + b)] += t;
        }
    }
    return s;
}

PowerSeries PowerSeries::scaled(const Rat& f) const {
    PowerSeries s(order());
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) s.c_[k] = c_[k] * f;
    return s;
}

PowerSeries PowerSeries::shifted(int k) const {
    if (k < 0) throw config_error("power series: negative shift");
    PowerSeries s(order());
    for (int a = 0; a + k < order(); ++a) s.c_[static_cast<size_t>(a + k)] = c_[static_cast<size_t>(a)];
    return s;
}

PowerSeries PowerSeries::truncated_to_degree(int m) const {
    PowerSeries s(order());
    for (int a = 0; a <= m && a < order(); ++a) s.c_[static_cast<size_t>(a)] = c_[static_cast<size_t>(a)];
    return s;
}

PowerSeries PowerSeries::with_order(int new_order) const {
    PowerSeries s(new_order);
    for (int a = 0; a < new_order && a < order(); ++a) s.c_[static_cast<size_t>(a)] = c_[static_cast<size_t>(a)];
    return s;
}

PowerSeries PowerSeries::mul_poly(std::span<const Rat> poly) const {
    PowerSeries s(order());
    for (size_t d = 0; d < poly.size(); ++d) {
        if (poly[d] == 0) continue;
        for (int a = 0; a + static_cast<int>(d) < order(); ++a) {
            if (c_[static_cast<size_t>(a)] == 0) continue;
            s.c_[static_cast<size_t>(a) + d] += c_[static_cast<size_t>(a)] * poly[d];
        }
    }
    return s;
}

PowerSeries PowerSeries::div_poly(std::span<const Rat> poly) const {
    if (poly.empty() || poly[0] == 0)
        throw consistency_error("power series: short division by non-unit polynomial");
    const int N = order();
    PowerSeries q(N);
    for (int a = 0; a < N; ++a) {
        Rat acc = c_[static_cast<size_t>(a)];
        for (size_t d = 1; d < poly.size() && static_cast<int>(d) <= a; ++d)
            if (poly[d] != 0) acc -= poly[d] * q.c_[static_cast<size_t>(a) - d];
        q.c_[static_cast<size_t>(a)] = acc / poly[0];
    }
    return q;
}

PowerSeries PowerSeries::reciprocal() const {
    if (c_[0] == 0) throw consistency_error("power series: reciprocal of non-unit series");
    const int N = order();
    PowerSeries r(N);
    const Rat inv0 = Rat(1) / c_[0];
    r.c_[0] = inv0;
    for (int a = 1; a < N; ++a) {
        Rat acc(0);
        for (int d = 1; d <= a; ++d)
            if (c_[static_cast<size_t>(d)] != 0) acc += c_[static_cast<size_t>(d)] * r.c_[static_cast<size_t>(a - d)];
        r.c_[static_cast<size_t>(a)] = -acc * inv0;
    }
    return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    require_same_order(inner);
    if (inner.c_[0] != 0)
        throw consistency_error("power series: composition needs positive valuation");
    const int N = order();
    // Horner from the top degree down.
    PowerSeries acc(N);
    for (int d = N - 1; d >= 0; --d) {
        acc = acc * inner;
        acc.c_[0] += c_[static_cast<size_t>(d)];
    }
    return acc;
}

PowerSeries PowerSeries::pow(unsigned e) const {
    PowerSeries r = PowerSeries::one(order());
    PowerSeries b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool PowerSeries::is_nonnegative_integer_series() const {
    for (const Rat& v : c_)
        if (denominator(v) != 1 || v < 0) return false;
    return true;
}

}  // namespace blockspec
