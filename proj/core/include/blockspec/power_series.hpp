#pragma once

#include "blockspec/numeric.hpp"

#include <span>
#include <vector>

namespace blockspec {

/// Truncated formal power series with exact rational coefficients
/// c_0 .. c_{order-1}.  Every binary operation requires equal orders and
/// returns that order; nothing changes truncation silently.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int order) : c_(check_order(order)) {}

    static PowerSeries zero(int order) { return PowerSeries(order); }
    static PowerSeries one(int order);
    /// coeff * z^degree.
    static PowerSeries monomial(Rat coeff, int degree, int order);
    static PowerSeries from_coeffs(std::vector<Rat> coeffs, int order);

    int order() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    void set(int k, Rat v) { c_[static_cast<size_t>(k)] = std::move(v); }
    const std::vector<Rat>& coeffs() const { return c_; }

    /// Index of the first nonzero coefficient; order() if identically zero.
    int valuation() const;

    PowerSeries operator-() const;
    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    bool operator==(const PowerSeries&) const = default;

    PowerSeries scaled(const Rat& s) const;
    /// Multiplication by z^k (coefficients shifted up, truncated).
    PowerSeries shifted(int k) const;
    /// Coefficients above degree m zeroed; order unchanged.
    PowerSeries truncated_to_degree(int m) const;
    /// Re-truncate to a smaller order.
    PowerSeries with_order(int new_order) const;

    /// Multiplication / exact short division by a dense z-polynomial
    /// (poly[d] is the coefficient of z^d); division needs poly[0] != 0.
    PowerSeries mul_poly(std::span<const Rat> poly) const;
    PowerSeries div_poly(std::span<const Rat> poly) const;

    /// 1 / this; requires a nonzero constant term.
    PowerSeries reciprocal() const;

    /// this(inner) for inner of positive valuation.
    PowerSeries compose(const PowerSeries& inner) const;

    PowerSeries pow(unsigned e) const;

    /// True iff every coefficient is a nonnegative integer.
    bool is_nonnegative_integer_series() const;

private:
    static size_t check_order(int order);
    void require_same_order(const PowerSeries& o) const;
    std::vector<Rat> c_;
};

}  // namespace blockspec
