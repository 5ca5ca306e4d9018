#pragma once

#include "blockspec/diagram.hpp"
#include "blockspec/numeric.hpp"
#include "blockspec/power_series.hpp"

namespace blockspec {

/// Dense integer-coefficient polynomial in (z, X).  coefficient(a, b) is
/// the coefficient of X^a z^b.
class BivariatePoly {
public:
    BivariatePoly() = default;

    static BivariatePoly zero();
    /// c * X^xdeg * z^zdeg.
    static BivariatePoly monomial(Int c, int xdeg, int zdeg);
    /// Polynomial in z only.
    static BivariatePoly from_z_poly(std::vector<Int> zpoly);

    int degree_x() const;
    int degree_z() const;
    const Int& coefficient(int xdeg, int zdeg) const;

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly pow(unsigned e) const;
    BivariatePoly scaled(const Int& c) const;
    /// Multiply by X^k.
    BivariatePoly shifted_x(int k) const;

    BivariatePoly partial_x() const;
    BivariatePoly partial_z() const;

    /// Substitute X = s and expand in z, truncated at s.order().
    PowerSeries eval_series(const PowerSeries& s) const;
    /// Numeric evaluation at (z0, x0) by Horner in both variables.
    Real eval_real(const Real& z0, const Real& x0) const;

private:
    void trim();
    // row_[a] = dense z-coefficients of X^a.
    std::vector<std::vector<Int>> rows_;
};

/// The algebraic witness Q(z, X) obtained by clearing every denominator
/// from the counting system; Q(z, G(z)) = 0 identically.  deg_X is
/// 12 gamma - 2 for gamma >= 1 and 2 for gamma = 0.
BivariatePoly build_witness_polynomial(const StructureParams& p);

/// Asserts Q(z, G) = 0 through the bundle order (consistency_error if not).
void validate_witness_polynomial(const BivariatePoly& q, const PowerSeries& g,
                                 const StructureParams& p);

}  // namespace blockspec
