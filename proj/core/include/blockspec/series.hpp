#pragma once

#include "blockspec/diagram.hpp"
#include "blockspec/power_series.hpp"

#include <map>
#include <optional>
#include <vector>

namespace blockspec {

/// Generating polynomial of irreducible shadows of genus g, indexed by arc
/// count.  Degrees run from 2g to 6g-2:
///   I_1(z) = z^2 (1+z)^2
///   I_2(z) = z^4 (1+z)^4 (17 + 92 z + 96 z^2)
class ShadowPolynomial {
public:
    static ShadowPolynomial genus1();
    static ShadowPolynomial genus2();

    int genus() const { return genus_; }
    int degree_low() const { return 2 * genus_; }
    int degree_high() const { return 6 * genus_ - 2; }
    /// Coefficient of z^d (0 outside [degree_low, degree_high]).
    const Int& coeff(int d) const;
    /// I_g(1) = number of irreducible shadows of genus g.
    Int value_at_one() const;

    /// I_g(w) for a series w of positive valuation, via a factored
    /// evaluation cheaper than generic composition.
    PowerSeries eval(const PowerSeries& w) const;

    /// The polynomial as a truncated series (for composition cross-checks).
    PowerSeries as_series(int order) const;

private:
    ShadowPolynomial(int g, std::vector<Int> coeffs);
    int genus_;
    std::vector<Int> coeffs_;  // index = degree
};

/// The four mutually consistent counting series of one parameter triple:
///   G = 1 / (1 - F)
///   F = z + B0 + Bgamma
///   B0 * (1 - z^2 + z^{2r}) = z^{2r} (G - sum_{i<lambda-1} z^i)
///   Bgamma * G = sum_{g<=gamma} I_g(w),  w = z^{2r} G^2 / (1 - z^2 + z^{2r} - z^{2r} G^2)
/// All four identities hold exactly at the truncation order; G and F have
/// nonnegative integer coefficients.
struct SeriesBundle {
    StructureParams params;
    int order = 0;
    PowerSeries G, F, B0, Bgamma;

    const Rat& g(int n) const { return G[n]; }
    const Rat& f(int n) const { return F[n]; }
};

enum class SolveMethod {
    /// Coefficientwise fixed-point iteration of the system; each round
    /// fixes at least 2r new coefficients.
    FixedPoint,
    /// Newton iteration on the algebraic witness Q(z, X); the correct
    /// prefix doubles per round.  Agrees exactly with FixedPoint.
    Newton,
};

/// Solves the system to order N and verifies every bundle identity plus
/// coefficient integrality and nonnegativity exactly; any violation is a
/// consistency_error.
SeriesBundle solve_system(const StructureParams& p, int order,
                          SolveMethod method = SolveMethod::FixedPoint);

/// Re-checks the four identities and the coefficient conditions on an
/// existing bundle; throws consistency_error with a description on failure.
void verify_bundle(const SeriesBundle& bundle);

/// Per-type block series B^I = h^I(z, G):
///   h^T = z^{2r} / (1 - z^2 + z^{2r}) * (X - sum_{i<lambda-1} z^i)
///   h^H, h^K = h^L, h^M = X^{-1} w(z,X)^m  for m = 2, 3, 4.
PowerSeries block_type_series(const SeriesBundle& bundle, BlockType type);

/// All five type series plus the genus-2 remainder under key Other
/// (zero unless gamma = 2).  Their sum plus z equals F.
std::map<BlockType, PowerSeries> block_type_series_all(const SeriesBundle& bundle);

/// Series counting structures whose blocks all have length <= m:
/// 1 / (1 - F_{<=m}).
PowerSeries truncated_structure_series(const SeriesBundle& bundle, int m);

/// Series arrays of the bivariate block-count refinement: entry b holds the
/// series whose n-th coefficient counts structures with exactly b blocks of
/// length k (restricted to a type when given), i.e. the u^b slice of
///   1 / (1 - F - (u-1) a_k z^k),   a_k = f(k) or b^I(k),
/// with u capped at degree bmax.
std::vector<PowerSeries> bivariate_block_count_series(const SeriesBundle& bundle, int k,
                                                      std::optional<BlockType> type, int bmax);

}  // namespace blockspec
