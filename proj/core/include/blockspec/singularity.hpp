#pragma once

#include "blockspec/bivariate_poly.hpp"
#include "blockspec/series.hpp"

namespace blockspec {

/// Dominant-singularity data of one parameter triple, all at the stated
/// working precision (decimal digits):
///   rho        branch point of G on the positive real axis
///   tau        G(rho) > 1, with tau = 1 / (1 - tau')
///   tau_prime  F(rho)
///   delta      coefficient of (rho - z)^{1/2} in G's singular expansion (< 0)
///   c          [z^n] G ~ c n^{-3/2} rho^{-n},  c = delta sqrt(rho) / Gamma(-1/2)
///   eta        rho^{2r} tau^2 / (1 - rho^2 + rho^{2r}); invariant in (r, lambda)
///   alpha      4 c / tau, the sqrt(n) defect of the longest block
///   beta       (1 - pi/4) alpha, its variance scale
struct SingularityData {
    StructureParams params;
    unsigned digits = 60;
    Real rho, tau, tau_prime;
    Real delta, delta_prime;
    Real c, c_prime;
    Real eta, alpha, beta;
    Real residual_q, residual_qx;  // |Q|, |Q_X| at (rho, tau)
    Real rho_seed;                 // coefficient-ratio estimate used for certification
};

struct SingularityOptions {
    unsigned digits = 60;
    /// Dominance certificate: |rho - ratio estimate| <= cert_rel_tol * rho.
    double cert_rel_tol = 5e-3;
    int max_newton_steps = 200;
};

/// Locates the branch point (rho, tau) solving Q = 0, dQ/dX = 0 by
/// two-dimensional Newton iteration seeded from the coefficient ratios of
/// the bundle, and certifies minimality against the ratio limit.
/// Throws consistency_error (with residuals) on divergence or a failed
/// certificate.
std::pair<Real, Real> find_dominant_singularity(const BivariatePoly& q,
                                                const SeriesBundle& hint,
                                                const SingularityOptions& opt = {});

/// Derives every asymptotic constant from a certified (rho, tau).
SingularityData singular_constants(const BivariatePoly& q, const Real& rho, const Real& tau,
                                   const SeriesBundle& bundle,
                                   const SingularityOptions& opt = {});

/// Convenience pipeline: build Q, validate Q(z, G) = 0 through the bundle
/// order (which must be >= 200), locate the singularity and compute the
/// constants.
SingularityData analyze_singularity(const SeriesBundle& bundle, const SingularityOptions& opt = {});

/// c n^{-3/2} rho^{-n}, the structure-count approximation.
Real asymptotic_structure_count(const SingularityData& data, int n);
/// c' n^{-3/2} rho^{-n}, the block-count approximation.
Real asymptotic_block_count(const SingularityData& data, int n);

}  // namespace blockspec
