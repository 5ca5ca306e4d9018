#include "blockspec/singularity.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace blockspec {

namespace {

std::string residual_message(const std::string& what, const Real& rq, const Real& rqx) {
    std::ostringstream os;
    os << what << " (|Q| = " << rq.str(6) << ", |Q_X| = " << rqx.str(6) << ")";
    return os.str();
}

}  // namespace

std::pair<Real, Real> find_dominant_singularity(const BivariatePoly& q, const SeriesBundle& hint,
                                                const SingularityOptions& opt) {
    if (hint.order < 100)
        throw config_error("singularity: seed bundle must have order >= 100");
    if (opt.digits < 20 || opt.digits > 1000)
        throw config_error("singularity: working precision must be between 20 and 1000 digits");
    ScopedPrecision guard(opt.digits + 20);

    // Seed rho from successive coefficient ratios, with the n^{-3/2}
    // subexponential factor removed.
    const int n = hint.order - 1;
    Real gn = to_real(hint.g(n));
    Real gn1 = to_real(hint.g(n - 1));
    Real ratio = gn1 / gn;
    Real rho = ratio * pow(Real(n - 1) / Real(n), Real(3) / 2);
    const Real rho_seed = rho;

    // Seed tau by evaluating the truncated G at rho and adding the
    // c * sum_{j>n} j^{-3/2} rho-power tail (about 2 c / sqrt(n)).
    Real tau(0);
    {
        Real zpow(1);
        for (int j = 0; j <= n; ++j) {
            tau += to_real(hint.g(j)) * zpow;
            zpow *= rho;
        }
        Real c0 = gn * pow(Real(n), Real(3) / 2) * pow_ui(rho, static_cast<unsigned long>(n));
        tau += c0 * 2 / sqrt(Real(n));
    }

    const BivariatePoly qx = q.partial_x();
    const BivariatePoly qz = q.partial_z();
    const BivariatePoly qxx = qx.partial_x();
    const BivariatePoly qxz = qx.partial_z();

    const Real tol = pow(Real(10), -static_cast<int>(opt.digits) + 10);
    Real rq(1), rqx(1);
    bool converged = false;
    for (int step = 0; step < opt.max_newton_steps; ++step) {
        Real fv = q.eval_real(rho, tau);
        Real gv = qx.eval_real(rho, tau);
        rq = abs(fv);
        rqx = abs(gv);
        if (rq < tol && rqx < tol) {
            converged = true;
            break;
        }
        // Jacobian of (Q, Q_X) with respect to (z, X).
        Real a = qz.eval_real(rho, tau);
        Real b = qx.eval_real(rho, tau);
        Real c = qxz.eval_real(rho, tau);
        Real d = qxx.eval_real(rho, tau);
        Real det = a * d - b * c;
        if (det == 0)
            throw consistency_error(residual_message("singularity: singular Newton system", rq, rqx));
        Real dz = (fv * d - b * gv) / det;
        Real dx = (a * gv - fv * c) / det;
        rho -= dz;
        tau -= dx;
        if (!(rho > 0) || !(rho < 1) || !(tau > 0))
            throw consistency_error(
                residual_message("singularity: Newton left the positive branch", rq, rqx));
    }
    if (!converged)
        throw consistency_error(residual_message("singularity: Newton did not converge", rq, rqx));

    if (abs(rho - rho_seed) > Real(opt.cert_rel_tol) * rho)
        throw consistency_error(residual_message(
            "singularity: dominance certificate failed, rho disagrees with the coefficient-ratio limit",
            rq, rqx));
    if (!(tau > 1))
        throw consistency_error(residual_message("singularity: tau <= 1 at the branch point", rq, rqx));
    return {rho, tau};
}

SingularityData singular_constants(const BivariatePoly& q, const Real& rho, const Real& tau,
                                   const SeriesBundle& bundle, const SingularityOptions& opt) {
    if (opt.digits < 20 || opt.digits > 1000)
        throw config_error("singularity: working precision must be between 20 and 1000 digits");
    ScopedPrecision guard(opt.digits + 20);
    const BivariatePoly qx = q.partial_x();
    const BivariatePoly qz = q.partial_z();
    const BivariatePoly qxx = qx.partial_x();

    SingularityData d;
    d.params = bundle.params;
    d.digits = opt.digits;
    d.rho = rho;
    d.tau = tau;
    d.residual_q = abs(q.eval_real(rho, tau));
    d.residual_qx = abs(qx.eval_real(rho, tau));
    d.rho_seed = rho;

    Real num = qz.eval_real(rho, tau);
    Real den = qxx.eval_real(rho, tau);
    if (den == 0)
        throw consistency_error("singularity: Q_XX vanishes, square-root schema does not apply");
    Real ratio = 2 * num / den;
    if (!(ratio > 0))
        throw consistency_error("singularity: Q_z/Q_XX <= 0, square-root schema does not apply");

    d.delta = -sqrt(ratio);
    const Real pi = boost::math::constants::pi<Real>();
    d.c = -d.delta * sqrt(rho) / (2 * sqrt(pi));  // delta sqrt(rho) / Gamma(-1/2)
    d.tau_prime = 1 - 1 / tau;
    d.delta_prime = d.delta / (tau * tau);
    d.c_prime = d.c / (tau * tau);
    const unsigned long two_r = static_cast<unsigned long>(2 * bundle.params.r);
    d.eta = pow_ui(rho, two_r) * tau * tau / (1 - rho * rho + pow_ui(rho, two_r));
    d.alpha = 4 * d.c / tau;
    d.beta = (1 - pi / 4) * d.alpha;

    if (!(d.c > 0) || !(d.alpha > 0) || !(d.eta > 0))
        throw consistency_error("singularity: constants violate their sign conditions");
    return d;
}

SingularityData analyze_singularity(const SeriesBundle& bundle, const SingularityOptions& opt) {
    if (bundle.order < 200)
        throw config_error("singularity: witness validation needs series order >= 200");
    BivariatePoly q = build_witness_polynomial(bundle.params);
    validate_witness_polynomial(q, bundle.G, bundle.params);
    auto [rho, tau] = find_dominant_singularity(q, bundle, opt);
    SingularityData d = singular_constants(q, rho, tau, bundle, opt);
    // Keep the certification reference actually used.
    {
        ScopedPrecision guard(opt.digits + 20);
        const int n = bundle.order - 1;
        d.rho_seed = to_real(bundle.g(n - 1)) / to_real(bundle.g(n)) *
                     pow(Real(n - 1) / Real(n), Real(3) / 2);
    }
    return d;
}

Real asymptotic_structure_count(const SingularityData& data, int n) {
    if (n < 1) throw config_error("asymptotics: n must be >= 1");
    ScopedPrecision guard(data.digits + 20);
    return data.c * pow(Real(n), Real(-3) / 2) * pow_ui(1 / data.rho, static_cast<unsigned long>(n));
}

Real asymptotic_block_count(const SingularityData& data, int n) {
    if (n < 1) throw config_error("asymptotics: n must be >= 1");
    ScopedPrecision guard(data.digits + 20);
    return data.c_prime * pow(Real(n), Real(-3) / 2) *
           pow_ui(1 / data.rho, static_cast<unsigned long>(n));
}

}  // namespace blockspec
