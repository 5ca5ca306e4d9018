#include "blockspec/singularity.hpp"

#include <doctest.h>

using namespace blockspec;

TEST_SUITE("singularity") {

TEST_CASE("witness polynomial for the secondary-structure case") {
    // gamma=0, r=1, lambda=2 collapses to z^2 X^2 - (1 - z + z^2) X + 1.
    BivariatePoly q = build_witness_polynomial(StructureParams(0, 1, 2));
    CHECK(q.degree_x() == 2);
    CHECK(q.coefficient(2, 2) == 1);
    CHECK(q.coefficient(1, 0) == -1);
    CHECK(q.coefficient(1, 1) == 1);
    CHECK(q.coefficient(1, 2) == -1);
    CHECK(q.coefficient(0, 0) == 1);
    CHECK(q.coefficient(0, 1) == 0);
    CHECK(q.coefficient(2, 0) == 0);
}

TEST_CASE("witness degree and root at the origin") {
    CHECK(build_witness_polynomial(StructureParams(1, 2, 2)).degree_x() == 10);
    CHECK(build_witness_polynomial(StructureParams(2, 2, 2)).degree_x() == 22);
    ScopedPrecision guard(30);
    for (auto p : {StructureParams(0, 1, 2), StructureParams(1, 1, 1), StructureParams(1, 3, 4),
                   StructureParams(2, 2, 3)}) {
        BivariatePoly q = build_witness_polynomial(p);
        CHECK(q.eval_real(Real(0), Real(1)) == 0);  // G(0) = 1
    }
}

TEST_CASE("witness annihilates the solved series") {
    for (auto p : {StructureParams(0, 1, 2), StructureParams(1, 2, 2), StructureParams(2, 3, 4)}) {
        SeriesBundle b = solve_system(p, 200);
        BivariatePoly q = build_witness_polynomial(p);
        CHECK_NOTHROW(validate_witness_polynomial(q, b.G, p));
    }
}

TEST_CASE("partial derivatives") {
    // d/dX and d/dz of z^2 X^2 - (1 - z + z^2) X + 1.
    BivariatePoly q = build_witness_polynomial(StructureParams(0, 1, 2));
    BivariatePoly qx = q.partial_x();
    CHECK(qx.degree_x() == 1);
    CHECK(qx.coefficient(1, 2) == 2);
    CHECK(qx.coefficient(0, 0) == -1);
    BivariatePoly qz = q.partial_z();
    CHECK(qz.coefficient(2, 1) == 2);
    CHECK(qz.coefficient(1, 0) == 1);
    CHECK(qz.coefficient(1, 1) == -2);
}

TEST_CASE("secondary-structure closed forms") {
    // rho = (3 - sqrt 5)/2, tau = 1/rho, alpha = 1.6873...
    SeriesBundle b = solve_system(StructureParams(0, 1, 2), 200);
    SingularityData d = analyze_singularity(b);
    ScopedPrecision guard(80);
    Real rho_exact = (3 - sqrt(Real(5))) / 2;
    CHECK(abs(d.rho - rho_exact) < Real("1e-45"));
    CHECK(abs(d.tau - 1 / rho_exact) < Real("1e-45"));
    CHECK(abs(d.tau * d.rho - 1) < Real("1e-45"));
    CHECK(abs(d.alpha - Real("1.68732")) < Real("1e-4"));
    CHECK(abs(d.eta - 1) < Real("1e-45"));
    CHECK(d.residual_q < Real("1e-50"));
    CHECK(d.residual_qx < Real("1e-50"));
    CHECK(d.delta < 0);
    CHECK(d.c > 0);
}

TEST_CASE("constants satisfy their defining relations") {
    for (auto p : {StructureParams(1, 2, 2), StructureParams(2, 2, 2)}) {
        SeriesBundle b = solve_system(p, 200);
        SingularityData d = analyze_singularity(b);
        ScopedPrecision guard(80);
        CHECK(abs(d.tau - 1 / (1 - d.tau_prime)) < Real("1e-45"));
        CHECK(abs(d.delta_prime - d.delta / (d.tau * d.tau)) < Real("1e-45"));
        CHECK(abs(d.alpha - 4 * d.c / d.tau) < Real("1e-45"));
        CHECK(d.rho > 0);
        CHECK(d.rho < 1);
        CHECK(d.tau > 1);
        CHECK(d.eta > 0);
        CHECK(d.eta < 1);
    }
}

TEST_CASE("reference alpha values") {
    struct Cell {
        int gamma, r, lambda;
        double alpha;
    };
    for (auto [gamma, r, lambda, alpha] :
         {Cell{0, 1, 2, 1.687}, {1, 2, 2, 1.196}, {2, 2, 2, 0.896}}) {
        SeriesBundle b = solve_system(StructureParams(gamma, r, lambda), 200);
        SingularityData d = analyze_singularity(b);
        CHECK(abs(d.alpha - Real(alpha)) < Real("1e-3"));
    }
}

TEST_CASE("eta does not depend on the length constraints") {
    ScopedPrecision guard(80);
    Real eta1 = analyze_singularity(solve_system(StructureParams(1, 1, 2), 200)).eta;
    Real eta2 = analyze_singularity(solve_system(StructureParams(1, 3, 4), 200)).eta;
    CHECK(abs(eta1 - eta2) < Real("1e-40"));
    CHECK(abs(eta1 - Real("0.227071")) < Real("1e-6"));
}

TEST_CASE("asymptotic counts") {
    SeriesBundle b = solve_system(StructureParams(1, 2, 2), 210);
    SingularityData d = analyze_singularity(b);
    for (int n : {10, 100, 1000}) CHECK(asymptotic_structure_count(d, n) > 0);
    ScopedPrecision guard(80);
    // Relative error shrinks between n = 100 and n = 200.
    Real e100 = abs(Real(b.g(100)) / asymptotic_structure_count(d, 100) - 1);
    Real e200 = abs(Real(b.g(200)) / asymptotic_structure_count(d, 200) - 1);
    CHECK(e200 < e100);
    CHECK(e200 < Real("0.05"));
    CHECK(asymptotic_block_count(d, 100) < asymptotic_structure_count(d, 100));
}

TEST_CASE("a wrong seed bundle fails the dominance certificate") {
    SeriesBundle wrong = solve_system(StructureParams(0, 1, 2), 200);
    BivariatePoly q = build_witness_polynomial(StructureParams(1, 2, 2));
    CHECK_THROWS_AS(find_dominant_singularity(q, wrong), consistency_error);
}

TEST_CASE("order and precision requirements are enforced") {
    SeriesBundle small = solve_system(StructureParams(1, 2, 2), 50);
    CHECK_THROWS_AS(analyze_singularity(small), config_error);
    BivariatePoly q = build_witness_polynomial(StructureParams(1, 2, 2));
    CHECK_THROWS_AS(find_dominant_singularity(q, small), config_error);
    SeriesBundle b = solve_system(StructureParams(1, 2, 2), 200);
    SingularityOptions sloppy;
    sloppy.digits = 8;  // would make the Newton tolerance vacuous
    CHECK_THROWS_AS(analyze_singularity(b, sloppy), config_error);
}

}  // TEST_SUITE
