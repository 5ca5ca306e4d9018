#include "blockspec/oracle.hpp"
#include "blockspec/series.hpp"

#include <doctest.h>

using namespace blockspec;

TEST_SUITE("series") {

TEST_CASE("solved counting sequences match the exhaustive enumeration") {
    struct Case {
        int gamma, r, lambda;
    };
    for (auto [gamma, r, lambda] : {Case{0, 1, 2}, {1, 1, 2}, {1, 2, 2}, {2, 1, 1}, {2, 3, 4}}) {
        StructureParams p(gamma, r, lambda);
        SeriesBundle b = solve_system(p, 12);
        for (int n = 0; n <= 10; ++n) {
            auto st = enumerate_structures(n, p);
            CHECK(b.g(n) == st.count);
        }
    }
}

TEST_CASE("low-order coefficients") {
    for (auto p : {StructureParams(0, 1, 2), StructureParams(1, 2, 2), StructureParams(2, 3, 4)}) {
        SeriesBundle b = solve_system(p, 8);
        CHECK(b.g(0) == 1);
        CHECK(b.g(1) == 1);
        CHECK(b.f(0) == 0);
        CHECK(b.f(1) == 1);
    }
    // gamma=0, r=1, lambda=2: the classical arc-length-two sequence.
    SeriesBundle b = solve_system(StructureParams(0, 1, 2), 9);
    const int expected[] = {1, 1, 1, 2, 4, 8, 17, 37, 82};
    for (int n = 0; n <= 8; ++n) CHECK(b.g(n) == expected[n]);
    CHECK(solve_system(StructureParams(1, 1, 2), 5).g(4) == 5);
}

TEST_CASE("bundle identities hold at several truncation orders") {
    for (int order : {50, 200}) {
        SeriesBundle b = solve_system(StructureParams(1, 2, 2), order);
        CHECK_NOTHROW(verify_bundle(b));
        CHECK(b.order == order);
    }
    // Large order via the accelerated path.
    SeriesBundle big = solve_system(StructureParams(1, 2, 2), 600, SolveMethod::Newton);
    CHECK_NOTHROW(verify_bundle(big));
}

TEST_CASE("newton path agrees exactly with the fixed point") {
    for (auto p : {StructureParams(0, 1, 2), StructureParams(1, 2, 2), StructureParams(2, 2, 2),
                   StructureParams(1, 1, 1)}) {
        SeriesBundle fp = solve_system(p, 150, SolveMethod::FixedPoint);
        SeriesBundle nw = solve_system(p, 150, SolveMethod::Newton);
        CHECK(fp.G == nw.G);
        CHECK(fp.F == nw.F);
        CHECK(fp.B0 == nw.B0);
        CHECK(fp.Bgamma == nw.Bgamma);
    }
}

TEST_CASE("coefficients are nonnegative integers across the parameter grid") {
    for (int gamma = 0; gamma <= 2; ++gamma)
        for (int r = 1; r <= 4; ++r)
            for (int lambda = 1; lambda <= std::min(4, r + 1); ++lambda) {
                SeriesBundle b = solve_system(StructureParams(gamma, r, lambda), 60);
                CHECK(b.G.is_nonnegative_integer_series());
                CHECK(b.F.is_nonnegative_integer_series());
            }
}

TEST_CASE("monotonicity in gamma and stack length") {
    const int N = 101;
    SeriesBundle g0 = solve_system(StructureParams(0, 2, 2), N);
    SeriesBundle g1 = solve_system(StructureParams(1, 2, 2), N);
    SeriesBundle g2 = solve_system(StructureParams(2, 2, 2), N);
    for (int n = 0; n < N; ++n) {
        CHECK(g0.g(n) <= g1.g(n));
        CHECK(g1.g(n) <= g2.g(n));
    }
    SeriesBundle r1 = solve_system(StructureParams(1, 1, 2), N);
    SeriesBundle r2 = solve_system(StructureParams(1, 2, 2), N);
    SeriesBundle r3 = solve_system(StructureParams(1, 3, 2), N);
    SeriesBundle r4 = solve_system(StructureParams(1, 4, 2), N);
    for (int n = 0; n < N; ++n) {
        CHECK(r1.g(n) >= r2.g(n));
        CHECK(r2.g(n) >= r3.g(n));
        CHECK(r3.g(n) >= r4.g(n));
    }
}

TEST_CASE("type series identities") {
    StructureParams p(1, 1, 2);
    SeriesBundle b = solve_system(p, 60);
    // T coincides with the zero-block series.
    CHECK(block_type_series(b, BlockType::T) == b.B0);
    // K and L have identical closed forms.
    CHECK(block_type_series(b, BlockType::K) == block_type_series(b, BlockType::L));
    // gamma = 1: the four pseudoknot series exhaust the gamma blocks.
    PowerSeries sum = block_type_series(b, BlockType::H) + block_type_series(b, BlockType::K) +
                      block_type_series(b, BlockType::L) + block_type_series(b, BlockType::M);
    CHECK(sum == b.Bgamma);
    CHECK(block_type_series(b, BlockType::H)[4] == 1);
    CHECK_THROWS_AS(block_type_series(b, BlockType::Trivial), config_error);
    // gamma = 2 leaves a nonzero genus-2 remainder.
    SeriesBundle b2 = solve_system(StructureParams(2, 1, 2), 60);
    auto all2 = block_type_series_all(b2);
    CHECK(all2.at(BlockType::Other).valuation() < 60);
    CHECK(all2.at(BlockType::Other)[8] == 17);  // the genus-2 shadows themselves
    auto all1 = block_type_series_all(b);
    CHECK(all1.at(BlockType::Other).valuation() == 60);  // identically zero
}

TEST_CASE("type series match the single-block census") {
    StructureParams p(2, 1, 2);
    SeriesBundle b = solve_system(p, 12);
    auto types = block_type_series_all(b);
    for (int k = 2; k <= 9; ++k) {
        auto st = enumerate_structures(k, p);
        for (BlockType t : {BlockType::T, BlockType::H, BlockType::K, BlockType::L, BlockType::M,
                            BlockType::Other}) {
            // Blocks of length k inside structures of length k are whole
            // structures that consist of that single block.
            CHECK(types.at(t)[k] == st.block_census[k][block_type_index(t)]);
        }
        CHECK(b.f(k) == st.block_census[k][block_type_index(BlockType::T)] +
                            st.block_census[k][block_type_index(BlockType::H)] +
                            st.block_census[k][block_type_index(BlockType::K)] +
                            st.block_census[k][block_type_index(BlockType::L)] +
                            st.block_census[k][block_type_index(BlockType::M)] +
                            st.block_census[k][block_type_index(BlockType::Other)]);
    }
}

TEST_CASE("truncated structure series") {
    SeriesBundle b = solve_system(StructureParams(1, 2, 2), 40);
    // m = 1: all-unpaired structures, 1/(1-z).
    PowerSeries all_unpaired = truncated_structure_series(b, 1);
    for (int n = 0; n < 40; ++n) CHECK(all_unpaired[n] == 1);
    // Vacuous truncation recovers G.
    CHECK(truncated_structure_series(b, 39) == b.G);
    CHECK(truncated_structure_series(b, 0) == PowerSeries::one(40));
}

TEST_CASE("phi-prime identity: [z^k] 1/(1-F)^2 = [z^k] G^2") {
    SeriesBundle b = solve_system(StructureParams(1, 2, 2), 80);
    PowerSeries phi_prime = (PowerSeries::one(80) - b.F).reciprocal().pow(2);
    CHECK(phi_prime == b.G * b.G);
}

TEST_CASE("bivariate block-count refinement") {
    StructureParams p(1, 1, 2);
    SeriesBundle b = solve_system(p, 12);
    auto st = enumerate_structures(10, p);
    for (int k : {1, 2, 4}) {
        auto slices = bivariate_block_count_series(b, k, std::nullopt, 10 / k);
        // Marginalizing over b recovers G.
        for (int n = 0; n <= 10; ++n) {
            Rat sum(0);
            for (const auto& s : slices) sum += s[n];
            CHECK(sum == b.g(n));
        }
        // Slices match the per-b census at n = 10.
        for (size_t bb = 0; bb < slices.size(); ++bb)
            CHECK(slices[bb][10] == st.by_count[k][bb]);
    }
    // Typed slices at k = 4, type H.
    auto typed = bivariate_block_count_series(b, 4, BlockType::H, 2);
    for (size_t bb = 0; bb < typed.size(); ++bb)
        CHECK(typed[bb][10] == st.typed_by_count[4][block_type_index(BlockType::H)][bb]);
}

TEST_CASE("solver input validation") {
    CHECK_THROWS_AS(solve_system(StructureParams(1, 2, 2), 0), config_error);
    SeriesBundle b = solve_system(StructureParams(1, 2, 2), 10);
    CHECK_THROWS_AS(bivariate_block_count_series(b, 0, std::nullopt, 3), config_error);
    CHECK_THROWS_AS(bivariate_block_count_series(b, 12, std::nullopt, 3), config_error);
    CHECK_THROWS_AS(truncated_structure_series(b, -1), config_error);
}

}  // TEST_SUITE
