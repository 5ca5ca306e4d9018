#include "blockspec/oracle.hpp"
#include "blockspec/sampler.hpp"
#include "blockspec/spectrum.hpp"
#include "blockspec/stats.hpp"

#include <doctest.h>

using namespace blockspec;

TEST_SUITE("sampler") {

TEST_CASE("uniform_below stays in range and is reproducible") {
    std::mt19937_64 a(123), b(123);
    Int bound = (Int(1) << 100) + 12345;
    for (int i = 0; i < 200; ++i) {
        Int x = uniform_below(bound, a);
        CHECK(x >= 0);
        CHECK(x < bound);
        CHECK(x == uniform_below(bound, b));
    }
    std::mt19937_64 c(1);
    CHECK(uniform_below(Int(1), c) == 0);
    CHECK_THROWS_AS(uniform_below(Int(0), c), config_error);
}

TEST_CASE("identical seeds give identical streams") {
    SeriesBundle bundle = solve_system(StructureParams(1, 1, 2), 40);
    BlockSequenceSampler s1(bundle, 30, 987), s2(bundle, 30, 987);
    for (int i = 0; i < 50; ++i) {
        auto a = s1.sample(30);
        auto b = s2.sample(30);
        CHECK(a.blocks == b.blocks);
    }
    BlockSequenceSampler s3(bundle, 30, 988);
    bool any_diff = false;
    BlockSequenceSampler s4(bundle, 30, 987);
    for (int i = 0; i < 50 && !any_diff; ++i) any_diff = !(s3.sample(30).blocks == s4.sample(30).blocks);
    CHECK(any_diff);
}

TEST_CASE("empty draw and line format") {
    SeriesBundle bundle = solve_system(StructureParams(1, 1, 2), 12);
    BlockSequenceSampler s(bundle, 10, 5);
    auto empty = s.sample(0);
    CHECK(empty.blocks.empty());
    CHECK(empty.to_line().empty());
    BlockSequenceSample one;
    one.total = 5;
    one.blocks = {{4, BlockType::H}, {1, BlockType::Trivial}};
    CHECK(one.to_line() == "4:H;1:trivial");
}

TEST_CASE("sampled lengths sum to n and types respect their lengths") {
    SeriesBundle bundle = solve_system(StructureParams(2, 1, 1), 40);
    BlockSequenceSampler s(bundle, 32, 99);
    for (int i = 0; i < 300; ++i) {
        auto smp = s.sample(32);
        int total = 0;
        for (auto& [len, type] : smp.blocks) {
            total += len;
            if (len == 1) CHECK(type == BlockType::Trivial);
            if (type == BlockType::H) CHECK(len >= 4);
            if (type == BlockType::Other) CHECK(len >= 8);
        }
        CHECK(total == 32);
    }
}

TEST_CASE("sampler distribution equals the enumeration census exactly") {
    StructureParams p(1, 1, 2);
    SeriesBundle bundle = solve_system(p, 12);
    BlockSequenceSampler s(bundle, 10, 7);
    for (int n = 0; n <= 9; ++n) {
        auto st = enumerate_structures(n, p);
        Rat total(0);
        for (const auto& [seq, count] : st.sequence_census) {
            Rat prob = s.sequence_probability(seq);
            CHECK(prob == Rat(count) / Rat(st.count));
            total += prob;
        }
        CHECK(total == 1);  // the census support carries all sampler mass
    }
}

TEST_CASE("goodness of fit against the exact laws at n = 60") {
    StructureParams p(1, 1, 2);
    SeriesBundle bundle = solve_system(p, 62);
    BlockSequenceSampler s(bundle, 60, 20240808);
    const int samples = 20000;
    std::vector<std::int64_t> longest_hist(61, 0);
    std::vector<std::int64_t> short4_hist(16, 0);
    for (int i = 0; i < samples; ++i) {
        auto smp = s.sample(60);
        int longest = 0, blocks4 = 0;
        for (auto& [len, type] : smp.blocks) {
            longest = std::max(longest, len);
            if (len == 4) ++blocks4;
        }
        ++longest_hist[static_cast<size_t>(longest)];
        ++short4_hist[static_cast<size_t>(std::min(blocks4, 15))];
    }
    Pmf longest_law = longest_block_exact_dist(bundle, 60);
    std::vector<double> longest_probs(61, 0.0);
    for (int m = 1; m <= 60; ++m)
        longest_probs[static_cast<size_t>(m)] = Real(longest_law.exact[static_cast<size_t>(m - 1)]).convert_to<double>();
    auto gof = chi_square_gof(longest_hist, longest_probs, samples);
    CHECK(gof.p_value > 1e-3);

    Pmf short_law = short_block_exact_dist(bundle, 4, std::nullopt, 60);
    std::vector<double> short_probs(16, 0.0);
    for (size_t b = 0; b < short_law.exact.size(); ++b) {
        double v = Real(short_law.exact[b]).convert_to<double>();
        short_probs[std::min<size_t>(b, 15)] += v;
    }
    auto gof4 = chi_square_gof(short4_hist, short_probs, samples);
    CHECK(gof4.p_value > 1e-3);
}

TEST_CASE("sampler input validation") {
    SeriesBundle bundle = solve_system(StructureParams(1, 1, 2), 12);
    CHECK_THROWS_AS(BlockSequenceSampler(bundle, 12, 1), config_error);  // order too small
    BlockSequenceSampler s(bundle, 10, 1);
    CHECK_THROWS_AS(s.sample(11), config_error);
    CHECK_THROWS_AS(s.sample(-1), config_error);
}

}  // TEST_SUITE
