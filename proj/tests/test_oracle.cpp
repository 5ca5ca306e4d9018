#include "blockspec/oracle.hpp"
#include "blockspec/numeric.hpp"

#include <doctest.h>

using namespace blockspec;

TEST_SUITE("oracle") {

TEST_CASE("empty backbone counts the empty structure") {
    auto st = enumerate_structures(0, StructureParams(1, 2, 2));
    CHECK(st.count == 1);
    CHECK(st.sequence_census.size() == 1);
    CHECK(st.sequence_census.begin()->first.empty());
}

TEST_CASE("secondary structures with lambda = 2") {
    const std::int64_t expected[] = {1, 1, 1, 2, 4, 8, 17, 37, 82};
    StructureParams p(0, 1, 2);
    for (int n = 0; n <= 8; ++n) CHECK(enumerate_structures(n, p).count == expected[n]);
}

TEST_CASE("lambda = 1 admits 1-arcs: Motzkin numbers at gamma = 0") {
    const std::int64_t expected[] = {1, 1, 2, 4, 9, 21, 51, 127};
    StructureParams p(0, 1, 1);
    for (int n = 0; n <= 7; ++n) CHECK(enumerate_structures(n, p).count == expected[n]);
}

TEST_CASE("gamma = 1 structures over four vertices") {
    // empty; (1,3); (2,4); (1,4); the crossing pair {(1,3),(2,4)}
    auto st = enumerate_structures(4, StructureParams(1, 1, 2));
    CHECK(st.count == 5);
    CHECK(st.longest_block[4] == 2);  // (1,4) and the crossing pair
    CHECK(st.longest_block[3] == 2);  // (1,3) or (2,4) plus one trivial
    CHECK(st.longest_block[1] == 1);  // the empty structure
    CHECK(st.block_census[4][block_type_index(BlockType::H)] == 1);
    CHECK(st.block_census[4][block_type_index(BlockType::T)] == 1);
    // Exactly-b counts for blocks of length 1.
    CHECK(st.by_count[1][4] == 1);  // the empty structure
    CHECK(st.by_count[1][1] == 2);  // (1,3) / (2,4) leave one vertex exposed
    CHECK(st.by_count[1][0] == 2);  // (1,4) and the crossing pair
}

TEST_CASE("stack constraint rejects short stacks") {
    // r = 2: the lone arc (1,3) is a length-1 stack.
    auto st = enumerate_structures(4, StructureParams(1, 2, 2));
    CHECK(st.count == 1);  // only the empty structure
    // Over 6 vertices: empty plus the three doubled arcs {(i,j),(i+1,j-1)}.
    auto st6 = enumerate_structures(6, StructureParams(0, 2, 2));
    CHECK(st6.count == 4);
}

TEST_CASE("genus filter distinguishes gamma = 1 from gamma = 2") {
    StructureParams p1(1, 1, 1), p2(2, 1, 1);
    // The 4-crossing over 8 vertices has genus 2; it is counted only at gamma=2.
    CHECK(is_structure(Diagram(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}), p2));
    CHECK_FALSE(is_structure(Diagram(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}), p1));
    CHECK(enumerate_structures(8, p2).count > enumerate_structures(8, p1).count);
}

TEST_CASE("bound refusal and parallel determinism") {
    StructureParams p(1, 1, 2);
    CHECK_THROWS_AS(enumerate_structures(15, p), config_error);
    auto serial = enumerate_structures(9, p, 14, false);
    auto parallel = enumerate_structures(9, p, 14, true);
    CHECK(serial.count == parallel.count);
    CHECK(serial.longest_block == parallel.longest_block);
    CHECK(serial.block_census == parallel.block_census);
    CHECK(serial.by_count == parallel.by_count);
    CHECK(serial.sequence_census == parallel.sequence_census);
}

TEST_CASE("block sequence of one diagram") {
    BlockSeq seq = block_sequence(Diagram(6, {{1, 3}, {2, 4}}));
    REQUIRE(seq.size() == 3);
    CHECK(seq[0] == std::pair{4, BlockType::H});
    CHECK(seq[1] == std::pair{1, BlockType::Trivial});
    CHECK(seq[2] == std::pair{1, BlockType::Trivial});
}

}  // TEST_SUITE
