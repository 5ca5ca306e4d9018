#include "blockspec/diagram.hpp"
#include "blockspec/numeric.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

using namespace blockspec;

namespace {

// All partial matchings over n vertices (no length constraint).
void all_diagrams_rec(int v, int n, std::vector<int>& partner, std::vector<Arc>& arcs,
                      const std::function<void(const Diagram&)>& fn) {
    while (v <= n && partner[v] != 0) ++v;
    if (v > n) {
        fn(Diagram(n, arcs));
        return;
    }
    partner[v] = -1;
    all_diagrams_rec(v + 1, n, partner, arcs, fn);
    partner[v] = 0;
    for (int j = v + 1; j <= n; ++j) {
        if (partner[j] != 0) continue;
        partner[v] = j;
        partner[j] = v;
        arcs.emplace_back(v, j);
        all_diagrams_rec(v + 1, n, partner, arcs, fn);
        arcs.pop_back();
        partner[v] = partner[j] = 0;
    }
}

void for_all_diagrams(int n, const std::function<void(const Diagram&)>& fn) {
    std::vector<int> partner(static_cast<size_t>(n) + 1, 0);
    std::vector<Arc> arcs;
    all_diagrams_rec(1, n, partner, arcs, fn);
}

Diagram random_diagram(int n, std::mt19937_64& rng) {
    std::vector<int> verts(static_cast<size_t>(n));
    std::iota(verts.begin(), verts.end(), 1);
    std::shuffle(verts.begin(), verts.end(), rng);
    std::uniform_int_distribution<int> pairs(0, n / 2);
    int m = pairs(rng);
    std::vector<Arc> arcs;
    for (int t = 0; t < m; ++t) {
        int a = verts[static_cast<size_t>(2 * t)], b = verts[static_cast<size_t>(2 * t + 1)];
        arcs.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Diagram(n, std::move(arcs));
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("crossing predicate") {
    CHECK(arcs_cross({1, 3}, {2, 4}));
    CHECK(arcs_cross({2, 4}, {1, 3}));
    CHECK_FALSE(arcs_cross({1, 4}, {2, 3}));  // nested
    CHECK_FALSE(arcs_cross({1, 2}, {3, 4}));  // disjoint
}

TEST_CASE("components: crossing pair is one class, nested pair is two") {
    auto one = components(Diagram(4, {{1, 3}, {2, 4}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].arcs.size() == 2);

    auto two = components(Diagram(4, {{1, 4}, {2, 3}}));
    CHECK(two.size() == 2);

    auto pairs = components(Diagram(8, {{1, 3}, {2, 4}, {5, 7}, {6, 8}}));
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].arcs.size() == 2);
    CHECK(pairs[1].arcs.size() == 2);

    CHECK(components(Diagram(5, {})).empty());
}

TEST_CASE("genus of basic diagrams") {
    CHECK(genus(Diagram(2, {{1, 2}})) == 0);
    CHECK(genus(Diagram(4, {{1, 3}, {2, 4}})) == 1);
    CHECK(genus(Diagram(4, {{1, 4}, {2, 3}})) == 0);
    CHECK(genus(Diagram(0, {})) == 0);
    CHECK(genus(Diagram(6, {})) == 0);
}

TEST_CASE("the 4-arc genus-1 shadow has three boundary components") {
    Diagram m(8, {{1, 4}, {2, 6}, {3, 7}, {5, 8}});
    CHECK(genus(m) == 1);
    CHECK(boundary_components(m) == 3);
}

TEST_CASE("blocks: basic decompositions") {
    auto trivial = blocks(Diagram(3, {}));
    REQUIRE(trivial.size() == 3);
    for (const auto& b : trivial) {
        CHECK(b.kind == BlockKind::Trivial);
        CHECK(b.length() == 1);
    }

    auto zero = blocks(Diagram(5, {{1, 5}, {2, 4}}));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].kind == BlockKind::ZeroBlock);
    CHECK(zero[0].length() == 5);
    CHECK(zero[0].shadow_type == BlockType::T);

    auto mixed = blocks(Diagram(6, {{1, 3}, {2, 4}}));
    REQUIRE(mixed.size() == 3);
    CHECK(mixed[0].kind == BlockKind::GammaBlock);
    CHECK(mixed[0].begin == 1);
    CHECK(mixed[0].end == 4);
    CHECK(mixed[0].shadow_type == BlockType::H);
    CHECK(mixed[1].kind == BlockKind::Trivial);
    CHECK(mixed[2].kind == BlockKind::Trivial);
}

TEST_CASE("shadow: noncrossing diagrams vanish, stacks collapse") {
    CHECK(shadow(Diagram(5, {{1, 5}, {2, 4}})) == Diagram(0, {}));

    // H with both arcs stacked twice.
    Diagram stacked(8, {{1, 6}, {2, 5}, {3, 8}, {4, 7}});
    CHECK(shadow(stacked) == Diagram(4, {{1, 3}, {2, 4}}));
}

TEST_CASE("shadow is idempotent and genus-preserving on components") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        Diagram d = random_diagram(10, rng);
        Diagram s = shadow(d);
        CHECK(shadow(s) == s);
    }
    for (int n = 2; n <= 10; ++n) {
        for_all_diagrams(n, [](const Diagram& d) {
            for (const auto& c : components(d)) {
                Diagram induced = [&] {
                    std::vector<Arc> arcs = c.arcs;
                    std::map<int, int> map;
                    for (int v : c.vertices) map[v] = static_cast<int>(map.size()) + 1;
                    for (auto& [i, j] : arcs) {
                        i = map[i];
                        j = map[j];
                    }
                    return Diagram(static_cast<int>(c.vertices.size()), arcs);
                }();
                Diagram s = shadow(induced);
                if (s.n > 0) CHECK(genus(s) == c.genus);
            }
        });
    }
}

TEST_CASE("genus additivity over components") {
    for (int n = 2; n <= 10; ++n) {
        for_all_diagrams(n, [](const Diagram& d) {
            int total = 0;
            for (const auto& c : components(d)) total += c.genus;
            CHECK(total == genus(d));
        });
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Diagram d = random_diagram(12, rng);
        int total = 0;
        for (const auto& c : components(d)) total += c.genus;
        CHECK(total == genus(d));
    }
}

TEST_CASE("blocks tile the backbone") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 2000; ++trial) {
        Diagram d = random_diagram(12, rng);
        auto bl = blocks(d);  // throws on any tiling violation
        int covered = 0;
        for (const auto& b : bl) covered += b.length();
        CHECK(covered == d.n);
    }
}

TEST_CASE("irreducible shadow census matches the genus polynomials") {
    // Counts of irreducible shadows of genus 1 by arc count: 1, 2, 1;
    // the 17 four-arc shadows of genus 2 are the lowest genus-2 coefficient.
    std::map<int, int> genus1, genus2;
    for (int m = 2; m <= 4; ++m) {
        for_all_diagrams(2 * m, [&](const Diagram& d) {
            if (static_cast<int>(d.arcs.size()) != m) return;
            auto comps = components(d);
            if (comps.size() != 1) return;
            if (!(shadow(d) == d)) return;
            if (comps[0].genus == 1) genus1[m]++;
            if (comps[0].genus == 2) genus2[m]++;
        });
    }
    CHECK(genus1[2] == 1);
    CHECK(genus1[3] == 2);
    CHECK(genus1[4] == 1);
    CHECK(genus2[4] == 17);
}

TEST_CASE("classify_block_type recognizes the canonical shadows") {
    auto type_of = [](const Diagram& d) {
        auto bl = blocks(d);
        REQUIRE(bl.size() == 1);
        return classify_block_type(bl[0], d);
    };
    // Nested stack -> T.
    CHECK(type_of(Diagram(4, {{1, 4}, {2, 3}})) == BlockType::T);
    CHECK(type_of(Diagram(4, {{1, 3}, {2, 4}})) == BlockType::H);
    // Kissing hairpin and 3-knot.
    CHECK(type_of(Diagram(6, {{1, 3}, {2, 5}, {4, 6}})) == BlockType::K);
    CHECK(type_of(Diagram(6, {{1, 4}, {2, 5}, {3, 6}})) == BlockType::L);
    CHECK(type_of(Diagram(8, {{1, 4}, {2, 6}, {3, 7}, {5, 8}})) == BlockType::M);
    // A genus-2 maximal component -> other.
    Diagram knot4(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}});
    CHECK(genus(knot4) == 2);
    CHECK(type_of(knot4) == BlockType::Other);

    BlockRecord trivial;
    trivial.begin = trivial.end = 1;
    trivial.kind = BlockKind::Trivial;
    CHECK_THROWS_AS(classify_block_type(trivial, Diagram(1, {})), config_error);
}

TEST_CASE("stacked pseudoknots classify like their shadow") {
    // H with each arc doubled, plus surrounding trivial blocks.
    Diagram d(10, {{2, 7}, {3, 6}, {4, 9}, {5, 8}});
    auto bl = blocks(d);
    REQUIRE(bl.size() == 3);
    CHECK(bl[0].kind == BlockKind::Trivial);
    CHECK(bl[1].shadow_type == BlockType::H);
    CHECK(bl[2].kind == BlockKind::Trivial);
}

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(Diagram(4, {{1, 3}, {3, 4}}), config_error);  // 3 paired twice
    CHECK_THROWS_AS(Diagram(4, {{3, 3}}), config_error);
    CHECK_THROWS_AS(Diagram(4, {{0, 2}}), config_error);
    CHECK_THROWS_AS(Diagram(4, {{2, 5}}), config_error);
    CHECK_THROWS_AS(Diagram(1, {{1, 1}}), config_error);
    CHECK_NOTHROW(Diagram(0, {}));
}

TEST_CASE("structure params validation") {
    CHECK_THROWS_AS(StructureParams(3, 1, 1), config_error);
    CHECK_THROWS_AS(StructureParams(-1, 1, 1), config_error);
    CHECK_THROWS_AS(StructureParams(1, 0, 1), config_error);
    CHECK_THROWS_AS(StructureParams(1, 5, 1), config_error);
    CHECK_THROWS_AS(StructureParams(1, 1, 3), config_error);  // lambda > r + 1
    CHECK_NOTHROW(StructureParams(2, 3, 4));
}

TEST_CASE("diagram text format round-trip") {
    Diagram d(6, {{1, 4}, {2, 5}});
    std::string text = format_diagram(d);
    CHECK(text == "n=6\n1 4\n2 5\n");
    std::istringstream in(text);
    CHECK(parse_diagram(in) == d);

    std::istringstream bad1("m=4\n");
    CHECK_THROWS_AS(parse_diagram(bad1), config_error);
    std::istringstream bad2("n=4\n1\n");
    CHECK_THROWS_AS(parse_diagram(bad2), config_error);
    std::istringstream bad3("n=4\n1 9\n");
    CHECK_THROWS_AS(parse_diagram(bad3), config_error);
}

}  // TEST_SUITE
