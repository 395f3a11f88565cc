#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include <qwedge/blocks.hpp>

#include "support/orders.hpp"

using namespace qwedge;

TEST_CASE("encode reproduces the worked rank-2 level-3 sequence", "[blocks]") {
    const MultiPartition mp = {{}, {1, 1}, {4}};
    const MultiCharge charge = {2, 0, -2};
    const std::vector<int> expected = {6, 3, 2, 1, -2, -4, -5, -7, -8, -9};
    CHECK(encode(mp, charge, 2, 10) == expected);

    // Deeper truncations extend the frozen staircase only.
    const auto longer = encode(mp, charge, 2, 16);
    REQUIRE(longer.size() == 16);
    CHECK(std::equal(expected.begin(), expected.end(), longer.begin()));
    for (int i = 10; i < 16; ++i) CHECK(longer[i] == -i);
}

TEST_CASE("decode inverts encode", "[blocks]") {
    const MultiPartition mp = {{}, {1, 1}, {4}};
    const MultiCharge charge = {2, 0, -2};
    const auto word = encode(mp, charge, 2, 10);
    const auto dec = decode(word, 2, 3);
    CHECK(dec.mp == mp);
    CHECK(dec.charge == charge);

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> part(0, 4), charge_dist(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + (trial % 2), level = 1 + (trial % 3);
        MultiPartition sample(level);
        MultiCharge s(level);
        for (auto& p : sample) {
            for (int row = part(rng); row > 0; --row) p.push_back(part(rng) + 1);
            std::sort(p.rbegin(), p.rend());
        }
        for (auto& c : s) c = charge_dist(rng);
        BlockSpec spec{n, level, s, multipartition_size(sample)};
        const int r = choose_truncation(spec);
        const auto w = encode(sample, s, n, r);
        REQUIRE(static_cast<int>(w.size()) == r);
        const auto back = decode(w, n, level);
        CHECK(back.mp == sample);
        CHECK(back.charge == s);
        CHECK(decode_in_block(w, spec).mp == sample);
    }
}

TEST_CASE("encode rejects truncations that cut into the excitation", "[blocks]") {
    const MultiPartition mp = {{}, {1, 1}, {4}};
    const MultiCharge charge = {2, 0, -2};
    CHECK_THROWS_AS(encode(mp, charge, 2, 4), InputError);
    // A column of six boxes leaves a hole six rows down; cutting between the
    // raised bead and its hole shifts the tail and must be refused.
    CHECK_THROWS_AS(encode({{}, {}, {1, 1, 1, 1, 1, 1}}, {0, 0, 0}, 2, 6), InputError);
}

TEST_CASE("decode rejects malformed words", "[blocks]") {
    CHECK_THROWS_AS(decode({3, 3, 1}, 2, 2), InputError);
    CHECK_THROWS_AS(decode({1, 3}, 2, 2), InputError);
    const BlockSpec spec{2, 2, {0, 0}, 1};
    const auto word = encode({{1}, {}}, {0, 0}, 2, choose_truncation(spec));
    CHECK_THROWS_AS(decode_in_block(word, BlockSpec{2, 2, {1, -1}, 1}), EngineError);
    CHECK_THROWS_AS(decode_in_block(word, BlockSpec{2, 2, {0, 0}, 2}), EngineError);
}

TEST_CASE("abacus beads land on the documented runners and rows", "[blocks]") {
    const std::vector<int> word = {6, 3, 2, 1, -2, -4, -5, -7, -8, -9};
    const std::set<std::pair<int, int>> expected = {
        {6, 0}, {3, 0}, {2, 0}, {1, 0}, {4, 1},
        {2, 1}, {1, 1}, {5, 2}, {4, 2}, {3, 2},
    };
    CHECK(abacus_beads(word, 2, 3) == expected);

    const auto picture = render_abacus(word, 2, 3);
    CHECK(picture.find('o') != std::string::npos);
    CHECK(picture.find('|') != std::string::npos);
    CHECK(picture.find("m=0") != std::string::npos);
}

TEST_CASE("dominance on the worked pair of bipartitions", "[blocks]") {
    // ((1,1), -) vs (-, (2)) at charges (1,-1): beta multisets {2,1,-1}
    // against {1,1,0}; the first strictly dominates.
    const MultiPartition a = {{1, 1}, {}};
    const MultiPartition b = {{}, {2}};
    const MultiCharge s = {1, -1};
    CHECK(dominance_leq(a, b, s, 2) == DomRel::greater);
    CHECK(dominance_leq(b, a, s, 2) == DomRel::less);
    CHECK(dominance_leq(a, a, s, 2) == DomRel::equal);
}

TEST_CASE("dominance falls through to index words on equal multisets", "[blocks]") {
    // ((1), -) vs (-, (1)) at charges (0,0): identical beta multisets, the
    // index-word partial sums break the tie in favor of the second sector.
    const MultiPartition a = {{1}, {}};
    const MultiPartition b = {{}, {1}};
    const MultiCharge s = {0, 0};
    CHECK(dominance_leq(a, b, s, 2) == DomRel::less);
    CHECK(dominance_leq(b, a, s, 2) == DomRel::greater);
}

TEST_CASE("dominance is a partial order on blocks", "[blocks]") {
    const BlockSpec spec{2, 2, {1, -1}, 3};
    const auto labels = enumerate_block(spec);
    for (const auto& x : labels)
        for (const auto& y : labels) {
            const auto xy = dominance_leq(x, y, spec.charge, spec.n);
            const auto yx = dominance_leq(y, x, spec.charge, spec.n);
            if (x == y) {
                CHECK(xy == DomRel::equal);
                continue;
            }
            // Antisymmetry and consistency of the reversed comparison.
            if (xy == DomRel::greater) CHECK(yx == DomRel::less);
            if (xy == DomRel::less) CHECK(yx == DomRel::greater);
            if (xy == DomRel::incomparable) CHECK(yx == DomRel::incomparable);
            CHECK(xy != DomRel::equal);
        }
    // Transitivity of strict dominance.
    for (const auto& x : labels)
        for (const auto& y : labels)
            for (const auto& z : labels) {
                if (dominance_leq(x, y, spec.charge, spec.n) == DomRel::greater &&
                    dominance_leq(y, z, spec.charge, spec.n) == DomRel::greater)
                    CHECK(dominance_leq(x, z, spec.charge, spec.n) == DomRel::greater);
            }
}

TEST_CASE("block enumeration counts multipartitions", "[blocks]") {
    auto count = [](int n, int level, MultiCharge s, int N) {
        return enumerate_block(BlockSpec{n, level, std::move(s), N}).size();
    };
    CHECK(count(2, 1, {0}, 6) == 11u);
    CHECK(count(2, 2, {3, -3}, 6) == 65u);
    CHECK(count(3, 2, {1, 0}, 4) == 20u);
    CHECK(count(2, 3, {2, 0, -2}, 5) == 108u);
    CHECK(count(2, 2, {0, 0}, 0) == 1u);
}

TEST_CASE("block order is a descending extension of dominance", "[blocks]") {
    for (const BlockSpec spec : {BlockSpec{2, 2, {3, -3}, 4}, BlockSpec{2, 2, {0, 0}, 4},
                                 BlockSpec{3, 2, {1, -1}, 3}, BlockSpec{2, 3, {1, 0, -1}, 3}}) {
        const auto order = enumerate_block(spec);
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t k = i + 1; k < order.size(); ++k)
                CHECK(dominance_leq(order[k], order[i], spec.charge, spec.n) != DomRel::greater);
    }
}

TEST_CASE("alternate linear extension is valid and usually different", "[blocks]") {
    const BlockSpec spec{2, 2, {3, -3}, 4};
    const auto order = enumerate_block(spec);
    const auto alt = qwedge::testing::alternate_descending_order(spec);
    REQUIRE(alt.size() == order.size());
    CHECK(std::is_permutation(alt.begin(), alt.end(), order.begin()));
    for (std::size_t i = 0; i < alt.size(); ++i)
        for (std::size_t k = i + 1; k < alt.size(); ++k)
            CHECK(dominance_leq(alt[k], alt[i], spec.charge, spec.n) != DomRel::greater);
    CHECK(alt != order);
}

TEST_CASE("truncation depth covers the charge spread", "[blocks]") {
    CHECK(choose_truncation(BlockSpec{2, 2, {3, -3}, 6}) == 28);
    CHECK(choose_truncation(BlockSpec{2, 1, {0}, 4}) % 2 == 0);
    // Always a positive multiple of n*level and deep enough to freeze.
    for (int N : {0, 3, 6}) {
        const BlockSpec spec{2, 3, {4, 0, -4}, N};
        const int r = choose_truncation(spec);
        CHECK(r % 6 == 0);
        for (const auto& mp : enumerate_block(spec)) CHECK_NOTHROW(encode(mp, spec.charge, 2, r));
    }
}

TEST_CASE("block spec validation and keys", "[blocks]") {
    CHECK_THROWS_AS(BlockSpec({1, 2, {0, 0}, 1}).validate(), InputError);
    CHECK_THROWS_AS(BlockSpec({2, 2, {0}, 1}).validate(), InputError);
    CHECK_THROWS_AS(BlockSpec({2, 2, {0, 0}, -1}).validate(), InputError);
    const BlockSpec spec{2, 2, {3, -3}, 6};
    CHECK(spec.key() == "n2-l2-s3,-3-N6");
    CHECK(spec.total_charge() == 0);
}
