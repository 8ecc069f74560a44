#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "recipart/constructions.hpp"
#include "recipart/naive.hpp"
#include "recipart/smoothness.hpp"

using namespace recipart;
using namespace recipart::constructions;
using core::Partition;
using core::Rational;

TEST_CASE("compose_partitions examples") {
    const Partition b({2, 3, 6});
    const auto out = compose_partitions(b, b, 4);
    CHECK(out.parts() == std::vector<i64>{2, 3, 6, 8, 12, 24});
    CHECK(out.total() == 55);
    CHECK(out.recip() == Rational(5, 4));

    const auto seven = compose_partitions(Partition({1}), Partition({2, 3, 6}), 7);
    CHECK(seven.parts() == std::vector<i64>{2, 3, 6, 7});
    CHECK(seven.total() == 18);
    CHECK(seven.recip() == Rational(8, 7));

    CHECK_THROWS_AS(compose_partitions(Partition({1}), Partition({7}), 7),
                    std::invalid_argument);
    CHECK_THROWS_AS(compose_partitions(Partition({1}), Partition({2}), 1),
                    std::invalid_argument);
}

TEST_CASE("compose_partitions round-trip on random instances") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const i64 m = 2 + static_cast<i64>(rng() % 6);
        std::set<i64> bs, cs;
        while (bs.size() < 1 + rng() % 6) bs.insert(1 + static_cast<i64>(rng() % 40));
        while (cs.size() < 1 + rng() % 6) {
            const i64 v = 1 + static_cast<i64>(rng() % 200);
            if (v % m != 0) cs.insert(v);   // M-free C guarantees disjointness
        }
        const Partition b(std::vector<i64>(bs.begin(), bs.end()));
        const Partition c(std::vector<i64>(cs.begin(), cs.end()));
        const auto out = compose_partitions(b, c, m);
        CHECK(out.total() == m * b.total() + c.total());
        CHECK(out.recip() == b.recip() / Rational(m) + c.recip());
    }
}

TEST_CASE("greedy_balanced_split examples") {
    const auto base = greedy_balanced_split({1, 2, 3, 4, 5, 6}, 2);
    CHECK(base.blocks[0] == std::vector<i64>{1, 5});
    CHECK(base.blocks[1] == std::vector<i64>{2, 3, 4, 6});
    CHECK(base.recips[0] == Rational(6, 5));
    CHECK(base.recips[1] == Rational(5, 4));
    CHECK(base.spread() == Rational(1, 20));

    const auto single = greedy_balanced_split({4, 9, 7}, 1);
    CHECK(single.blocks[0] == std::vector<i64>{4, 7, 9});

    const auto sparse = greedy_balanced_split({1, 2}, 3);
    CHECK(sparse.blocks[2].empty());
    CHECK(sparse.spread() == Rational(1));

    CHECK_THROWS_AS(greedy_balanced_split({1, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(greedy_balanced_split({2, 2}, 1), std::invalid_argument);
}

TEST_CASE("three_smooth_one_partition examples") {
    const auto one = three_smooth_one_partition(1);
    REQUIRE(one.found());
    CHECK(one.witness->parts() == std::vector<i64>{1});

    CHECK(three_smooth_one_partition(10).proven_absent());

    const auto big = three_smooth_one_partition(531);
    REQUIRE(big.found());
    CHECK(big.witness->total() == 531);
    CHECK(big.witness->recip() == Rational(1));
    for (i64 v : big.witness->parts()) CHECK(core::is_smooth(v, 3));
}

TEST_CASE("decompose_alpha brackets") {
    const auto low = decompose_alpha(Rational(4, 9));
    CHECK(low.modulus == 5);
    REQUIRE(low.k.has_value());
    CHECK(*low.k == 3);
    CHECK(low.gamma == Rational(4, 27));
    CHECK(low.beta == Rational(40, 27));

    const auto big = decompose_alpha(Rational(5, 2));
    CHECK(big.gamma == Rational(2));
    CHECK(big.beta == Rational(5, 2));   // M/2 with the default M = 5
    CHECK_FALSE(big.k.has_value());

    const auto unit = decompose_alpha(Rational(1));
    REQUIRE(unit.k.has_value());
    CHECK(*unit.k == 2);
    CHECK(unit.gamma == Rational(4, 9));
    CHECK(unit.beta == Rational(25, 9));

    // alpha = beta/M + gamma reconstruction holds on random inputs
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational alpha(1 + static_cast<i64>(rng() % 500),
                             1 + static_cast<i64>(rng() % 120));
        const auto d = decompose_alpha(alpha);
        CHECK(d.beta / Rational(d.modulus) + d.gamma == alpha);
        CHECK(d.beta.is_positive());
        CHECK(d.beta <= Rational(d.modulus));
    }
    CHECK_THROWS_AS(decompose_alpha(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(decompose_alpha(Rational(1), 6), std::invalid_argument);
}

TEST_CASE("mfree_gamma_partition") {
    // gamma = 1 reduces to the 3-smooth construction
    const auto g1 = mfree_gamma_partition(600, 1, 5);
    REQUIRE(g1.outcome.found());
    CHECK(g1.outcome.witness->total() == 600);
    CHECK(g1.outcome.witness->recip() == Rational(1));

    // no 5-free 2-partition of 10 exists
    const auto small = mfree_gamma_partition(10, 2, 5);
    CHECK_FALSE(small.outcome.found());

    // oracle-selected smallest feasible n for gamma = 2 (frozen below);
    // structure: C2 a unit-reciprocal block of rough 5-free integers,
    // C1 a 3-smooth 1-partition of the remainder
    const auto g2 = mfree_gamma_partition(211, 2, 5);
    REQUIRE(g2.outcome.found());
    CHECK(g2.outcome.witness->total() == 211);
    CHECK(g2.outcome.witness->recip() == Rational(2));
    Constraints five_free;
    five_free.forbidden_modulus = 5;
    CHECK(satisfies(*g2.outcome.witness, five_free));
    CHECK(core::reciprocal_sum(g2.rough_blocks) == Rational(1));
    for (i64 v : g2.rough_blocks) CHECK_FALSE(core::is_smooth(v, 3));
    for (i64 v : g2.smooth_block) CHECK(core::is_smooth(v, 3));
    CHECK_THROWS_AS(mfree_gamma_partition(10, 1, 3), std::invalid_argument);
}

TEST_CASE("five_free_four_over_3k") {
    CHECK(five_free_four_over_3k(9, 2).proven_absent());
    // oracle-determined smallest 5-free 4/9 instance (frozen below)
    const auto first = five_free_four_over_3k(36, 2);
    REQUIRE(first.found());
    CHECK(first.witness->total() == 36);
    CHECK(first.witness->recip() == Rational(4, 9));
    for (i64 v : first.witness->parts()) CHECK(v % 5 != 0);
    CHECK_THROWS_AS(five_free_four_over_3k(10, 1), std::invalid_argument);
}

TEST_CASE("complete_subset_sum examples") {
    CHECK(complete_subset_sum({1, 2, 4, 8}, 13) == std::vector<i64>{1, 4, 8});
    CHECK(complete_subset_sum({1, 2, 3}, 5) == std::vector<i64>{2, 3});
    CHECK(complete_subset_sum({1, 2, 4, 8}, 15) == std::vector<i64>{1, 2, 4, 8});
    CHECK_THROWS_AS(complete_subset_sum({1, 2, 4, 8}, 16), std::out_of_range);
    CHECK_THROWS_AS(complete_subset_sum({1, 2, 4, 8}, 0), std::out_of_range);
    CHECK_THROWS_AS(complete_subset_sum({2, 4}, 3), std::invalid_argument);
    CHECK_THROWS_AS(complete_subset_sum({1, 4}, 3), std::invalid_argument);
}

TEST_CASE("subset_reciprocal_spectrum") {
    const auto half = subset_reciprocal_spectrum({1, 2, 3, 4, 9, 10, 12, 18});
    CHECK(half.size() == 158);
    CHECK(half.count(Rational(0)) == 1);

    const auto tiny = subset_reciprocal_spectrum({2, 3, 6});
    CHECK(tiny == std::set<Rational>{Rational(0), Rational(1, 6), Rational(1, 3),
                                     Rational(1, 2), Rational(2, 3), Rational(5, 6),
                                     Rational(1)});
    CHECK(subset_reciprocal_spectrum({}) == std::set<Rational>{Rational(0)});
    CHECK_THROWS_AS(subset_reciprocal_spectrum(std::vector<i64>(26, 1)),
                    std::invalid_argument);
}

TEST_CASE("seven_fifteen_partition") {
    CHECK(seven_fifteen_partition(7).proven_absent());
    const auto oc = seven_fifteen_partition(729);
    REQUIRE(oc.found());
    CHECK(oc.witness->total() == 729);
    CHECK(oc.witness->recip() == Rational(7, 15));
    for (i64 v : oc.witness->parts()) {
        CHECK(v % 2 == 1);
        CHECK(v != 1);
        CHECK(v != 3);
        CHECK(v != 5);
    }
}

TEST_CASE("transfer tables identities") {
    TransferTables::verify();
    CHECK(TransferTables::half_set() ==
          std::vector<i64>{1, 2, 3, 4, 9, 10, 12, 18});
    CHECK(TransferTables::shift() == Rational(22, 15));
    const auto& blocks = TransferTables::blocks();
    std::set<i64> uni;
    for (const auto& b : blocks) uni.insert(b.begin(), b.end());
    CHECK(std::vector<i64>(uni.begin(), uni.end()) == TransferTables::master_set());
}

TEST_CASE("transfer_beta_to_alpha examples") {
    // B = {6}: 12 is outside the master set, so B1 = {6}
    const auto t6 = transfer_beta_to_alpha(Partition({6}), 826);
    REQUIRE(t6.ok);
    CHECK(t6.alpha == Rational(31, 20));
    CHECK(t6.doubled_block == std::vector<i64>{12});
    CHECK(t6.witness->total() == 826);
    CHECK(t6.witness->recip() == Rational(31, 20));
    CHECK(t6.seven_fifteen_m % 8 == 1);
    CHECK(t6.seven_fifteen_m >= 729);

    // B = {1}: 2 lies in the master set, so B1 is empty and alpha = 22/15
    const auto t1 = transfer_beta_to_alpha(Partition({1}), 816);
    REQUIRE(t1.ok);
    CHECK(t1.alpha == Rational(22, 15));
    CHECK(t1.doubled_block.empty());
    CHECK(t1.witness->total() == 816);

    CHECK_THROWS_AS(transfer_beta_to_alpha(Partition({6}), 825),
                    std::invalid_argument);
}

TEST_CASE("greedy split spread stays at most one on random instances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::set<i64> vals;
        const std::size_t size = 1 + rng() % 60;
        while (vals.size() < size) vals.insert(1 + static_cast<i64>(rng() % 5000));
        const i64 k = 1 + static_cast<i64>(rng() % 6);
        const auto split =
            greedy_balanced_split(std::vector<i64>(vals.begin(), vals.end()), k);
        CHECK(split.spread() <= Rational(1));
    }
}
