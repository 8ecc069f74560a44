#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "recipart/partition.hpp"
#include "recipart/rational.hpp"
#include "recipart/smoothness.hpp"

using namespace recipart;
using core::Constraints;
using core::Partition;
using core::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-2, 4).to_string() == "-1/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(1, 3).den() == 3);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse round-trip") {
    for (const char* s : {"0", "1", "-1", "7/15", "-22/15", "444793"}) {
        CHECK(Rational::parse(s).to_string() == s);
    }
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        const auto draw = [&] {
            const i64 num = static_cast<i64>(rng() % 2001) - 1000;
            const i64 den = 1 + static_cast<i64>(rng() % 1000);
            return Rational(num, den);
        };
        const Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("rational ordering and hashing") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(2, 6).hash() == Rational(1, 3).hash());
    std::set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(1, 3)};
    CHECK(s.size() == 2);
}

TEST_CASE("reciprocal_sum examples") {
    CHECK(core::reciprocal_sum(std::vector<i64>{2, 3, 6}) == Rational(1));
    CHECK(core::reciprocal_sum(std::vector<i64>{}) == Rational(0));
    // 1/21 + 1/28 = 1/20 + 1/30 = 1/12, so the four together give 1/6
    CHECK(core::reciprocal_sum(std::vector<i64>{20, 21, 28, 30}) == Rational(1, 6));
    CHECK_THROWS_AS(core::reciprocal_sum(std::vector<i64>{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(core::reciprocal_sum(std::vector<i64>{0, 3}), std::invalid_argument);
}

TEST_CASE("reciprocal_sum is order independent") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        std::set<i64> vals;
        while (vals.size() < 12) vals.insert(1 + static_cast<i64>(rng() % 500));
        std::vector<i64> v(vals.begin(), vals.end());
        const Rational reference = core::reciprocal_sum(v);
        std::shuffle(v.begin(), v.end(), rng);
        CHECK(core::reciprocal_sum(v) == reference);
    }
}

TEST_CASE("partition model") {
    const Partition p({6, 2, 3});
    CHECK(p.parts() == std::vector<i64>{2, 3, 6});
    CHECK(p.total() == 11);
    CHECK(p.recip() == Rational(1));
    CHECK(p.contains(3));
    CHECK(!p.contains(4));
    CHECK_THROWS_AS(Partition({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(Partition{}.total() == 0);
}

TEST_CASE("constraints satisfaction") {
    Constraints c;
    c.min_part = 4;
    CHECK(satisfies(Partition({8, 12, 24}), c));
    CHECK(!satisfies(Partition({3, 8}), c));

    Constraints mfree;
    mfree.forbidden_modulus = 5;
    CHECK(satisfies(Partition({2, 3, 6}), mfree));
    CHECK(!satisfies(Partition({2, 3, 10}), mfree));

    Constraints ex;
    ex.excluded = {3};
    CHECK(!ex.allows(3));
    CHECK(ex.allows(4));

    Constraints bad;
    bad.forbidden_modulus = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("smoothness predicates") {
    CHECK(core::is_smooth(12, 3));
    CHECK(!core::is_powersmooth(8, 4));   // 2^3 = 8 > 4
    CHECK(core::is_powersmooth(12, 4));   // prime powers 4 and 3
    CHECK(core::is_smooth(1, 2));
    CHECK(core::is_powersmooth(1, 2));
    CHECK(!core::is_smooth(14, 3));
    CHECK_THROWS_AS(core::is_smooth(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(core::is_smooth(5, 1), std::invalid_argument);
}

TEST_CASE("smoothness monotone and powersmooth implies smooth") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const i64 n = 1 + static_cast<i64>(rng() % 100000);
        const i64 x = 2 + static_cast<i64>(rng() % 60);
        if (core::is_smooth(n, x)) CHECK(core::is_smooth(n, x + 1));
        if (core::is_powersmooth(n, x)) CHECK(core::is_smooth(n, x));
    }
}

TEST_CASE("factorization helpers") {
    CHECK(core::largest_prime_power_divisor(1) == 1);
    CHECK(core::largest_prime_power_divisor(12) == 4);
    CHECK(core::largest_prime_power_divisor(97) == 97);
    CHECK(core::largest_prime_power_divisor(707) == 101);
    CHECK(core::iroot(4096, 12) == 2);
    CHECK(core::iroot(4095, 12) == 1);
    CHECK(core::iroot(1, 5) == 1);
    CHECK(core::iroot(0, 3) == 0);
    CHECK(core::iroot(1'000'000, 2) == 1000);
    CHECK(core::is_prime(2));
    CHECK(core::is_prime(101));
    CHECK(!core::is_prime(1));
    CHECK(!core::is_prime(91));
}
