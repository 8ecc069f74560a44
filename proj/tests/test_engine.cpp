#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "recipart/naive.hpp"
#include "recipart/search.hpp"

using namespace recipart;
using core::Constraints;
using core::Rational;
using spectrum::PartitionSearch;
using spectrum::SearchBudget;
using spectrum::SearchStatus;

TEST_CASE("spec examples for exists_partition") {
    const auto at11 = spectrum::exists_partition(11, Rational(1));
    REQUIRE(at11.found());
    CHECK(at11.witness->parts() == std::vector<i64>{2, 3, 6});

    CHECK(spectrum::exists_partition(77, Rational(1)).proven_absent());

    const auto at24 = spectrum::exists_partition(24, Rational(1));
    REQUIRE(at24.found());
    CHECK(at24.witness->total() == 24);
    CHECK(at24.witness->recip() == Rational(1));

    // compose example target: recip 5/4 at n = 55
    const auto at55 = spectrum::exists_partition(55, Rational(5, 4));
    REQUIRE(at55.found());
    CHECK(at55.witness->total() == 55);
    CHECK(at55.witness->recip() == Rational(5, 4));
}

TEST_CASE("engine agrees with the oracle in both directions") {
    std::mt19937_64 rng(20250809);
    for (int trial = 0; trial < 300; ++trial) {
        const i64 n = 1 + static_cast<i64>(rng() % 36);
        Constraints c;
        switch (trial % 4) {
            case 1: c.min_part = 1 + static_cast<i64>(rng() % 4); break;
            case 2: c.forbidden_modulus = 2 + static_cast<i64>(rng() % 5); break;
            case 3: c.excluded = {1 + static_cast<i64>(rng() % 6)}; break;
            default: break;
        }
        Rational alpha;
        if (trial % 3 == 0) {
            const auto spec = naive::spectrum(n, c);
            if (spec.empty()) continue;
            auto it = spec.begin();
            std::advance(it, static_cast<long>(rng() % spec.size()));
            alpha = *it;
        } else {
            alpha = Rational(1 + static_cast<i64>(rng() % 120),
                             1 + static_cast<i64>(rng() % 40));
        }
        const bool oracle = naive::exists_partition(n, alpha, c);
        const auto engine = spectrum::exists_partition(n, alpha, c);
        REQUIRE(!engine.budget_exceeded());
        CHECK(engine.found() == oracle);
        if (engine.found()) {
            CHECK(engine.witness->total() == n);
            CHECK(engine.witness->recip() == alpha);
            CHECK(satisfies(*engine.witness, c));
        }
    }
}

TEST_CASE("constraint-restricted searches") {
    Constraints odd;
    odd.forbidden_modulus = 2;
    odd.excluded = {1, 3, 5};
    const auto oc = spectrum::exists_partition(7, Rational(1, 7), odd);
    REQUIRE(oc.found());
    CHECK(oc.witness->parts() == std::vector<i64>{7});

    Constraints large;
    large.min_part = 10;
    CHECK(spectrum::exists_partition(9, Rational(1, 9), large).proven_absent());
}

TEST_CASE("alpha outside the representable range is proven absent fast") {
    // denominator cannot divide lcm(1..20)
    const auto oc = spectrum::exists_partition(20, Rational(1, 23));
    CHECK(oc.proven_absent());
    CHECK(oc.nodes <= 1);
    // value above the harmonic mass of [1, n]
    CHECK(spectrum::exists_partition(5, Rational(4)).proven_absent());
    CHECK_THROWS_AS(spectrum::exists_partition(5, Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(spectrum::exists_partition(0, Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("budget exhaustion reports BudgetExceeded") {
    SearchBudget tiny;
    tiny.max_nodes = 2;
    tiny.max_seconds = 0;
    const auto oc = spectrum::exists_partition(77, Rational(1), {}, tiny);
    CHECK(oc.budget_exceeded());
}

TEST_CASE("engine reuse across targets is deterministic") {
    PartitionSearch engine(60, Constraints{});
    const auto a1 = engine.find(Rational(1), {});
    const auto a2 = engine.find(Rational(3, 2), {});
    const auto a3 = engine.find(Rational(1), {});
    REQUIRE(a1.found());
    REQUIRE(a2.found());
    REQUIRE(a3.found());
    CHECK(a1.witness->parts() == a3.witness->parts());
    CHECK(a1.nodes == a3.nodes);
    CHECK(a2.witness->recip() == Rational(3, 2));
}

TEST_CASE("recip subset search hits exact targets") {
    std::vector<i64> universe;
    for (i64 v = 2; v <= 40; ++v) universe.push_back(v);
    spectrum::RecipSubsetSearch eng(universe);
    const auto unit = eng.find(Rational(1), {});
    REQUIRE(unit.found());
    CHECK(unit.witness->recip() == Rational(1));

    const auto tiny = eng.find(Rational(1, 37), {});
    REQUIRE(tiny.found());
    CHECK(tiny.witness->parts() == std::vector<i64>{37});

    CHECK(eng.find(Rational(1, 41), {}).proven_absent());
    CHECK(eng.find(Rational(5), {}).proven_absent());
}

TEST_CASE("allowed_parts reflects constraints") {
    Constraints c;
    c.min_part = 3;
    c.forbidden_modulus = 4;
    c.excluded = {5};
    CHECK(spectrum::allowed_parts(10, c) == std::vector<i64>{3, 6, 7, 9, 10});
    CHECK(spectrum::allowed_parts(2, c).empty());
}
