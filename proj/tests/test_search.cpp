#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recipart/bounds.hpp"
#include "recipart/naive.hpp"
#include "recipart/search.hpp"

using namespace recipart;
using core::Constraints;
using core::Rational;

TEST_CASE("spectrum examples") {
    CHECK(spectrum::spectrum(6) == std::set<Rational>{Rational(1, 6), Rational(3, 4),
                                                      Rational(6, 5), Rational(11, 6)});
    CHECK(spectrum::spectrum(1) == std::set<Rational>{Rational(1)});
    CHECK(spectrum::spectrum(2) == std::set<Rational>{Rational(1, 2)});
    CHECK(spectrum::spectrum_size(100) <= 444793);
}

TEST_CASE("spectrum equals naive enumeration up to 40") {
    for (i64 n = 1; n <= 40; ++n) {
        CHECK(spectrum::spectrum(n) == naive::spectrum(n));
    }
}

TEST_CASE("spectrum bounds: extremes and harmonic cap") {
    for (i64 n : {5, 12, 23, 31, 40}) {
        const auto spec = spectrum::spectrum(n);
        CHECK(*spec.begin() == Rational(1, n));   // the singleton partition {n}
        mpq_class h(0);
        for (i64 i = 1; i <= n; ++i) h += mpq_class(1, static_cast<long>(i));
        CHECK(*spec.rbegin() <= Rational(mpq_class(h)));
        CHECK(spec.rbegin()->is_positive());
        // size bounded by the distinct-partition count
        CHECK(spec.size() <= bounds::count_distinct_partitions(n));
    }
}

TEST_CASE("constrained spectra") {
    Constraints c;
    c.min_part = 2;
    const auto spec = spectrum::spectrum(6, c);
    // partitions of 6 with parts >= 2: {6}, {2,4}
    CHECK(spec == std::set<Rational>{Rational(1, 6), Rational(3, 4)});
}

TEST_CASE("spectrum ceiling raises a resource error") {
    spectrum::EnumLimits lim;
    lim.max_enumerated = 5;
    CHECK_THROWS_AS(spectrum::spectrum(20, {}, lim), ResourceLimitError);
}

TEST_CASE("stable_candidates examples") {
    CHECK(spectrum::stable_candidates(1, 2).empty());
    const auto c78 = spectrum::stable_candidates(78, 78);
    CHECK(c78.count(Rational(1)) == 1);
    const auto c65 = spectrum::stable_candidates(65, 80);
    CHECK(c65.count(Rational(1)) == 0);   // 77 kills alpha = 1
}

TEST_CASE("stable_candidates shrinks as the window widens") {
    const auto wide = spectrum::stable_candidates(20, 36);
    const auto wider = spectrum::stable_candidates(20, 40);
    for (const auto& alpha : wider) CHECK(wide.count(alpha) == 1);
    CHECK(wider.size() <= wide.size());
}

TEST_CASE("stable_set_approx on a small window") {
    spectrum::StableSetOptions opt;
    opt.target_candidates = 0;
    const auto res = spectrum::stable_set_approx(20, 60, {}, opt);
    CHECK(res.stabilized);
    // whatever survives the horizon must be present in every B(n) checked
    for (const auto& e : res.survivors) {
        CHECK_FALSE(e.budget_flagged);
        CHECK(spectrum::spectrum(45).count(e.alpha) == 1);
    }
}

TEST_CASE("empirical_N at the Graham point") {
    const auto res = spectrum::empirical_N(Rational(1), 1, 200);
    REQUIRE(!res.unstable());
    CHECK(*res.threshold == 78);
}

TEST_CASE("empirical_N unstable when the horizon is too low") {
    // alpha = 3 needs more than (1/3)e^3 distinct terms; n <= 50 is hopeless
    const auto res = spectrum::empirical_N(Rational(3), 1, 50);
    CHECK(res.unstable());
    CHECK_FALSE(res.budget_hit);
}

TEST_CASE("empirical_N is non-decreasing in m") {
    std::optional<i64> prev;
    for (i64 m = 1; m <= 3; ++m) {
        const auto res = spectrum::empirical_N(Rational(1), m, 200);
        REQUIRE(!res.unstable());
        if (prev) CHECK(*res.threshold >= *prev);
        prev = res.threshold;
    }
}

TEST_CASE("empirical_N with parts at least two, frozen by the oracle") {
    // independent recheck of both boundary facts at the frozen threshold
    const auto res = spectrum::empirical_N(Rational(1), 2, 400);
    REQUIRE(!res.unstable());
    CHECK(*res.threshold == 78);
    Constraints c;
    c.min_part = 2;
    CHECK_FALSE(naive::exists_partition(77, Rational(1), c));
    CHECK(naive::exists_partition(78, Rational(1), c));
    CHECK(naive::exists_partition(79, Rational(1), c));
}
