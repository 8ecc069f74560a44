#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "recipart/sieves.hpp"
#include "recipart/smoothness.hpp"

using namespace recipart;

TEST_CASE("smooth_numbers examples") {
    CHECK(sieves::smooth_numbers(20, 3).values ==
          std::vector<i64>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18});
    CHECK(sieves::smooth_numbers(64, 2).values ==
          std::vector<i64>{1, 2, 4, 8, 16, 32, 64});
    CHECK(sieves::smooth_numbers(1, 5).values == std::vector<i64>{1});
}

TEST_CASE("powersmooth_numbers examples") {
    CHECK(sieves::powersmooth_numbers(20, 4).values ==
          std::vector<i64>{1, 2, 3, 4, 6, 12});
    // bound 2: only 1 and 2 qualify (4 = 2^2 exceeds the bound)
    CHECK(sieves::powersmooth_numbers(100, 2).values == std::vector<i64>{1, 2});
}

TEST_CASE("sieves agree with per-element recomputation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        const i64 limit = 1 + static_cast<i64>(rng() % 3000);
        const i64 x = 2 + static_cast<i64>(rng() % 50);
        const auto smooth = sieves::smooth_numbers(limit, x).values;
        const auto psmooth = sieves::powersmooth_numbers(limit, x).values;
        std::vector<i64> smooth_ref, psmooth_ref;
        for (i64 v = 1; v <= limit; ++v) {
            if (core::is_smooth(v, x)) smooth_ref.push_back(v);
            if (core::is_powersmooth(v, x)) psmooth_ref.push_back(v);
        }
        CHECK(smooth == smooth_ref);
        CHECK(psmooth == psmooth_ref);
        // powersmooth values are a subset of the smooth ones
        CHECK(std::includes(smooth.begin(), smooth.end(), psmooth.begin(),
                            psmooth.end()));
    }
}

TEST_CASE("powersmooth_in_class") {
    CHECK(sieves::powersmooth_in_class(0, 20, 4, 5, 2) == std::vector<i64>{2, 12});
    CHECK(sieves::powersmooth_in_class(100, 101, 2, 7, 3).empty());
    // density probe fixed by a direct sieve run: no 2-powersmooth integers
    // live that high, so the class is empty
    CHECK(sieves::powersmooth_in_class(10'000, 10'833, core::iroot(10'000, 13),
                                       210, 1)
              .empty());
    CHECK_THROWS_AS(sieves::powersmooth_in_class(5, 4, 3, 2, 1),
                    std::invalid_argument);
}

TEST_CASE("non-powersmooth smooth counts stay below the sieve bound") {
    // measured count of x^(1/13)-smooth-but-not-powersmooth integers below x
    // stays under pi(x^(1/13)) * x^(12/13)
    for (const i64 x : {10'000, 100'000, 1'000'000}) {
        const i64 bound = std::max<i64>(2, core::iroot(x, 13));
        u64 count = 0;
        for (i64 v = 1; v <= x; ++v)
            if (core::is_smooth(v, bound) && !core::is_powersmooth(v, bound))
                ++count;
        u64 primes = 0;
        for (i64 p : core::prime_table(bound))
            if (p <= bound) ++primes;
        const double cap = static_cast<double>(primes) *
                           std::pow(static_cast<double>(x), 12.0 / 13.0);
        CHECK(static_cast<double>(count) < cap);
    }
}

TEST_CASE("doubling chain at m = 2^24, values fixed by exhaustive scan") {
    const auto chain = sieves::doubling_powersmooth_chain(1 << 24, 1'000'000);
    CHECK(chain.bound == 4);
    CHECK(chain.values == std::vector<i64>{1, 2, 4, 6, 12});
    CHECK(chain.power_of_two_prefix == 3);
    CHECK(chain.stalled);   // no 4-powersmooth value in (12, 24]
    // the prefix-boundary step 4 -> 6 sits exactly at ratio 3/2
    CHECK(chain.slow_steps == std::vector<std::size_t>{3});
}

TEST_CASE("doubling chain at m = 2^12 stalls immediately") {
    const auto chain = sieves::doubling_powersmooth_chain(1 << 12, 100);
    CHECK(chain.bound == 2);
    CHECK(chain.values == std::vector<i64>{1, 2});
    CHECK(chain.stalled);
}

TEST_CASE("doubling chain with larger bound extends") {
    const auto chain = sieves::doubling_chain_with_bound(64, 10'000);
    CHECK(!chain.stalled);
    CHECK(chain.values.back() >= 10'000);
    for (std::size_t i = 1; i < chain.values.size(); ++i) {
        CHECK(chain.values[i] > chain.values[i - 1]);
        CHECK(chain.values[i] <= 2 * chain.values[i - 1]);
    }
    CHECK_THROWS_AS(sieves::doubling_powersmooth_chain(100, 10),
                    std::invalid_argument);
}
