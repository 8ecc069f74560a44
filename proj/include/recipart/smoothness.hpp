#pragma once

/// Trial-division smoothness predicates backed by a cached prime table.
///
/// n is x-smooth when its largest prime divisor is <= x, and
/// x-powersmooth when its largest prime-power divisor is <= x.
/// 1 is both, for every x >= 2.

#include <utility>
#include <vector>

#include "recipart/common.hpp"

namespace recipart::core {

inline constexpr i64 kDefaultPrimeLimit = 1'000'000;

/// Primes up to at least `limit`, ascending. The table is cached and grown
/// on demand; the returned reference stays valid until a larger limit is
/// requested, so callers should copy or finish using it before asking again.
const std::vector<i64>& prime_table(i64 limit = kDefaultPrimeLimit);

bool is_prime(i64 n);

/// (prime, exponent) pairs, ascending by prime. factorize(1) = {}.
std::vector<std::pair<i64, int>> factorize(i64 n);

bool is_smooth(i64 n, i64 x);
bool is_powersmooth(i64 n, i64 x);

/// Largest prime power p^e dividing n; 1 for n = 1.
i64 largest_prime_power_divisor(i64 n);

/// Largest t >= 0 with t^k <= n (integer k-th root), for n >= 0, k >= 1.
i64 iroot(i64 n, int k);

} // namespace recipart::core
