#pragma once

/// Independent reference implementations used as oracles by the claim
/// suite and the tests. Deliberately naive: plain ascending-part recursion
/// with direct mpq arithmetic, sharing no code with the scaled search
/// engine it is used to check. Only viable for small n.

#include <functional>
#include <set>

#include "recipart/partition.hpp"

namespace recipart::naive {

using core::Constraints;
using core::Partition;
using core::Rational;

/// Visits every distinct-part partition of n (parts satisfying c) as an
/// ascending vector. Returns the number visited.
u64 for_each_partition(i64 n, const Constraints& c,
                       const std::function<void(const std::vector<i64>&)>& visit);

/// B(n) by full enumeration.
std::set<Rational> spectrum(i64 n, const Constraints& c = {});

/// Exhaustive alpha-partition decision (no pruning beyond the sum walk).
bool exists_partition(i64 n, const Rational& alpha, const Constraints& c = {});

/// Witness variant; empty optional when none exists.
std::optional<Partition> find_partition(i64 n, const Rational& alpha,
                                        const Constraints& c = {});

/// Q(n) by enumeration.
u64 count_distinct_partitions(i64 n);

} // namespace recipart::naive
