#pragma once

/// Smooth and powersmooth integer generation, residue-class filtering,
/// and the doubling powersmooth chains.

#include <vector>

#include "recipart/common.hpp"

namespace recipart::sieves {

enum class SieveKind { Smooth, Powersmooth };

struct SieveResult {
    i64 limit = 0;
    i64 bound = 0;
    SieveKind kind = SieveKind::Smooth;
    std::vector<i64> values;   // ascending, exactly the matches in [1, limit]
};

inline constexpr i64 kDefaultSieveCeiling = 50'000'000;

/// All x-smooth integers in [1, limit], ascending.
/// Uses a Hamming-style merge when few primes are involved, a
/// largest-prime-factor sieve otherwise. Throws ResourceLimitError when
/// `limit` exceeds `ceiling`.
SieveResult smooth_numbers(i64 limit, i64 x, i64 ceiling = kDefaultSieveCeiling);

/// All x-powersmooth integers in [1, limit], ascending.
SieveResult powersmooth_numbers(i64 limit, i64 x, i64 ceiling = kDefaultSieveCeiling);

/// x-powersmooth integers in (lo, hi] congruent to residue mod modulus.
std::vector<i64> powersmooth_in_class(i64 lo, i64 hi, i64 x, i64 modulus,
                                      i64 residue, i64 ceiling = kDefaultSieveCeiling);

struct DoublingChain {
    i64 bound = 0;                 // the powersmooth bound m^(1/12)
    std::vector<i64> values;       // e_1 < e_2 < ... as far as the chain extends
    std::size_t power_of_two_prefix = 0;   // leading run with e_i = 2^(i-1)
    bool stalled = false;          // no powersmooth value in (e_last, 2*e_last]
    /// Indices i (into values) with values[i]/values[i-1] <= 3/2 strictly
    /// beyond the power-of-two prefix, including the prefix boundary step.
    std::vector<std::size_t> slow_steps;
};

/// e_1 = start and e_i = largest m^(1/12)-powersmooth integer <= 2*e_{i-1},
/// extended until the chain reaches `stop_at` or stalls.
/// Requires m >= 2^12 so that the powersmooth bound is at least 2.
DoublingChain doubling_powersmooth_chain(i64 m, i64 stop_at, i64 start = 1);

/// Same chain with an explicit powersmooth bound.
DoublingChain doubling_chain_with_bound(i64 bound, i64 stop_at, i64 start = 1);

} // namespace recipart::sieves
