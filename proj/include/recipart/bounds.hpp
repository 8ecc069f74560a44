#pragma once

/// Counting functions Q(n) and P(n), residue-coverage lower-bound
/// witnesses, exact harmonic lower bounds, and the growth-bound reports
/// comparing spectrum sizes against a certified enclosure of e^(c*sqrt(n))
/// with c = pi/sqrt(3).

#include <optional>
#include <set>
#include <vector>

#include "recipart/enclosure.hpp"
#include "recipart/rational.hpp"

namespace recipart::bounds {

using core::Rational;

/// Number of partitions of n into distinct positive parts (exact DP).
mpz_class count_distinct_partitions(i64 n);

/// Number of partitions of n into distinct primes.
mpz_class count_distinct_prime_partitions(i64 n);

struct CoverageWitness {
    i64 q = 0;   // prime modulus
    i64 x = 0;   // sum bound on the sets B'
    std::set<i64> covered;   // residues mod q attainable as sum of inverses
};

/// Residues sum(1/b) mod q over all distinct-part sets B' with sum(B') <= x
/// and no part divisible by q; always contains 0 (the empty set).
/// Throws std::invalid_argument when q is not prime.
CoverageWitness residue_coverage(i64 q, i64 x);

/// Smallest p in [p_lo, p_hi] whose residue mod q is uncovered, or nullopt
/// when every residue met on the interval is covered.
std::optional<i64> find_hard_numerator(i64 q, i64 x, i64 p_lo, i64 p_hi);

struct MinTermsBound {
    i64 min_terms = 0;          // least r with H_r >= alpha
    i64 triangular_lower = 0;   // r(r+1)/2, a lower bound on any n with an alpha-partition
};

MinTermsBound min_terms_bound(const Rational& alpha);

struct BoundReport {
    i64 n = 0;
    std::optional<u64> spectrum_size;   // |B(n)| when computed
    mpz_class q_count;
    mpz_class p_count;
    enclosure::Interval upper_envelope;   // encloses e^(c*sqrt(n))
};

struct BoundReportOptions {
    i64 spectrum_max_n = 100;        // spectra computed for n <= this
    u64 spectrum_ceiling = 100'000'000;
    Rational envelope_rel_tol = Rational(1, 1'000'000);
};

/// Per-n reports for 1 <= n <= n_max.
std::vector<BoundReport> bound_report(i64 n_max, const BoundReportOptions& opt = {});

} // namespace recipart::bounds
