#pragma once

/// The constructive toolkit: partition composition, the greedy balanced
/// split, smooth 1-partitions, M-free gamma-partitions, complete-sequence
/// subset sums, and the section-4 transfer map with its fixed tables.

#include <array>
#include <optional>
#include <string>

#include "recipart/search.hpp"

namespace recipart::constructions {

using core::Constraints;
using core::Partition;
using core::Rational;
using spectrum::SearchBudget;
using spectrum::SearchOutcome;
using spectrum::SearchStatus;

/// A = M*B union C, an (recip(B)/M + recip(C))-partition of M*sum(B)+sum(C).
/// Requires M >= 2 and M*B disjoint from C (guaranteed when C is M-free);
/// overlap throws std::invalid_argument.
Partition compose_partitions(const Partition& B, const Partition& C, i64 M);

struct SplitResult {
    std::vector<std::vector<i64>> blocks;
    std::vector<Rational> recips;

    Rational spread() const;   // max(recips) - min(recips)
};

/// Distributes A over parts_count blocks, each element going to the block
/// with the smallest current reciprocal sum. Elements are processed in
/// ascending order with ties to the lowest-index block, which keeps the
/// spread at most 1.
SplitResult greedy_balanced_split(const std::vector<i64>& A, i64 parts_count);

/// 1-partition of n with every part 3-smooth (so M-free for all M = 0 mod 5).
SearchOutcome three_smooth_one_partition(i64 n, const SearchBudget& b = {});

struct AlphaDecomposition {
    i64 modulus = 0;           // M
    Rational beta;             // M*(alpha - gamma), in (0, M]
    Rational gamma;            // floor-like part: integer, or 4/3^k
    std::optional<i64> k;      // present iff alpha <= 1
};

/// alpha = beta/M + gamma with gamma the largest integer below alpha
/// (alpha > 1) or 4/3^k bracketing alpha (alpha <= 1, M = 5).
AlphaDecomposition decompose_alpha(const Rational& alpha, i64 lemma5_modulus = 5);

struct MfreeOutcome {
    SearchOutcome outcome;
    std::vector<i64> smooth_block;   // C1: the 3-smooth 1-partition
    std::vector<i64> rough_blocks;   // C2: union of gamma-1 unit-reciprocal sets
};

/// M-free gamma-partition of n assembled as C1 union C2: C2 is a union of
/// gamma-1 disjoint unit-reciprocal subsets of non-3-smooth M-free integers,
/// C1 a 3-smooth 1-partition of the remainder. Requires gamma >= 1 and
/// M = 0 mod 5.
MfreeOutcome mfree_gamma_partition(i64 n, i64 gamma, i64 M, const SearchBudget& b = {});

/// 5-free 4/3^k-partition of n, k >= 2.
SearchOutcome five_free_four_over_3k(i64 n, i64 k, const SearchBudget& b = {});

/// Subset of X summing exactly to t, greedy from the largest element down.
/// Requires x_1 = 1, ascending with x_i <= 2*x_{i-1} (std::invalid_argument)
/// and 1 <= t <= 2*x_l - 1 (std::out_of_range).
std::vector<i64> complete_subset_sum(const std::vector<i64>& X, i64 t);

/// { sum over T of 1/b : T subset of S }, including the empty subset (0).
/// Throws ResourceLimitError when |S| > 25.
std::set<Rational> subset_reciprocal_spectrum(const std::vector<i64>& S);

/// 2-free 7/15-partition of m avoiding {1,3,5}.
SearchOutcome seven_fifteen_partition(i64 m, const SearchBudget& b = {});

/// The fixed tables of the transfer map: master set D, blocks D_1..D_8 with
/// sum(D_i) = i mod 8 and recip(D_i) = 1, the halved even elements, and the
/// additive shift 22/15.
struct TransferTables {
    static const std::vector<i64>& master_set();
    static const std::array<std::vector<i64>, 8>& blocks();   // blocks()[i-1] = D_i
    static const std::vector<i64>& half_set();
    static const Rational& shift();
    /// Exact identity check; throws std::logic_error on any mismatch.
    static void verify();
};

struct TransferOutcome {
    bool ok = false;
    std::string error;            // names the failing stage and its m
    Rational alpha;               // f(beta) = recip(2*B1) + 22/15
    std::optional<Partition> witness;   // the alpha-partition of n_prime
    std::vector<i64> doubled_block;     // 2*B1
    int block_index = 0;                // i with sum constraints met (1-based)
    i64 seven_fifteen_m = 0;            // m handed to the 7/15 search
};

/// Lemma-11 transfer: splits B by membership of 2b in the master set, maps
/// beta = recip(B) to alpha = recip(2*B1) + 22/15, and assembles the
/// alpha-partition 2*B1 union C union D_i of n_prime.
/// Requires n_prime >= 2*sum(B) + 814.
TransferOutcome transfer_beta_to_alpha(const Partition& B, i64 n_prime,
                                       const SearchBudget& b = {});

} // namespace recipart::constructions
