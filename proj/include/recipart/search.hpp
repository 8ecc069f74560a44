#pragma once

/// Exhaustive and targeted search over distinct-part partitions.
///
/// Reciprocal sums are tracked exactly as scaled integers: with
/// L = lcm(allowed values), each part a contributes L/a, so a target
/// reciprocal alpha corresponds to the integer alpha*L. All pruning is
/// integer arithmetic; no floating point touches any decision.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "recipart/partition.hpp"

namespace recipart::spectrum {

using core::Constraints;
using core::Partition;
using core::Rational;

enum class SearchStatus { Found, ProvenAbsent, BudgetExceeded };

struct SearchBudget {
    u64 max_nodes = 50'000'000;
    double max_seconds = 120.0;
    std::optional<i64> max_part;   // restricts the universe when set
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::ProvenAbsent;
    std::optional<Partition> witness;   // present iff status == Found
    u64 nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
    bool proven_absent() const { return status == SearchStatus::ProvenAbsent; }
    bool budget_exceeded() const { return status == SearchStatus::BudgetExceeded; }
};

struct EnumLimits {
    u64 max_enumerated = 100'000'000;   // distinct-partition enumeration ceiling
};

/// Depth-first subset-sum engine over a fixed universe of candidate parts.
///
/// Exploration order puts values with large prime-power divisors first,
/// grouped by that divisor, so that the divisibility prune (the remaining
/// suffix lcm must absorb the denominator of the residual target) cuts
/// whole classes early; the dense "light" tail is value-descending, where
/// the sum/reciprocal corridor bounds are exact.
class PartitionSearch {
public:
    /// Universe = allowed values in [1, n] under c (and budget max_part cap).
    PartitionSearch(i64 n, const Constraints& c, std::optional<i64> max_part = {});
    /// Explicit universe; values outside [1, n] are dropped.
    PartitionSearch(i64 n, std::vector<i64> universe);

    /// Search for a subset with sum n and reciprocal sum alpha.
    /// Reusable across calls; not thread-safe for concurrent find().
    SearchOutcome find(const Rational& alpha, const SearchBudget& budget);

    i64 target_sum() const { return n_; }
    const mpz_class& common_denominator() const { return lcm_; }
    std::size_t universe_size() const { return vals_.size(); }

private:
    void build(std::vector<i64> values);
    bool dfs(std::size_t idx, i64 remaining, std::size_t depth);
    bool bounds_admit(std::size_t idx, i64 remaining, const mpz_class& need,
                      std::size_t depth);
    bool tick();

    i64 n_ = 0;
    mpz_class lcm_;

    // exploration order
    std::vector<i64> vals_;
    std::vector<mpz_class> wexp_;          // lcm_ / v
    std::vector<i64> suffmax_;             // size K+1
    std::vector<mpz_class> cof_;           // lcm_ / lcm(suffix), size K+1
    std::vector<char> cof_trivial_;        // cof == 1
    std::vector<char> cof_changed_;        // cof differs from predecessor
    std::size_t light_start_ = 0;          // first index of the light tail
    std::vector<std::size_t> group_end_;   // one-past-end of the group at index
    std::vector<char> group_head_;
    std::vector<i64> group_prime_;         // prime key for skippable groups, else 0
    std::vector<mpz_class> group_ppow_;    // p^(v_p(lcm)) for those groups

    // ascending arrays for corridor bounds
    std::vector<i64> asc_;
    std::vector<i64> asc_sum_;             // prefix sums, size K+1
    std::vector<mpz_class> asc_rec_;       // prefix scaled recips, size K+1
    std::size_t max_depth_ = 0;

    // per-search state
    std::vector<mpz_class> need_stack_;    // need at each depth
    std::vector<mpz_class> scratch_;
    std::vector<i64> picks_;
    u64 nodes_ = 0;
    u64 node_limit_ = 0;
    std::int64_t deadline_ns_ = 0;
    bool budget_hit_ = false;
};

/// Subset search on the reciprocal target alone: find T within the universe
/// with sum(1/t) exactly equal to the target, any element sum. Same scaled
/// arithmetic and denominator pruning as PartitionSearch.
class RecipSubsetSearch {
public:
    explicit RecipSubsetSearch(std::vector<i64> universe);
    SearchOutcome find(const Rational& target, const SearchBudget& budget);
    const mpz_class& common_denominator() const { return lcm_; }

private:
    bool dfs(std::size_t idx, std::size_t depth);
    bool tick();

    mpz_class lcm_;
    std::vector<i64> vals_;
    std::vector<mpz_class> wexp_;
    std::vector<mpz_class> sufrec_;        // scaled recip total of suffix, size K+1
    std::vector<mpz_class> cof_;
    std::vector<char> cof_trivial_, cof_changed_;
    std::size_t light_start_ = 0;
    std::vector<std::size_t> group_end_;
    std::vector<char> group_head_;
    std::vector<i64> group_prime_;
    std::vector<mpz_class> group_ppow_;

    std::vector<mpz_class> need_stack_;
    std::vector<i64> picks_;
    u64 nodes_ = 0, node_limit_ = 0;
    std::int64_t deadline_ns_ = 0;
    bool budget_hit_ = false;
};

/// B(n) restricted to constraints: every reciprocal sum achievable by a
/// distinct-part partition of n satisfying c. Throws ResourceLimitError
/// when the distinct-partition count exceeds lim.max_enumerated.
std::set<Rational> spectrum(i64 n, const Constraints& c = {},
                            const EnumLimits& lim = {});

/// |spectrum(n, c)| without materializing the set of Rationals.
u64 spectrum_size(i64 n, const Constraints& c = {}, const EnumLimits& lim = {});

/// Search for an alpha-partition of n under c.
SearchOutcome exists_partition(i64 n, const Rational& alpha,
                               const Constraints& c = {},
                               const SearchBudget& b = {});

/// Intersection of the full spectra over [window_start, window_end]:
/// a superset of { alpha : N(alpha) <= window_start } clipped to the window.
std::set<Rational> stable_candidates(i64 window_start, i64 window_end,
                                     const Constraints& c = {},
                                     const EnumLimits& lim = {});

struct StableSetOptions {
    EnumLimits enum_limits;
    SearchBudget budget;
    u64 escalation_factor = 8;   // budget multiplier on retry
    int max_escalations = 2;
    /// Keep taking full spectra (cheap wholesale elimination) while more
    /// than this many candidates survive and the ceiling allows.
    u64 target_candidates = 4000;
};

struct StableSetResult {
    struct Entry {
        Rational alpha;
        bool budget_flagged = false;   // some check ended in BudgetExceeded
    };
    std::vector<Entry> survivors;      // sorted by alpha
    i64 base_n = 0;
    i64 window_end = 0;                // last n covered by full enumeration
    i64 horizon = 0;
    bool stabilized = false;           // every check decisive, horizon reached
    u64 targeted_searches = 0;
    u64 budget_hits = 0;
};

/// Horizon approximation of the stable set A(n): candidates from the full
/// spectra window [n, w], then each survivor checked by targeted search for
/// every n' in (w, horizon]. The result is a superset of the true stable
/// set restricted to the horizon.
StableSetResult stable_set_approx(i64 n, i64 horizon, const Constraints& c = {},
                                  const StableSetOptions& opt = {});

struct EmpiricalN {
    std::optional<i64> threshold;   // n0; empty means Unstable
    i64 horizon = 0;
    bool budget_hit = false;
    bool unstable() const { return !threshold.has_value(); }
};

/// Horizon-bounded N(alpha, m): least n0 with m-large alpha-partitions for
/// every n in [n0, horizon] and a proven failure at n0 - 1.
EmpiricalN empirical_N(const Rational& alpha, i64 m, i64 horizon,
                       const SearchBudget& b = {});

/// Spectrum rows keyed by n, with per-entry completeness metadata.
struct SpectrumTable {
    Constraints constraints;
    std::map<i64, std::set<Rational>> entries;
    std::map<i64, bool> complete;
};

/// Ascending allowed part values for sum n under c.
std::vector<i64> allowed_parts(i64 n, const Constraints& c,
                               std::optional<i64> max_part = {});

} // namespace recipart::spectrum
