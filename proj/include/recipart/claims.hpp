#pragma once

/// The tiered claim-verification suite: every concrete numerical claim the
/// library reproduces, each pinned to a tier by runtime cost
/// (fast < 10 s, full < 10 min, extended open-ended).

#include <iosfwd>
#include <string>
#include <vector>

#include "recipart/cache.hpp"

namespace recipart::claims {

struct ClaimResult {
    int id = 0;
    std::string name;
    cli::Tier tier = cli::Tier::Fast;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Runs every claim with tier <= max_tier, in id order. Progress lines
/// (one per claim, PASS/FAIL) go to `progress` when non-null.
std::vector<ClaimResult> run_claims(cli::Tier max_tier,
                                    std::ostream* progress = nullptr);

/// Individual criteria (ids match the acceptance list).
ClaimResult claim_graham_slice();          // 1  full
ClaimResult claim_transfer_tables();       // 2  fast
ClaimResult claim_subset_spectrum_158();   // 3  fast
ClaimResult claim_unit_fraction_identity();// 4  fast
ClaimResult claim_spectrum_oracle();       // 5  full
ClaimResult claim_growth_chain();          // 6  full
ClaimResult claim_greedy_split();          // 7  fast
ClaimResult claim_complete_sequences();    // 8  fast
ClaimResult claim_three_smooth_range();    // 9  full
ClaimResult claim_stable_empty_65();       // 10 full
ClaimResult claim_stable_count_100();      // 11 extended
ClaimResult claim_lower_bound_pipeline();  // 12 extended
ClaimResult claim_chain_properties();      // 13 fast
ClaimResult claim_assembly_and_thresholds(); // 14 full

} // namespace recipart::claims
