// Acceptance suite: runs the tiered claim checks and prints one PASS/FAIL
// line per criterion. Exit code 0 iff every executed criterion passed.

#include <cstring>
#include <iostream>

#include "recipart/claims.hpp"

int main(int argc, char** argv) {
    recipart::cli::Tier tier = recipart::cli::Tier::Fast;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--tier") == 0 && i + 1 < argc) {
            const auto parsed = recipart::cli::tier_from_name(argv[i + 1]);
            if (!parsed) {
                std::cerr << "unknown tier: " << argv[i + 1] << "\n";
                return 2;
            }
            tier = *parsed;
            ++i;
        }
    }
    const auto results = recipart::claims::run_claims(tier, &std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "ALL PASS" : "FAILURES PRESENT") << " (" << results.size()
              << " criteria at tier " << recipart::cli::tier_name(tier) << ")\n";
    return all ? 0 : 1;
}
