#pragma once

/// Run configuration, canonical JSON forms, and the on-disk spectrum cache.
///
/// Cache writes are atomic (write to a temporary in the same directory,
/// then rename); loads validate every invariant before trusting an entry
/// and report corrupt files so callers recompute instead.

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "recipart/search.hpp"

namespace recipart::cli {

using nlohmann::json;

enum class Tier { Fast, Full, Extended };

std::string tier_name(Tier t);
std::optional<Tier> tier_from_name(const std::string& s);

struct RunConfig {
    std::filesystem::path cache_dir = ".recipart-cache";
    spectrum::SearchBudget budget;
    u64 spectrum_ceiling = 100'000'000;
    Tier tier = Tier::Fast;

    /// Applies the RECIPART_CACHE_DIR override when present.
    static RunConfig from_env();
};

json to_json(const core::Rational& r);
json to_json(const core::Partition& p);
json to_json(const core::Constraints& c);
json to_json(const spectrum::SearchOutcome& oc);

core::Constraints constraints_from_json(const json& j);

/// Stable short identifier for a constraint set (used in cache paths).
std::string constraints_signature(const core::Constraints& c);

class SpectrumCache {
public:
    explicit SpectrumCache(std::filesystem::path dir);

    std::filesystem::path entry_path(i64 n, const core::Constraints& c) const;

    /// Validated load; nullopt on missing or corrupt entries (corrupt files
    /// set *corrupt when provided).
    std::optional<std::set<core::Rational>> load(i64 n, const core::Constraints& c,
                                                 bool* corrupt = nullptr) const;

    /// Atomic store (temp file + rename).
    void store(i64 n, const core::Constraints& c,
               const std::set<core::Rational>& recips, bool complete) const;

private:
    std::filesystem::path dir_;
};

/// Cache-through spectrum computation; warns to stderr and recomputes on
/// corrupt entries.
std::set<core::Rational> cached_spectrum(i64 n, const core::Constraints& c,
                                         const spectrum::EnumLimits& lim,
                                         const SpectrumCache& cache);

} // namespace recipart::cli
