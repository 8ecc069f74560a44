#include "recipart/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace recipart::cli {

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::Fast: return "fast";
        case Tier::Full: return "full";
        case Tier::Extended: return "extended";
    }
    return "fast";
}

std::optional<Tier> tier_from_name(const std::string& s) {
    if (s == "fast") return Tier::Fast;
    if (s == "full") return Tier::Full;
    if (s == "extended") return Tier::Extended;
    return std::nullopt;
}

RunConfig RunConfig::from_env() {
    RunConfig cfg;
    if (const char* dir = std::getenv("RECIPART_CACHE_DIR"))
        cfg.cache_dir = dir;
    return cfg;
}

json to_json(const core::Rational& r) { return r.to_string(); }

json to_json(const core::Partition& p) {
    json j;
    j["parts"] = p.parts();
    j["sum"] = p.total();
    j["recip"] = p.recip().to_string();
    return j;
}

json to_json(const core::Constraints& c) {
    json j;
    j["min_part"] = c.min_part;
    j["forbidden_modulus"] =
        c.forbidden_modulus ? json(*c.forbidden_modulus) : json(nullptr);
    j["smooth_bound"] = c.smooth_bound ? json(*c.smooth_bound) : json(nullptr);
    j["powersmooth_bound"] =
        c.powersmooth_bound ? json(*c.powersmooth_bound) : json(nullptr);
    j["excluded"] = std::vector<i64>(c.excluded.begin(), c.excluded.end());
    return j;
}

json to_json(const spectrum::SearchOutcome& oc) {
    json j;
    switch (oc.status) {
        case spectrum::SearchStatus::Found: j["status"] = "found"; break;
        case spectrum::SearchStatus::ProvenAbsent: j["status"] = "proven-absent"; break;
        case spectrum::SearchStatus::BudgetExceeded: j["status"] = "budget-exceeded"; break;
    }
    j["nodes"] = oc.nodes;
    if (oc.witness) j["witness"] = to_json(*oc.witness);
    return j;
}

core::Constraints constraints_from_json(const json& j) {
    core::Constraints c;
    c.min_part = j.value("min_part", static_cast<i64>(1));
    const auto opt_field = [&](const char* name) -> std::optional<i64> {
        if (!j.contains(name) || j[name].is_null()) return std::nullopt;
        return j[name].get<i64>();
    };
    c.forbidden_modulus = opt_field("forbidden_modulus");
    c.smooth_bound = opt_field("smooth_bound");
    c.powersmooth_bound = opt_field("powersmooth_bound");
    if (j.contains("excluded"))
        for (const auto& v : j["excluded"]) c.excluded.insert(v.get<i64>());
    c.validate();
    return c;
}

std::string constraints_signature(const core::Constraints& c) {
    if (c.unconstrained()) return "default";
    const std::string dump = to_json(c).dump();
    u64 h = 1469598103934665603ULL;
    for (char ch : dump) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SpectrumCache::SpectrumCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path SpectrumCache::entry_path(i64 n,
                                                const core::Constraints& c) const {
    return dir_ / "spectrum" / constraints_signature(c) /
           ("n" + std::to_string(n) + ".json");
}

std::optional<std::set<core::Rational>> SpectrumCache::load(
    i64 n, const core::Constraints& c, bool* corrupt) const {
    if (corrupt) *corrupt = false;
    const auto path = entry_path(n, c);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    const auto bad = [&]() -> std::optional<std::set<core::Rational>> {
        if (corrupt) *corrupt = true;
        return std::nullopt;
    };
    json j;
    try {
        in >> j;
    } catch (const json::exception&) {
        return bad();
    }
    try {
        if (!j.is_object() || j.value("n", static_cast<i64>(-1)) != n) return bad();
        if (!j.contains("complete") || !j["complete"].is_boolean() ||
            !j["complete"].get<bool>())
            return bad();
        if (constraints_signature(constraints_from_json(j.at("constraints"))) !=
            constraints_signature(c))
            return bad();
        std::set<core::Rational> out;
        std::string prev;
        for (const auto& s : j.at("recips")) {
            const std::string text = s.get<std::string>();
            const core::Rational r = core::Rational::parse(text);
            // entries must be canonical (reduced) and strictly ascending
            if (r.to_string() != text || !r.is_positive()) return bad();
            if (!out.empty() && !(*out.rbegin() < r)) return bad();
            out.insert(r);
        }
        return out;
    } catch (const std::exception&) {
        return bad();
    }
}

void SpectrumCache::store(i64 n, const core::Constraints& c,
                          const std::set<core::Rational>& recips,
                          bool complete) const {
    const auto path = entry_path(n, c);
    std::filesystem::create_directories(path.parent_path());
    json j;
    j["n"] = n;
    j["constraints"] = to_json(c);
    j["complete"] = complete;
    std::vector<std::string> strs;
    strs.reserve(recips.size());
    for (const auto& r : recips) strs.push_back(r.to_string());
    j["recips"] = strs;

    const auto tmp = path.parent_path() /
                     (path.filename().string() + ".tmp" +
                      std::to_string(static_cast<unsigned long>(::getpid())));
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump(1, '\t') << "\n";
        if (!out) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("SpectrumCache: write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);   // atomic replace
}

std::set<core::Rational> cached_spectrum(i64 n, const core::Constraints& c,
                                         const spectrum::EnumLimits& lim,
                                         const SpectrumCache& cache) {
    bool corrupt = false;
    if (auto hit = cache.load(n, c, &corrupt)) return *hit;
    if (corrupt)
        std::cerr << "warning: corrupt cache entry "
                  << cache.entry_path(n, c).string() << "; recomputing\n";
    auto result = spectrum::spectrum(n, c, lim);
    cache.store(n, c, result, true);
    return result;
}

} // namespace recipart::cli
