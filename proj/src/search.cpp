#include "recipart/search.hpp"

#include <algorithm>
#include <unordered_set>

#include "recipart/bounds.hpp"

namespace recipart::spectrum {

namespace {

struct MpzHash {
    std::size_t operator()(const mpz_class& z) const {
        const mpz_srcptr p = z.get_mpz_t();
        std::size_t h = 0xcbf29ce484222325ULL ^
                        static_cast<std::size_t>(mpz_sgn(p) + 2);
        const mp_size_t n = mpz_size(p);
        const mp_limb_t* limbs = mpz_limbs_read(p);
        for (mp_size_t i = 0; i < n; ++i)
            h = (h ^ static_cast<std::size_t>(limbs[i])) * 0x100000001b3ULL;
        return h;
    }
};

/// Exact count of subsets of `asc` summing to n (the constrained
/// distinct-partition count).
mpz_class subset_sum_count(const std::vector<i64>& asc, i64 n) {
    std::vector<mpz_class> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (i64 v : asc) {
        if (v > n) break;
        for (i64 j = n; j >= v; --j)
            dp[static_cast<std::size_t>(j)] += dp[static_cast<std::size_t>(j - v)];
    }
    return dp[static_cast<std::size_t>(n)];
}

struct ScaledUniverse {
    std::vector<i64> asc;
    std::vector<i64> psum;          // prefix sums, size K+1
    std::vector<mpz_class> w;       // lcm / v per index
    mpz_class lcm;

    explicit ScaledUniverse(std::vector<i64> values) : asc(std::move(values)) {
        lcm = 1;
        for (i64 v : asc)
            mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(),
                       static_cast<unsigned long>(v));
        psum.assign(asc.size() + 1, 0);
        w.assign(asc.size(), mpz_class{});
        for (std::size_t i = 0; i < asc.size(); ++i) {
            psum[i + 1] = psum[i] + asc[i];
            mpz_divexact_ui(w[i].get_mpz_t(), lcm.get_mpz_t(),
                            static_cast<unsigned long>(asc[i]));
        }
    }
};

/// Walk every distinct-part partition of n over the universe, descending by
/// value, calling sink(scaled_recip) at each leaf. Returns the leaf count.
template <class Sink>
u64 enumerate_scaled(const ScaledUniverse& u, i64 n, Sink&& sink) {
    u64 leaves = 0;
    mpz_class acc = 0;
    auto rec = [&](auto&& self, std::size_t top, i64 left) -> void {
        // top: one past the largest usable index; left > 0
        std::size_t j = std::upper_bound(u.asc.begin(), u.asc.begin() + top, left) -
                        u.asc.begin();
        while (j-- > 0) {
            if (u.psum[j + 1] < left) break;   // not enough mass below
            const i64 v = u.asc[j];
            acc += u.w[j];
            if (v == left) {
                ++leaves;
                sink(static_cast<const mpz_class&>(acc));
            } else {
                self(self, j, left - v);
            }
            acc -= u.w[j];
        }
    };
    if (n >= 1) rec(rec, u.asc.size(), n);
    return leaves;
}

void check_ceiling(const std::vector<i64>& asc, i64 n, const EnumLimits& lim,
                   const char* what) {
    const mpz_class cnt = subset_sum_count(asc, n);
    if (cnt > static_cast<unsigned long>(lim.max_enumerated))
        throw ResourceLimitError(std::string(what) + ": distinct-partition count " +
                                 cnt.get_str() + " exceeds ceiling " +
                                 std::to_string(lim.max_enumerated));
}

} // namespace

std::set<Rational> spectrum(i64 n, const Constraints& c, const EnumLimits& lim) {
    if (n < 1) throw std::invalid_argument("spectrum: n must be >= 1");
    const ScaledUniverse u(allowed_parts(n, c));
    check_ceiling(u.asc, n, lim, "spectrum");
    std::unordered_set<mpz_class, MpzHash> seen;
    enumerate_scaled(u, n, [&](const mpz_class& acc) { seen.insert(acc); });
    std::set<Rational> out;
    for (const mpz_class& s : seen) out.insert(Rational(s, u.lcm));
    return out;
}

u64 spectrum_size(i64 n, const Constraints& c, const EnumLimits& lim) {
    if (n < 1) throw std::invalid_argument("spectrum_size: n must be >= 1");
    const ScaledUniverse u(allowed_parts(n, c));
    check_ceiling(u.asc, n, lim, "spectrum_size");
    std::unordered_set<mpz_class, MpzHash> seen;
    enumerate_scaled(u, n, [&](const mpz_class& acc) { seen.insert(acc); });
    return seen.size();
}

SearchOutcome exists_partition(i64 n, const Rational& alpha, const Constraints& c,
                               const SearchBudget& b) {
    if (n < 1) throw std::invalid_argument("exists_partition: n must be >= 1");
    if (!alpha.is_positive())
        throw std::invalid_argument("exists_partition: alpha must be positive");
    PartitionSearch engine(n, c, b.max_part);
    return engine.find(alpha, b);
}

namespace {

/// One full-spectrum elimination round: keeps only the candidates whose
/// reciprocal appears among partitions of n. Updates cand (and the parallel
/// payload vector) in place.
template <class Payload>
void mark_round(i64 n, const Constraints& c, std::vector<Rational>& cand,
                std::vector<Payload>& payload) {
    const ScaledUniverse u(allowed_parts(n, c));
    // candidates whose denominator survives the universe lcm, pre-scaled
    std::vector<mpz_class> scaled;
    std::vector<std::size_t> origin;
    scaled.reserve(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (!mpz_divisible_p(u.lcm.get_mpz_t(), cand[i].den().get_mpz_t()))
            continue;
        mpz_class s;
        mpz_divexact(s.get_mpz_t(), u.lcm.get_mpz_t(), cand[i].den().get_mpz_t());
        s *= cand[i].num();
        scaled.push_back(std::move(s));
        origin.push_back(i);
    }
    std::vector<char> hit(scaled.size(), 0);
    enumerate_scaled(u, n, [&](const mpz_class& acc) {
        const auto it = std::lower_bound(scaled.begin(), scaled.end(), acc,
                                         [](const mpz_class& a, const mpz_class& b) {
                                             return mpz_cmp(a.get_mpz_t(),
                                                            b.get_mpz_t()) < 0;
                                         });
        if (it != scaled.end() && mpz_cmp(it->get_mpz_t(), acc.get_mpz_t()) == 0)
            hit[static_cast<std::size_t>(it - scaled.begin())] = 1;
    });
    std::vector<Rational> next_cand;
    std::vector<Payload> next_payload;
    for (std::size_t k = 0; k < scaled.size(); ++k) {
        if (!hit[k]) continue;
        next_cand.push_back(std::move(cand[origin[k]]));
        next_payload.push_back(std::move(payload[origin[k]]));
    }
    cand = std::move(next_cand);
    payload = std::move(next_payload);
}

} // namespace

std::set<Rational> stable_candidates(i64 window_start, i64 window_end,
                                     const Constraints& c, const EnumLimits& lim) {
    if (window_start < 1 || window_start > window_end)
        throw std::invalid_argument("stable_candidates: bad window");
    std::set<Rational> base = spectrum(window_start, c, lim);
    std::vector<Rational> cand(base.begin(), base.end());
    std::vector<char> payload(cand.size(), 0);
    for (i64 n = window_start + 1; n <= window_end && !cand.empty(); ++n) {
        check_ceiling(allowed_parts(n, c), n, lim, "stable_candidates");
        mark_round(n, c, cand, payload);
    }
    return {cand.begin(), cand.end()};
}

StableSetResult stable_set_approx(i64 n, i64 horizon, const Constraints& c,
                                  const StableSetOptions& opt) {
    if (n < 1 || n > horizon)
        throw std::invalid_argument("stable_set_approx: need 1 <= n <= horizon");
    StableSetResult res;
    res.base_n = n;
    res.horizon = horizon;

    // Phase 1: full-spectrum window. Wholesale elimination is cheap while
    // the enumeration ceiling lasts; extend while too many candidates remain.
    std::set<Rational> base = spectrum(n, c, opt.enum_limits);
    std::vector<Rational> cand(base.begin(), base.end());
    std::vector<char> flagged(cand.size(), 0);
    base.clear();

    u64 used = 0;
    {
        const mpz_class cnt = subset_sum_count(allowed_parts(n, c), n);
        used = static_cast<u64>(mpz_get_ui(cnt.get_mpz_t()));
    }
    i64 w = n;
    while (w < horizon && cand.size() > opt.target_candidates) {
        const mpz_class next_cnt = subset_sum_count(allowed_parts(w + 1, c), w + 1);
        if (next_cnt > static_cast<unsigned long>(
                           opt.enum_limits.max_enumerated > used
                               ? opt.enum_limits.max_enumerated - used
                               : 0))
            break;
        ++w;
        used += static_cast<u64>(mpz_get_ui(next_cnt.get_mpz_t()));
        mark_round(w, c, cand, flagged);
    }
    res.window_end = w;

    // Phase 2: targeted searches for each surviving candidate at every
    // remaining n'. Budget misses escalate, then flag the candidate.
    for (i64 np = w + 1; np <= horizon && !cand.empty(); ++np) {
        PartitionSearch engine(np, c);
        std::vector<Rational> keep;
        std::vector<char> keep_flag;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            SearchBudget b = opt.budget;
            SearchOutcome oc;
            for (int attempt = 0;; ++attempt) {
                oc = engine.find(cand[i], b);
                ++res.targeted_searches;
                if (!oc.budget_exceeded() || attempt >= opt.max_escalations) break;
                b.max_nodes *= opt.escalation_factor;
                b.max_seconds *= static_cast<double>(opt.escalation_factor);
            }
            if (oc.proven_absent()) continue;
            keep.push_back(cand[i]);
            char fl = flagged[i];
            if (oc.budget_exceeded()) {
                fl = 1;
                ++res.budget_hits;
            }
            keep_flag.push_back(fl);
        }
        cand = std::move(keep);
        flagged = std::move(keep_flag);
    }

    res.stabilized = (res.budget_hits == 0);
    for (std::size_t i = 0; i < cand.size(); ++i)
        res.survivors.push_back({cand[i], flagged[i] != 0});
    return res;
}

EmpiricalN empirical_N(const Rational& alpha, i64 m, i64 horizon,
                       const SearchBudget& b) {
    if (!alpha.is_positive())
        throw std::invalid_argument("empirical_N: alpha must be positive");
    if (m < 1) throw std::invalid_argument("empirical_N: m must be >= 1");
    if (horizon < 1) throw std::invalid_argument("empirical_N: horizon must be >= 1");
    Constraints c;
    c.min_part = m;
    EmpiricalN res;
    res.horizon = horizon;
    for (i64 n = horizon; n >= 1; --n) {
        const SearchOutcome oc = exists_partition(n, alpha, c, b);
        if (oc.found()) continue;
        if (oc.budget_exceeded()) {
            res.budget_hit = true;
            return res;   // Unstable: the run is not decisively contiguous
        }
        // proven absent at n
        if (n == horizon) return res;   // no contiguous run reaches the horizon
        res.threshold = n + 1;
        return res;
    }
    res.threshold = 1;   // every n in [1, horizon] admits a partition
    return res;
}

} // namespace recipart::spectrum
