#include "recipart/search.hpp"

#include <algorithm>
#include <chrono>

#include "recipart/smoothness.hpp"

namespace recipart::spectrum {

namespace {

std::int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

} // namespace

std::vector<i64> allowed_parts(i64 n, const Constraints& c,
                               std::optional<i64> max_part) {
    if (n < 1) throw std::invalid_argument("allowed_parts: n must be >= 1");
    c.validate();
    i64 hi = n;
    if (max_part) hi = std::min(hi, *max_part);
    std::vector<i64> out;
    for (i64 v = std::max<i64>(1, c.min_part); v <= hi; ++v)
        if (c.allows(v)) out.push_back(v);
    return out;
}

PartitionSearch::PartitionSearch(i64 n, const Constraints& c,
                                 std::optional<i64> max_part)
    : n_(n) {
    build(allowed_parts(n, c, max_part));
}

PartitionSearch::PartitionSearch(i64 n, std::vector<i64> universe) : n_(n) {
    if (n < 1) throw std::invalid_argument("PartitionSearch: n must be >= 1");
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    std::erase_if(universe, [&](i64 v) { return v < 1 || v > n_; });
    build(std::move(universe));
}

void PartitionSearch::build(std::vector<i64> values) {
    const std::size_t K = values.size();

    lcm_ = 1;
    for (i64 v : values)
        mpz_lcm_ui(lcm_.get_mpz_t(), lcm_.get_mpz_t(),
                   static_cast<unsigned long>(v));

    // Exploration order: heavy values (large prime-power divisor) first,
    // grouped by that divisor descending, values descending within a group;
    // then the light tail, plain value-descending.
    const i64 maxv = K ? values.back() : 1;
    const i64 theta = std::max<i64>(11, core::iroot(maxv, 2) + 1);

    struct Keyed { i64 key, v; };
    std::vector<Keyed> heavy;
    std::vector<i64> light;
    for (i64 v : values) {
        const i64 key = core::largest_prime_power_divisor(v);
        if (key >= theta) heavy.push_back({key, v});
        else light.push_back(v);
    }
    std::sort(heavy.begin(), heavy.end(), [](const Keyed& a, const Keyed& b) {
        return a.key != b.key ? a.key > b.key : a.v > b.v;
    });
    std::sort(light.begin(), light.end(), std::greater<>());

    vals_.clear();
    vals_.reserve(K);
    for (const auto& h : heavy) vals_.push_back(h.v);
    for (i64 v : light) vals_.push_back(v);
    light_start_ = heavy.size();

    wexp_.assign(K, mpz_class{});
    for (std::size_t i = 0; i < K; ++i)
        mpz_divexact_ui(wexp_[i].get_mpz_t(), lcm_.get_mpz_t(),
                        static_cast<unsigned long>(vals_[i]));

    suffmax_.assign(K + 1, 0);
    for (std::size_t i = K; i-- > 0;)
        suffmax_[i] = std::max(vals_[i], suffmax_[i + 1]);

    // cof_[i] = lcm_ / lcm(vals_[i..K-1]): the part of the common denominator
    // no completion from suffix i can supply. Any residual target must be
    // divisible by it. Divides cof_[i'] for i' >= i.
    cof_.assign(K + 1, mpz_class{});
    cof_trivial_.assign(K + 1, 1);
    cof_changed_.assign(K + 1, 0);
    mpz_class suffix_lcm = 1;
    cof_[K] = lcm_;
    for (std::size_t i = K; i-- > 0;) {
        mpz_lcm_ui(suffix_lcm.get_mpz_t(), suffix_lcm.get_mpz_t(),
                   static_cast<unsigned long>(vals_[i]));
        mpz_divexact(cof_[i].get_mpz_t(), lcm_.get_mpz_t(), suffix_lcm.get_mpz_t());
    }
    for (std::size_t i = 0; i <= K; ++i) {
        cof_trivial_[i] = (mpz_cmp_ui(cof_[i].get_mpz_t(), 1) == 0);
        cof_changed_[i] = (i == 0) || (mpz_cmp(cof_[i].get_mpz_t(),
                                               cof_[i - 1].get_mpz_t()) != 0);
    }

    // Heavy groups keyed by a bare prime p are skippable: every remaining
    // multiple of p lives inside the group, so picking a single member when p
    // is absent from the residual denominator can never be repaired.
    group_end_.assign(K, 0);
    group_head_.assign(K, 0);
    group_prime_.assign(K, 0);
    group_ppow_.assign(K, mpz_class{});
    std::size_t i = 0;
    while (i < heavy.size()) {
        std::size_t j = i;
        while (j < heavy.size() && heavy[j].key == heavy[i].key) ++j;
        const i64 key = heavy[i].key;
        const bool prime_key = core::is_prime(key);
        mpz_class ppow = 1;
        if (prime_key) {
            mpz_class rem = lcm_;
            while (mpz_divisible_ui_p(rem.get_mpz_t(),
                                      static_cast<unsigned long>(key))) {
                mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(),
                                static_cast<unsigned long>(key));
                ppow *= key;
            }
        }
        group_head_[i] = 1;
        for (std::size_t t = i; t < j; ++t) {
            group_end_[t] = j;
            group_prime_[t] = prime_key ? key : 0;
            group_ppow_[t] = ppow;
        }
        i = j;
    }
    for (std::size_t t = heavy.size(); t < K; ++t) {
        group_end_[t] = t + 1;
        group_head_[t] = 1;
    }

    // Ascending arrays for the sum/reciprocal corridor bounds.
    asc_ = values;   // already ascending
    asc_sum_.assign(K + 1, 0);
    asc_rec_.assign(K + 1, mpz_class{});
    mpz_class acc = 0;
    mpz_class w;
    for (std::size_t t = 0; t < K; ++t) {
        asc_sum_[t + 1] = asc_sum_[t] + asc_[t];
        mpz_divexact_ui(w.get_mpz_t(), lcm_.get_mpz_t(),
                        static_cast<unsigned long>(asc_[t]));
        acc += w;
        asc_rec_[t + 1] = acc;
    }

    // Deepest possible stack: r parts need at least r(r+1)/2 total.
    std::size_t r = 1;
    while (r <= K && asc_sum_[std::min(r, K)] <= n_) ++r;
    max_depth_ = std::min(K, r) + 2;
}

bool PartitionSearch::tick() {
    if (++nodes_ >= node_limit_) {
        budget_hit_ = true;
        return false;
    }
    if ((nodes_ & 0x1fff) == 0 && deadline_ns_ > 0 && now_ns() > deadline_ns_) {
        budget_hit_ = true;
        return false;
    }
    return true;
}

// Corridor test for completions drawn from suffix idx with `remaining` sum
// and `need` scaled reciprocal left. Sound over-approximation: the candidate
// pool is every universe value <= min(suffix max, remaining), a superset of
// the true remaining suffix.
bool PartitionSearch::bounds_admit(std::size_t idx, i64 remaining,
                                   const mpz_class& need, std::size_t depth) {
    const i64 cap = std::min(suffmax_[idx], remaining);
    if (cap <= 0) return false;
    const std::size_t hi =
        std::upper_bound(asc_.begin(), asc_.end(), cap) - asc_.begin();
    if (hi == 0) return false;
    if (asc_sum_[hi] < remaining) return false;   // not enough mass

    // Max reciprocal: greedily take smallest values while the sum fits.
    const std::size_t kk =
        std::upper_bound(asc_sum_.begin(), asc_sum_.begin() + hi + 1, remaining) -
        asc_sum_.begin() - 1;
    if (mpz_cmp(asc_rec_[kk].get_mpz_t(), need.get_mpz_t()) < 0) return false;

    // Min reciprocal: reaching the sum takes at least t = hi - ell parts, and
    // any t parts contribute at least the t smallest reciprocals available.
    const i64 spare = asc_sum_[hi] - remaining;
    const std::size_t ell =
        std::upper_bound(asc_sum_.begin(), asc_sum_.begin() + hi + 1, spare) -
        asc_sum_.begin() - 1;
    mpz_class& tmp = scratch_[depth];
    mpz_add(tmp.get_mpz_t(), need.get_mpz_t(), asc_rec_[ell].get_mpz_t());
    if (mpz_cmp(tmp.get_mpz_t(), asc_rec_[hi].get_mpz_t()) < 0) return false;
    return true;
}

bool PartitionSearch::dfs(std::size_t idx, i64 remaining, std::size_t depth) {
    // invariant: remaining > 0, need_stack_[depth] > 0
    if (!tick()) return false;
    const mpz_class& need = need_stack_[depth];
    mpz_class& child_need = need_stack_[depth + 1];

    const std::size_t K = vals_.size();
    for (std::size_t j = idx; j < K; ++j) {
        // Denominator prune: completions from suffix j cannot cancel the
        // prime powers in cof_[j].
        if ((j == idx || cof_changed_[j]) && !cof_trivial_[j] &&
            !mpz_divisible_p(need.get_mpz_t(), cof_[j].get_mpz_t()))
            return false;

        // Group-level skip for prime-keyed heavy groups.
        if (group_prime_[j] != 0 && (group_head_[j] || j == idx)) {
            const std::size_t ge = group_end_[j];
            std::size_t first_ok = j;
            while (first_ok < ge && vals_[first_ok] > remaining) ++first_ok;
            const std::size_t usable = ge - first_ok;
            const bool p_in_den =
                !mpz_divisible_p(need.get_mpz_t(), group_ppow_[j].get_mpz_t());
            if (usable == 0) {
                if (p_in_den) return false;   // p can never be cancelled now
                j = ge - 1;
                continue;
            }
            if (usable == 1 && !p_in_den) {
                // a lone pick would introduce p into the denominator for good
                j = ge - 1;
                continue;
            }
        }

        const i64 v = vals_[j];
        if (v > remaining) continue;
        const int cw = mpz_cmp(wexp_[j].get_mpz_t(), need.get_mpz_t());
        if (v == remaining) {
            if (cw == 0) {
                picks_.push_back(v);
                return true;
            }
            continue;
        }
        if (cw >= 0) {
            // reciprocal overshoot; in the light tail the weights only grow
            if (j >= light_start_) break;
            continue;
        }

        const i64 rem2 = remaining - v;
        mpz_sub(child_need.get_mpz_t(), need.get_mpz_t(), wexp_[j].get_mpz_t());
        if (!bounds_admit(j + 1, rem2, child_need, depth)) continue;

        picks_.push_back(v);
        if (dfs(j + 1, rem2, depth + 1)) return true;
        picks_.pop_back();
        if (budget_hit_) return false;
    }
    return false;
}

RecipSubsetSearch::RecipSubsetSearch(std::vector<i64> universe) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    if (!universe.empty() && universe.front() < 1)
        throw std::invalid_argument("RecipSubsetSearch: values must be positive");
    const std::size_t K = universe.size();

    lcm_ = 1;
    for (i64 v : universe)
        mpz_lcm_ui(lcm_.get_mpz_t(), lcm_.get_mpz_t(),
                   static_cast<unsigned long>(v));

    const i64 maxv = K ? universe.back() : 1;
    const i64 theta = std::max<i64>(11, core::iroot(maxv, 2) + 1);
    struct Keyed { i64 key, v; };
    std::vector<Keyed> heavy;
    std::vector<i64> light;
    for (i64 v : universe) {
        const i64 key = core::largest_prime_power_divisor(v);
        if (key >= theta) heavy.push_back({key, v});
        else light.push_back(v);
    }
    std::sort(heavy.begin(), heavy.end(), [](const Keyed& a, const Keyed& b) {
        return a.key != b.key ? a.key > b.key : a.v > b.v;
    });
    std::sort(light.begin(), light.end(), std::greater<>());
    vals_.reserve(K);
    for (const auto& h : heavy) vals_.push_back(h.v);
    for (i64 v : light) vals_.push_back(v);
    light_start_ = heavy.size();

    wexp_.assign(K, mpz_class{});
    for (std::size_t i = 0; i < K; ++i)
        mpz_divexact_ui(wexp_[i].get_mpz_t(), lcm_.get_mpz_t(),
                        static_cast<unsigned long>(vals_[i]));

    sufrec_.assign(K + 1, mpz_class{});
    for (std::size_t i = K; i-- > 0;) sufrec_[i] = sufrec_[i + 1] + wexp_[i];

    cof_.assign(K + 1, mpz_class{});
    cof_trivial_.assign(K + 1, 1);
    cof_changed_.assign(K + 1, 0);
    mpz_class suffix_lcm = 1;
    cof_[K] = lcm_;
    for (std::size_t i = K; i-- > 0;) {
        mpz_lcm_ui(suffix_lcm.get_mpz_t(), suffix_lcm.get_mpz_t(),
                   static_cast<unsigned long>(vals_[i]));
        mpz_divexact(cof_[i].get_mpz_t(), lcm_.get_mpz_t(), suffix_lcm.get_mpz_t());
    }
    for (std::size_t i = 0; i <= K; ++i) {
        cof_trivial_[i] = (mpz_cmp_ui(cof_[i].get_mpz_t(), 1) == 0);
        cof_changed_[i] = (i == 0) || (mpz_cmp(cof_[i].get_mpz_t(),
                                               cof_[i - 1].get_mpz_t()) != 0);
    }

    group_end_.assign(K, 0);
    group_head_.assign(K, 0);
    group_prime_.assign(K, 0);
    group_ppow_.assign(K, mpz_class{});
    std::size_t i = 0;
    while (i < heavy.size()) {
        std::size_t j = i;
        while (j < heavy.size() && heavy[j].key == heavy[i].key) ++j;
        const i64 key = heavy[i].key;
        const bool prime_key = core::is_prime(key);
        mpz_class ppow = 1;
        if (prime_key) {
            mpz_class rem = lcm_;
            while (mpz_divisible_ui_p(rem.get_mpz_t(),
                                      static_cast<unsigned long>(key))) {
                mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(),
                                static_cast<unsigned long>(key));
                ppow *= key;
            }
        }
        group_head_[i] = 1;
        for (std::size_t t = i; t < j; ++t) {
            group_end_[t] = j;
            group_prime_[t] = prime_key ? key : 0;
            group_ppow_[t] = ppow;
        }
        i = j;
    }
    for (std::size_t t = heavy.size(); t < K; ++t) {
        group_end_[t] = t + 1;
        group_head_[t] = 1;
    }
}

bool RecipSubsetSearch::tick() {
    if (++nodes_ >= node_limit_) {
        budget_hit_ = true;
        return false;
    }
    if ((nodes_ & 0x1fff) == 0 && deadline_ns_ > 0 && now_ns() > deadline_ns_) {
        budget_hit_ = true;
        return false;
    }
    return true;
}

bool RecipSubsetSearch::dfs(std::size_t idx, std::size_t depth) {
    // invariant: need_stack_[depth] > 0
    if (!tick()) return false;
    const mpz_class& need = need_stack_[depth];
    mpz_class& child_need = need_stack_[depth + 1];

    const std::size_t K = vals_.size();
    for (std::size_t j = idx; j < K; ++j) {
        if ((j == idx || cof_changed_[j]) && !cof_trivial_[j] &&
            !mpz_divisible_p(need.get_mpz_t(), cof_[j].get_mpz_t()))
            return false;
        // suffix reciprocal mass must still reach the target
        if (mpz_cmp(sufrec_[j].get_mpz_t(), need.get_mpz_t()) < 0) return false;

        if (group_prime_[j] != 0 && (group_head_[j] || j == idx)) {
            const std::size_t ge = group_end_[j];
            const bool p_in_den =
                !mpz_divisible_p(need.get_mpz_t(), group_ppow_[j].get_mpz_t());
            if (ge - j == 1 && !p_in_den) {
                j = ge - 1;
                continue;
            }
        }

        const int cw = mpz_cmp(wexp_[j].get_mpz_t(), need.get_mpz_t());
        if (cw == 0) {
            picks_.push_back(vals_[j]);
            return true;
        }
        if (cw > 0) {
            if (j >= light_start_) break;   // weights only grow in the tail
            continue;
        }
        mpz_sub(child_need.get_mpz_t(), need.get_mpz_t(), wexp_[j].get_mpz_t());
        picks_.push_back(vals_[j]);
        if (dfs(j + 1, depth + 1)) return true;
        picks_.pop_back();
        if (budget_hit_) return false;
    }
    return false;
}

SearchOutcome RecipSubsetSearch::find(const Rational& target,
                                      const SearchBudget& budget) {
    if (!target.is_positive())
        throw std::invalid_argument("RecipSubsetSearch: target must be positive");
    SearchOutcome out;
    nodes_ = 0;
    node_limit_ = budget.max_nodes;
    budget_hit_ = false;
    deadline_ns_ = budget.max_seconds > 0
                       ? now_ns() + static_cast<std::int64_t>(budget.max_seconds * 1e9)
                       : 0;
    picks_.clear();
    if (!mpz_divisible_p(lcm_.get_mpz_t(), target.den().get_mpz_t())) {
        out.status = SearchStatus::ProvenAbsent;
        return out;
    }
    if (need_stack_.size() < vals_.size() + 2) need_stack_.resize(vals_.size() + 2);
    mpz_class& need0 = need_stack_[0];
    mpz_divexact(need0.get_mpz_t(), lcm_.get_mpz_t(), target.den().get_mpz_t());
    need0 *= target.num();

    const bool found = dfs(0, 0);
    out.nodes = nodes_;
    if (found) {
        Partition w(picks_);
        if (!(w.recip() == target))
            throw std::logic_error("RecipSubsetSearch: witness failed self-check");
        out.status = SearchStatus::Found;
        out.witness = std::move(w);
    } else {
        out.status = budget_hit_ ? SearchStatus::BudgetExceeded
                                 : SearchStatus::ProvenAbsent;
    }
    return out;
}

SearchOutcome PartitionSearch::find(const Rational& alpha,
                                    const SearchBudget& budget) {
    if (!alpha.is_positive())
        throw std::invalid_argument("PartitionSearch: alpha must be positive");

    SearchOutcome out;
    nodes_ = 0;
    node_limit_ = budget.max_nodes;
    budget_hit_ = false;
    deadline_ns_ = budget.max_seconds > 0
                       ? now_ns() + static_cast<std::int64_t>(budget.max_seconds * 1e9)
                       : 0;
    picks_.clear();
    if (need_stack_.size() < max_depth_ + 2) need_stack_.resize(max_depth_ + 2);
    if (scratch_.size() < max_depth_ + 2) scratch_.resize(max_depth_ + 2);

    // alpha must be expressible over the universe's common denominator.
    if (!mpz_divisible_p(lcm_.get_mpz_t(), alpha.den().get_mpz_t())) {
        out.status = SearchStatus::ProvenAbsent;
        return out;
    }
    mpz_class& need0 = need_stack_[0];
    mpz_divexact(need0.get_mpz_t(), lcm_.get_mpz_t(), alpha.den().get_mpz_t());
    need0 *= alpha.num();

    bool found = false;
    if (bounds_admit(0, n_, need0, 0)) found = dfs(0, n_, 0);

    out.nodes = nodes_;
    if (found) {
        Partition w(picks_);
        // the witness must verify exactly before it leaves the engine
        if (w.total() != n_ || !(w.recip() == alpha))
            throw std::logic_error("PartitionSearch: witness failed self-check");
        out.status = SearchStatus::Found;
        out.witness = std::move(w);
    } else {
        out.status = budget_hit_ ? SearchStatus::BudgetExceeded
                                 : SearchStatus::ProvenAbsent;
    }
    return out;
}

} // namespace recipart::spectrum
