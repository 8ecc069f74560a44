#include "recipart/constructions.hpp"

#include <algorithm>
#include <map>

#include "recipart/sieves.hpp"
#include "recipart/smoothness.hpp"

namespace recipart::constructions {

Partition compose_partitions(const Partition& B, const Partition& C, i64 M) {
    if (M < 2) throw std::invalid_argument("compose_partitions: M must be >= 2");
    std::vector<i64> parts;
    parts.reserve(B.size() + C.size());
    for (i64 b : B.parts()) parts.push_back(M * b);
    for (i64 c : C.parts()) {
        if (std::binary_search(B.parts().begin(), B.parts().end(), c / M) &&
            c % M == 0)
            throw std::invalid_argument(
                "compose_partitions: M*B and C overlap at " + std::to_string(c));
        parts.push_back(c);
    }
    Partition out(std::move(parts));
    return out;
}

Rational SplitResult::spread() const {
    if (recips.empty()) return Rational(0);
    Rational lo = recips.front(), hi = recips.front();
    for (const Rational& r : recips) {
        if (r < lo) lo = r;
        if (hi < r) hi = r;
    }
    return hi - lo;
}

SplitResult greedy_balanced_split(const std::vector<i64>& A, i64 parts_count) {
    if (parts_count < 1)
        throw std::invalid_argument("greedy_balanced_split: parts_count must be >= 1");
    std::vector<i64> sorted = A;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("greedy_balanced_split: duplicate element");
    if (!sorted.empty() && sorted.front() < 1)
        throw std::invalid_argument("greedy_balanced_split: non-positive element");

    SplitResult out;
    out.blocks.assign(static_cast<std::size_t>(parts_count), {});
    out.recips.assign(static_cast<std::size_t>(parts_count), Rational(0));
    for (i64 a : sorted) {
        std::size_t pick = 0;
        for (std::size_t i = 1; i < out.recips.size(); ++i)
            if (out.recips[i] < out.recips[pick]) pick = i;
        out.blocks[pick].push_back(a);
        out.recips[pick] += Rational(1, a);
    }
    return out;
}

SearchOutcome three_smooth_one_partition(i64 n, const SearchBudget& b) {
    if (n < 1) throw std::invalid_argument("three_smooth_one_partition: n must be >= 1");
    // merge-generate the 3-smooth universe; never scans [1, n]
    auto universe = sieves::smooth_numbers(n, 3, std::max(n, sieves::kDefaultSieveCeiling)).values;
    spectrum::PartitionSearch engine(n, std::move(universe));
    return engine.find(Rational(1), b);
}

AlphaDecomposition decompose_alpha(const Rational& alpha, i64 lemma5_modulus) {
    if (!alpha.is_positive())
        throw std::invalid_argument("decompose_alpha: alpha must be positive");
    if (lemma5_modulus < 2 || lemma5_modulus % 5 != 0)
        throw std::invalid_argument("decompose_alpha: modulus must be a multiple of 5");
    AlphaDecomposition d;
    if (alpha > Rational(1)) {
        // gamma = largest integer strictly below alpha
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), alpha.num().get_mpz_t(), alpha.den().get_mpz_t());
        Rational gamma(fl, 1);
        if (gamma == alpha) gamma -= Rational(1);   // exact integers step down
        d.modulus = lemma5_modulus;
        d.gamma = gamma;
        d.beta = Rational(lemma5_modulus) * (alpha - gamma);
        return d;
    }
    // bracket: smallest k >= 2 with 4/3^k < alpha (then alpha <= 4/3^(k-1))
    i64 k = 2;
    Rational pow = Rational(4, 9);   // 4/3^2
    while (pow >= alpha) {
        ++k;
        pow = pow * Rational(1, 3);
    }
    d.modulus = 5;
    d.k = k;
    d.gamma = pow;
    d.beta = Rational(5) * (alpha - pow);
    return d;
}

namespace {

/// Values in [1, cap] that are not 3-smooth and not divisible by M.
std::vector<i64> rough_mfree_pool(i64 cap, i64 M) {
    std::vector<i64> out;
    for (i64 v = 2; v <= cap; ++v) {
        if (v % M == 0) continue;
        if (core::is_smooth(v, 3)) continue;
        out.push_back(v);
    }
    return out;
}

} // namespace

MfreeOutcome mfree_gamma_partition(i64 n, i64 gamma, i64 M, const SearchBudget& b) {
    if (n < 1) throw std::invalid_argument("mfree_gamma_partition: n must be >= 1");
    if (gamma < 1) throw std::invalid_argument("mfree_gamma_partition: gamma must be >= 1");
    if (M < 5 || M % 5 != 0)
        throw std::invalid_argument("mfree_gamma_partition: M must be a positive multiple of 5");

    MfreeOutcome res;
    if (gamma == 1) {
        res.outcome = three_smooth_one_partition(n, b);
        if (res.outcome.found())
            res.smooth_block = res.outcome.witness->parts();
        return res;
    }

    // C2 = gamma-1 disjoint unit-reciprocal blocks of non-3-smooth M-free
    // integers. The first gamma-2 blocks take the smallest sums available;
    // the last block's sum is varied until the remainder has a 3-smooth
    // 1-partition.
    u64 nodes_used = 0;
    bool undecided = false;   // some inner search hit its budget
    const auto spend = [&](const SearchOutcome& oc) {
        nodes_used += oc.nodes;
        if (oc.budget_exceeded()) undecided = true;
        return nodes_used < b.max_nodes;
    };
    const auto unit_block = [&](const std::vector<i64>& pool, i64 s,
                                SearchOutcome& oc) {
        spectrum::PartitionSearch engine(s, pool);
        SearchBudget inner = b;
        inner.max_nodes = std::max<u64>(
            1024, (b.max_nodes - std::min(b.max_nodes, nodes_used)) / 4);
        oc = engine.find(Rational(1), inner);
        return spend(oc);
    };

    std::vector<i64> pool = rough_mfree_pool(n, M);
    std::vector<std::vector<i64>> blocks;
    std::vector<i64> c2_parts;
    i64 c2_sum = 0;
    for (i64 blk = 0; blk < gamma - 2; ++blk) {
        bool placed = false;
        for (i64 s = 2; s <= n - c2_sum; ++s) {
            SearchOutcome oc;
            if (!unit_block(pool, s, oc)) {
                res.outcome.status = SearchStatus::BudgetExceeded;
                return res;
            }
            if (!oc.found()) continue;
            for (i64 v : oc.witness->parts()) {
                c2_parts.push_back(v);
                c2_sum += v;
                pool.erase(std::remove(pool.begin(), pool.end(), v), pool.end());
            }
            blocks.push_back(oc.witness->parts());
            placed = true;
            break;
        }
        if (!placed) {
            res.outcome.status = undecided ? SearchStatus::BudgetExceeded
                                           : SearchStatus::ProvenAbsent;
            return res;
        }
    }

    // last block: sum s, remainder n - c2_sum - s needs a 3-smooth 1-partition
    std::map<i64, bool> smooth_rep;   // memo over remainders
    const auto representable = [&](i64 r) {
        if (r < 1) return false;
        auto it = smooth_rep.find(r);
        if (it != smooth_rep.end()) return it->second;
        const SearchOutcome oc = three_smooth_one_partition(r, b);
        if (oc.budget_exceeded()) undecided = true;
        return smooth_rep[r] = oc.found();
    };
    for (i64 s = 2; s <= n - c2_sum - 1; ++s) {
        if (!representable(n - c2_sum - s)) continue;
        SearchOutcome oc;
        if (!unit_block(pool, s, oc)) {
            res.outcome.status = SearchStatus::BudgetExceeded;
            return res;
        }
        if (!oc.found()) continue;

        const SearchOutcome c1 = three_smooth_one_partition(n - c2_sum - s, b);
        if (!c1.found()) continue;   // memo said found; re-check stays sound
        std::vector<i64> parts = c1.witness->parts();
        parts.insert(parts.end(), c2_parts.begin(), c2_parts.end());
        const auto& last = oc.witness->parts();
        parts.insert(parts.end(), last.begin(), last.end());
        Partition w(std::move(parts));
        Constraints cons;
        cons.forbidden_modulus = M;
        if (w.total() != n || !(w.recip() == Rational(gamma)) || !satisfies(w, cons))
            throw std::logic_error("mfree_gamma_partition: witness failed self-check");
        res.outcome.status = SearchStatus::Found;
        res.outcome.witness = std::move(w);
        res.smooth_block = c1.witness->parts();
        res.rough_blocks = c2_parts;
        res.rough_blocks.insert(res.rough_blocks.end(), last.begin(), last.end());
        return res;
    }
    // Absence is only proven when the scan was exhaustive: the greedy prefix
    // for gamma >= 3 fixes early blocks, so a miss there is inconclusive.
    res.outcome.status = (!undecided && gamma <= 2) ? SearchStatus::ProvenAbsent
                                                    : SearchStatus::BudgetExceeded;
    return res;
}

SearchOutcome five_free_four_over_3k(i64 n, i64 k, const SearchBudget& b) {
    if (n < 1) throw std::invalid_argument("five_free_four_over_3k: n must be >= 1");
    if (k < 2) throw std::invalid_argument("five_free_four_over_3k: k must be >= 2");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 3, static_cast<unsigned long>(k));
    Constraints c;
    c.forbidden_modulus = 5;
    return spectrum::exists_partition(n, Rational(mpz_class(4), den), c, b);
}

std::vector<i64> complete_subset_sum(const std::vector<i64>& X, i64 t) {
    if (X.empty() || X.front() != 1)
        throw std::invalid_argument("complete_subset_sum: x_1 must be 1");
    for (std::size_t i = 1; i < X.size(); ++i) {
        if (X[i] <= X[i - 1])
            throw std::invalid_argument("complete_subset_sum: X must be strictly ascending");
        if (X[i] > 2 * X[i - 1])
            throw std::invalid_argument("complete_subset_sum: doubling condition violated");
    }
    if (t < 1 || t > 2 * X.back() - 1)
        throw std::out_of_range("complete_subset_sum: t outside [1, 2*x_l - 1]");
    std::vector<i64> subset;
    i64 left = t;
    for (std::size_t i = X.size(); i-- > 0 && left > 0;) {
        if (X[i] <= left) {
            subset.push_back(X[i]);
            left -= X[i];
        }
    }
    if (left != 0)
        throw std::logic_error("complete_subset_sum: greedy failed on valid input");
    std::reverse(subset.begin(), subset.end());
    return subset;
}

std::set<Rational> subset_reciprocal_spectrum(const std::vector<i64>& S) {
    std::vector<i64> vals = S;
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
        throw std::invalid_argument("subset_reciprocal_spectrum: duplicate element");
    if (!vals.empty() && vals.front() < 1)
        throw std::invalid_argument("subset_reciprocal_spectrum: non-positive element");
    if (vals.size() > 25)
        throw ResourceLimitError("subset_reciprocal_spectrum: more than 25 elements");

    mpz_class lcm = 1;
    for (i64 v : vals)
        mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(v));
    std::vector<mpz_class> w(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        mpz_divexact_ui(w[i].get_mpz_t(), lcm.get_mpz_t(),
                        static_cast<unsigned long>(vals[i]));

    std::set<Rational> out;
    mpz_class acc = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == vals.size()) {
            out.insert(Rational(acc, lcm));
            return;
        }
        self(self, i + 1);
        acc += w[i];
        self(self, i + 1);
        acc -= w[i];
    };
    rec(rec, 0);
    return out;
}

SearchOutcome seven_fifteen_partition(i64 m, const SearchBudget& b) {
    if (m < 1) throw std::invalid_argument("seven_fifteen_partition: m must be >= 1");
    Constraints c;
    c.forbidden_modulus = 2;
    c.excluded = {1, 3, 5};
    return spectrum::exists_partition(m, Rational(7, 15), c, b);
}

const std::vector<i64>& TransferTables::master_set() {
    static const std::vector<i64> d{1, 2, 3, 4, 5, 6, 8, 18, 20, 24, 36};
    return d;
}

const std::array<std::vector<i64>, 8>& TransferTables::blocks() {
    static const std::array<std::vector<i64>, 8> b{{
        {1},
        {2, 4, 6, 18, 36},
        {2, 3, 6},
        {2, 4, 8, 18, 24, 36},
        {2, 3, 8, 24},
        {3, 4, 5, 6, 20},
        {2, 4, 5, 20},
        {3, 4, 5, 8, 20, 24},
    }};
    return b;
}

const std::vector<i64>& TransferTables::half_set() {
    static const std::vector<i64> h = [] {
        std::vector<i64> out;
        for (i64 d : master_set())
            if (d % 2 == 0) out.push_back(d / 2);
        return out;
    }();
    return h;
}

const Rational& TransferTables::shift() {
    static const Rational s(22, 15);
    return s;
}

void TransferTables::verify() {
    std::set<i64> uni;
    for (int i = 0; i < 8; ++i) {
        const auto& d = blocks()[static_cast<std::size_t>(i)];
        i64 sum = 0;
        for (i64 v : d) {
            sum += v;
            uni.insert(v);
        }
        if (((sum % 8) + 8) % 8 != (i + 1) % 8)
            throw std::logic_error("TransferTables: sum(D_i) mod 8 mismatch at i=" +
                                   std::to_string(i + 1));
        if (!(core::reciprocal_sum(d) == Rational(1)))
            throw std::logic_error("TransferTables: recip(D_i) != 1 at i=" +
                                   std::to_string(i + 1));
    }
    if (std::vector<i64>(uni.begin(), uni.end()) != master_set())
        throw std::logic_error("TransferTables: union of blocks differs from master set");
    std::vector<i64> halves = half_set();
    const std::vector<i64> expected{1, 2, 3, 4, 9, 10, 12, 18};
    if (halves != expected)
        throw std::logic_error("TransferTables: half-set identity failed");
}

TransferOutcome transfer_beta_to_alpha(const Partition& B, i64 n_prime,
                                       const SearchBudget& b) {
    if (n_prime < 2 * B.total() + 814)
        throw std::invalid_argument(
            "transfer_beta_to_alpha: n_prime must be >= 2*sum(B) + 814");
    TransferTables::verify();

    TransferOutcome out;
    const auto& master = TransferTables::master_set();
    std::vector<i64> doubled;   // 2*B1: b with 2b outside the master set
    i64 doubled_sum = 0;
    for (i64 v : B.parts()) {
        if (std::binary_search(master.begin(), master.end(), 2 * v)) continue;
        doubled.push_back(2 * v);
        doubled_sum += 2 * v;
    }
    out.doubled_block = doubled;
    out.alpha = core::reciprocal_sum(doubled) + TransferTables::shift();

    // pick i with m = n' - sum(2B1) - sum(D_i) = 1 (mod 8)
    int pick = 0;
    i64 m = 0;
    for (int i = 1; i <= 8; ++i) {
        i64 dsum = 0;
        for (i64 v : TransferTables::blocks()[static_cast<std::size_t>(i - 1)])
            dsum += v;
        const i64 cand = n_prime - doubled_sum - dsum;
        if (((cand % 8) + 8) % 8 == 1) {
            pick = i;
            m = cand;
            break;
        }
    }
    if (pick == 0)
        throw std::logic_error("transfer_beta_to_alpha: no block index matches mod 8");
    out.block_index = pick;
    out.seven_fifteen_m = m;

    const SearchOutcome c = seven_fifteen_partition(m, b);
    if (!c.found()) {
        out.error = "seven_fifteen_partition failed at m=" + std::to_string(m) +
                    (c.budget_exceeded() ? " (budget exceeded)" : " (proven absent)");
        return out;
    }

    std::vector<i64> parts = doubled;
    const auto& di = TransferTables::blocks()[static_cast<std::size_t>(pick - 1)];
    parts.insert(parts.end(), di.begin(), di.end());
    const auto& cp = c.witness->parts();
    parts.insert(parts.end(), cp.begin(), cp.end());
    Partition w(std::move(parts));
    if (w.total() != n_prime || !(w.recip() == out.alpha))
        throw std::logic_error("transfer_beta_to_alpha: witness failed self-check");
    out.ok = true;
    out.witness = std::move(w);
    return out;
}

} // namespace recipart::constructions
