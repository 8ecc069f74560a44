#include "recipart/dset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "recipart/constructions.hpp"
#include "recipart/enclosure.hpp"
#include "recipart/smoothness.hpp"

namespace recipart::constructions {

using core::iroot;
using core::is_powersmooth;
using core::largest_prime_power_divisor;

namespace {

// Refiner for q * e^alpha with q rational: feeds floor_strictly_below.
auto scaled_exp_refiner(const Rational& q, const Rational& alpha) {
    return [q, alpha](const Rational& tol) {
        // relative tolerance small enough that the absolute width is <= tol
        Rational scale = q * Rational(8);
        i64 a_ceil = 1;
        {
            mpz_class c;
            mpz_cdiv_q(c.get_mpz_t(), alpha.num().get_mpz_t(), alpha.den().get_mpz_t());
            a_ceil = std::max<i64>(1, static_cast<i64>(c.get_si()));
        }
        for (i64 i = 0; i < a_ceil; ++i) scale *= Rational(4);   // 4^ceil(a) >= e^a
        const enclosure::Interval e = enclosure::exp_enclosure(alpha, tol / scale);
        return enclosure::Interval{q * e.lo, q * e.hi};
    };
}

/// Largest integer strictly below q * e^alpha.
i64 floor_below_exp(const Rational& q, const Rational& alpha) {
    return enclosure::floor_strictly_below(scaled_exp_refiner(q, alpha));
}

/// Certifies eps0 < min(1 - e^(-alpha), 1/3); throws on violation.
void check_eps0(const Rational& alpha, const Rational& eps0) {
    if (!eps0.is_positive() || !(eps0 < Rational(1, 3)))
        throw std::invalid_argument("eps0 must lie in (0, 1/3)");
    Rational tol(1, 1'000'000);
    for (int round = 0; round < 8; ++round) {
        const enclosure::Interval em = enclosure::exp_enclosure(-alpha, tol);
        if (eps0 < Rational(1) - em.hi) return;              // certified ok
        if (!(eps0 < Rational(1) - em.lo))                    // certified bad
            throw std::invalid_argument("eps0 must be < 1 - e^(-alpha)");
        tol = tol * Rational(1, 1000);
    }
    throw std::invalid_argument("eps0 too close to 1 - e^(-alpha) to certify");
}

} // namespace

DSetBuildResult build_dset_with_anchor(i64 m, i64 anchor_k, const Rational& eps0,
                                       i64 chain_bound, i64 interval_bound) {
    if (m < (1LL << 12))
        throw std::invalid_argument("build_dset: m must be >= 2^12");
    if (anchor_k < 2) throw std::invalid_argument("build_dset: anchor must be >= 2");
    if (!eps0.is_positive() || !(eps0 < Rational(1, 3)))
        throw std::invalid_argument("build_dset: eps0 must lie in (0, 1/3)");

    DSetBuildResult res;
    res.chain_bound = chain_bound;
    res.interval_bound = interval_bound;

    // chain until e reaches [eps0*k/2, eps0*k)
    const Rational half_target = eps0 * Rational(anchor_k) * Rational(1, 2);
    mpz_class stop_z;
    mpz_cdiv_q(stop_z.get_mpz_t(), half_target.num().get_mpz_t(),
               half_target.den().get_mpz_t());
    const i64 stop_at = static_cast<i64>(stop_z.get_si());
    if (stop_at < 2) {
        res.error = "eps0*k/2 below 2; no room for a chain";
        return res;
    }
    res.chain = sieves::doubling_chain_with_bound(chain_bound, stop_at);
    const i64 e_top = res.chain.values.back();
    if (res.chain.stalled && e_top < stop_at) {
        res.error = "chain stalled at " + std::to_string(e_top) +
                    " before reaching " + std::to_string(stop_at) +
                    " (powersmooth bound " + std::to_string(chain_bound) + ")";
        return res;
    }
    // e_top >= eps0*k/2 by the stop rule; enforce e_top < eps0*k
    const Rational eps1(e_top, anchor_k);
    if (!(eps1 < eps0)) {
        res.error = "chain overshot: e_l1 = " + std::to_string(e_top) +
                    " not below eps0*k";
        return res;
    }

    DSet d;
    d.anchor_k = anchor_k;
    d.m = m;
    d.eps0 = eps0;
    d.eps1 = eps1;
    d.l1 = static_cast<i64>(res.chain.values.size());
    for (i64 e : res.chain.values) d.elements.push_back(e * (anchor_k + 1));

    // l2 = floor(-log eps1 / log(4/3)): largest j with (4/3)^j <= k/e_l1
    i64 l2 = 0;
    {
        mpz_class four_pow = 1, three_pow = 1;
        while (true) {
            four_pow *= 4;
            three_pow *= 3;
            if (four_pow * e_top <= three_pow * anchor_k) ++l2;
            else break;
        }
    }
    d.l2 = l2;

    // interval elements: smallest candidate in each J_i coprime to 210
    mpz_class four_prev = 1, three_prev = 1;   // (4/3)^(i-1) as a pair
    for (i64 i = 1; i <= l2; ++i) {
        const mpz_class four_cur = four_prev * 4;
        const mpz_class three_cur = three_prev * 3;
        // J_i = (k + 4^(i-1) e / 3^(i-1), k + 4^i e / 3^i)
        mpz_class lo_q, hi_q;
        mpz_fdiv_q(lo_q.get_mpz_t(), mpz_class(four_prev * e_top).get_mpz_t(),
                   three_prev.get_mpz_t());
        mpz_cdiv_q(hi_q.get_mpz_t(), mpz_class(four_cur * e_top).get_mpz_t(),
                   three_cur.get_mpz_t());
        const i64 lo = anchor_k + static_cast<i64>(lo_q.get_si()) + 1;
        const i64 hi = anchor_k + static_cast<i64>(hi_q.get_si()) - 1;
        i64 found = 0;
        for (i64 v = lo; v <= hi; ++v) {
            if (std::gcd(v, static_cast<i64>(210)) != 1) continue;
            if (!is_powersmooth(v, interval_bound)) continue;
            found = v;
            break;
        }
        if (found == 0) {
            res.error = "no powersmooth candidate coprime to 210 in J_" +
                        std::to_string(i) + " = [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "] (bound " +
                        std::to_string(interval_bound) + ")";
            return res;
        }
        d.elements.push_back(found);
        four_prev = four_cur;
        three_prev = three_cur;
    }

    std::sort(d.elements.begin(), d.elements.end());
    if (std::adjacent_find(d.elements.begin(), d.elements.end()) !=
        d.elements.end()) {
        res.error = "duplicate element in D";
        return res;
    }
    res.dset = std::move(d);
    return res;
}

namespace {

i64 pick_anchor(i64 lo_excl, i64 hi_incl, i64 plus_one_bound,
                i64 lpp_bound /* 0 = unconstrained */) {
    for (i64 k = hi_incl; k > lo_excl; --k) {
        if (std::gcd(k, static_cast<i64>(210)) != 1) continue;
        if (!is_powersmooth(k + 1, plus_one_bound)) continue;
        if (lpp_bound > 0 && largest_prime_power_divisor(k) > lpp_bound) continue;
        return k;
    }
    return 0;
}

} // namespace

DSetBuildResult build_dset(i64 m, const Rational& alpha, const Rational& eps0) {
    if (!alpha.is_positive())
        throw std::invalid_argument("build_dset: alpha must be positive");
    check_eps0(alpha, eps0);
    const i64 chain_bound = std::max<i64>(2, iroot(m, 12));
    const i64 interval_bound = std::max<i64>(2, iroot(m, 6));
    const i64 hi = floor_below_exp(Rational(m), alpha);
    const i64 lo = floor_below_exp(Rational(m) * (Rational(1) - eps0), alpha);
    const i64 k = pick_anchor(lo, hi, chain_bound, 0);
    if (k == 0) {
        DSetBuildResult res;
        res.chain_bound = chain_bound;
        res.interval_bound = interval_bound;
        res.error = "no anchor k in (" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "] coprime to 210 with k+1 " +
                    std::to_string(chain_bound) + "-powersmooth";
        return res;
    }
    return build_dset_with_anchor(m, k, eps0, chain_bound, interval_bound);
}

DSetBuildResult build_dset_relaxed(i64 m, const Rational& alpha,
                                   const Rational& eps0, i64 chain_bound,
                                   i64 interval_bound) {
    if (!alpha.is_positive())
        throw std::invalid_argument("build_dset_relaxed: alpha must be positive");
    check_eps0(alpha, eps0);
    const i64 hi = floor_below_exp(Rational(m), alpha);
    const i64 lo = floor_below_exp(Rational(m) * (Rational(1) - eps0), alpha);
    const i64 k = pick_anchor(lo, hi, chain_bound, 0);
    if (k == 0) {
        DSetBuildResult res;
        res.chain_bound = chain_bound;
        res.interval_bound = interval_bound;
        res.error = "no anchor k in (" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "] under relaxed bound " +
                    std::to_string(chain_bound);
        return res;
    }
    return build_dset_with_anchor(m, k, eps0, chain_bound, interval_bound);
}

DSetReport verify_dset(const DSet& d) {
    if (d.anchor_k < 1 || d.m < 1)
        throw std::invalid_argument("verify_dset: anchor and m must be positive");
    DSetReport r;
    const i64 k = d.anchor_k;

    r.recip_sum = core::reciprocal_sum(d.elements);
    const double lm = d.m < 3 ? 1.0 : std::log(static_cast<double>(d.m));
    const double llm = lm < std::exp(1.0) ? 1.0 : std::log(lm);
    r.smallness_scale = llm / lm;

    r.powersmooth_bound = std::max<i64>(2, iroot(d.m, 6));
    r.all_powersmooth = true;
    for (i64 v : d.elements) {
        if (!is_powersmooth(v, r.powersmooth_bound)) {
            r.all_powersmooth = false;
            r.powersmooth_violations.push_back(v);
        }
    }

    r.all_above_anchor = std::all_of(d.elements.begin(), d.elements.end(),
                                     [&](i64 v) { return v > k; });
    r.none_divisible_by_anchor = std::all_of(d.elements.begin(), d.elements.end(),
                                             [&](i64 v) { return v % k != 0; });

    // residue coverage mod k via the complete-sequence route when the reduced
    // residues form a doubling chain; DP reachability otherwise
    std::vector<i64> x;
    for (i64 v : d.elements) x.push_back(v % k);
    std::sort(x.begin(), x.end());
    bool chain_ok = k >= 2 && !x.empty() && x.front() == 1 && 2 * x.back() - 1 >= k;
    for (std::size_t i = 1; chain_ok && i < x.size(); ++i)
        chain_ok = x[i] > x[i - 1] && x[i] <= 2 * x[i - 1];
    if (chain_ok) {
        r.coverage_via_complete_sequence = true;
        r.residues_covered = true;
        for (i64 a = 1; a <= k; ++a) {
            const std::vector<i64> sub = complete_subset_sum(x, a);
            i64 s = 0;
            for (i64 v : sub) s += v;
            if (s != a) {
                r.residues_covered = false;
                r.uncovered_residue = a % k;
                break;
            }
        }
    } else {
        std::vector<char> reach(static_cast<std::size_t>(k), 0);
        reach[0] = 1;
        for (i64 v : d.elements) {
            const i64 rv = v % k;
            std::vector<char> next = reach;
            for (i64 a = 0; a < k; ++a)
                if (reach[static_cast<std::size_t>(a)])
                    next[static_cast<std::size_t>((a + rv) % k)] = 1;
            reach = std::move(next);
        }
        r.residues_covered = true;
        for (i64 a = 0; a < k; ++a) {
            if (!reach[static_cast<std::size_t>(a)]) {
                r.residues_covered = false;
                r.uncovered_residue = a;
                break;
            }
        }
    }

    // products d*x with x in {20,21,28,30} must be pairwise distinct
    static constexpr std::array<i64, 4> mults{20, 21, 28, 30};
    r.products_injective = true;
    std::vector<std::pair<i64, std::pair<i64, i64>>> prods;
    for (i64 v : d.elements)
        for (i64 mu : mults) prods.push_back({v * mu, {v, mu}});
    std::sort(prods.begin(), prods.end());
    for (std::size_t i = 1; i < prods.size(); ++i) {
        if (prods[i].first == prods[i - 1].first) {
            r.products_injective = false;
            r.product_collision = {prods[i - 1].second.first, prods[i - 1].second.second,
                                   prods[i].second.first, prods[i].second.second};
            break;
        }
    }

    r.element_sum = 0;
    for (i64 v : d.elements) r.element_sum += v;
    const Rational denom = d.eps0 * Rational(d.m) * Rational(d.m);
    r.sum_scale = denom.is_positive() ? Rational(r.element_sum) / denom : Rational(0);
    return r;
}

namespace {

Rational recip_of_range(i64 lo, i64 hi) {
    mpq_class acc(0);
    for (i64 v = lo; v <= hi; ++v) acc += mpq_class(1, static_cast<long>(v));
    return Rational(acc);
}

Rational twelve_d_recip(const DSet& d) {
    mpq_class acc(0);
    for (i64 v : d.elements) acc += mpq_class(1, static_cast<long>(12 * v));
    return Rational(acc);
}

/// Subset of D with element sum = a (mod k), via the complete-sequence
/// greedy on the reduced residues when they form a doubling chain, DP
/// reconstruction otherwise. a = 0 returns the empty set.
std::vector<i64> pick_residue_block(const DSet& d, i64 a) {
    const i64 k = d.anchor_k;
    a = ((a % k) + k) % k;
    if (a == 0) return {};
    std::vector<std::pair<i64, i64>> xs;   // (residue, element)
    for (i64 v : d.elements) xs.push_back({v % k, v});
    std::sort(xs.begin(), xs.end());
    bool chain_ok = xs.front().first == 1 && 2 * xs.back().first - 1 >= k;
    for (std::size_t i = 1; chain_ok && i < xs.size(); ++i)
        chain_ok = xs[i].first > xs[i - 1].first && xs[i].first <= 2 * xs[i - 1].first;
    if (chain_ok) {
        std::vector<i64> residues;
        for (const auto& [r, v] : xs) residues.push_back(r);
        const std::vector<i64> sub = complete_subset_sum(residues, a);
        std::vector<i64> out;
        std::size_t pos = 0;
        for (i64 r : sub) {
            while (xs[pos].first != r) ++pos;   // sub is ascending within residues
            out.push_back(xs[pos].second);
            ++pos;
        }
        return out;
    }
    // DP over residues with predecessor reconstruction
    const std::size_t K = xs.size();
    std::vector<std::vector<char>> reach(K + 1, std::vector<char>(static_cast<std::size_t>(k), 0));
    reach[0][0] = 1;
    for (std::size_t i = 0; i < K; ++i) {
        const i64 rv = xs[i].first;
        for (i64 r = 0; r < k; ++r)
            if (reach[i][static_cast<std::size_t>(r)]) {
                reach[i + 1][static_cast<std::size_t>(r)] = 1;
                reach[i + 1][static_cast<std::size_t>((r + rv) % k)] = 1;
            }
    }
    if (!reach[K][static_cast<std::size_t>(a)])
        throw std::logic_error("pick_residue_block: residue unreachable");
    std::vector<i64> out;
    i64 r = a;
    for (std::size_t i = K; i-- > 0;) {
        if (reach[i][static_cast<std::size_t>(r)]) continue;   // element i unused
        out.push_back(xs[i].second);
        r = ((r - xs[i].first) % k + k) % k;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

MlargePlan plan_mlarge(const Rational& alpha, i64 m, const Rational& eps0,
                       const SearchBudget& b, const AssembleOptions& opt) {
    MlargePlan plan;
    plan.m = m;
    plan.alpha = alpha;
    plan.eps0 = eps0;
    auto stage = [&](const std::string& name, bool ok, std::string detail) {
        plan.trace.push_back({name, ok, std::move(detail)});
        return ok;
    };

    if (!alpha.is_positive())
        throw std::invalid_argument("plan_mlarge: alpha must be positive");
    try {
        check_eps0(alpha, eps0);
    } catch (const std::invalid_argument& e) {
        stage("eps0", false, e.what());
        return plan;
    }
    stage("eps0", true, "certified 0 < eps0 < min(1 - e^-alpha, 1/3)");

    if (m < (1LL << 12)) {
        stage("intervals", false, "m below 2^12; no powersmooth chain possible");
        return plan;
    }

    // I1 = integers in (m, m e^alpha), I2 = integers in (m e^alpha, (1+eps0) m e^alpha)
    plan.i1_lo = m + 1;
    plan.i1_hi = floor_below_exp(Rational(m), alpha);
    plan.i2_lo = plan.i1_hi + 1;
    plan.i2_hi = floor_below_exp(Rational(m) * (Rational(1) + eps0), alpha);
    if (plan.i1_hi < plan.i1_lo || plan.i2_hi < plan.i2_lo) {
        stage("intervals", false, "interval empty at this m");
        return plan;
    }
    stage("intervals", true,
          "I1=[" + std::to_string(plan.i1_lo) + "," + std::to_string(plan.i1_hi) +
              "] I2=[" + std::to_string(plan.i2_lo) + "," +
              std::to_string(plan.i2_hi) + "]");

    // every prime power <= width/2 has at least two multiples inside I2,
    // which keeps each denominator corner of the C2 target adjustable
    const i64 width2 = plan.i2_hi - plan.i2_lo + 1;
    const i64 beta_bound =
        opt.beta_smooth_bound > 0 ? opt.beta_smooth_bound : width2 / 2;

    // anchor k in ((1-eps0) m e^alpha, m e^alpha): coprime to 210, k+1
    // powersmooth, and (desk substitute for the powersmooth-denominator
    // guarantee) k itself within the beta smoothness bound
    const i64 k_lo = floor_below_exp(Rational(m) * (Rational(1) - eps0), alpha);
    const i64 literal_bound = std::max<i64>(2, iroot(m, 12));
    i64 chain_bound = literal_bound;
    i64 k = pick_anchor(k_lo, plan.i1_hi, chain_bound, beta_bound);
    if (k == 0 && opt.allow_relaxed_powersmooth) {
        chain_bound = opt.relaxed_chain_bound;
        k = pick_anchor(k_lo, plan.i1_hi, chain_bound, beta_bound);
    }
    if (!stage("anchor", k != 0,
               k != 0 ? "k=" + std::to_string(k) +
                            (chain_bound == literal_bound
                                 ? " (literal bound)"
                                 : " (relaxed bound " + std::to_string(chain_bound) + ")")
                      : "no anchor in (" + std::to_string(k_lo) + ", " +
                            std::to_string(plan.i1_hi) + "]"))
        return plan;
    plan.anchor_k = k;

    // D-set
    i64 interval_bound = std::max<i64>(2, iroot(m, 6));
    DSetBuildResult dr = build_dset_with_anchor(m, k, eps0, chain_bound, interval_bound);
    if (!dr.dset && opt.allow_relaxed_powersmooth) {
        interval_bound = std::min(opt.relaxed_interval_bound, beta_bound);
        dr = build_dset_with_anchor(m, k, eps0, chain_bound, interval_bound);
    }
    if (!stage("dset", dr.dset.has_value(),
               dr.dset ? std::to_string(dr.dset->elements.size()) + " elements (l1=" +
                             std::to_string(dr.dset->l1) + ", l2=" +
                             std::to_string(dr.dset->l2) + ")"
                       : dr.error))
        return plan;
    plan.dset = *dr.dset;
    plan.dset_report = verify_dset(plan.dset);
    if (!stage("dset-verify", plan.dset_report.assembly_ok(),
               plan.dset_report.assembly_ok()
                   ? std::string("structural properties verified") +
                         (plan.dset_report.all_powersmooth
                              ? " (literal powersmoothness holds)"
                              : " (literal powersmoothness relaxed)")
                   : "structural property failed"))
        return plan;

    // C1: keep the beta-smooth part of I1 (plus the anchor). The smoothness
    // filter is the desk substitute for the powersmooth-denominator
    // guarantee: every prime power left in beta's denominator has several
    // multiples inside I2, so the C2 stage keeps room to manoeuvre.
    const Rational rec12d = twelve_d_recip(plan.dset);
    mpq_class c1_recip(0);
    std::vector<i64> c1;
    std::vector<i64> droppable;   // ascending smooth elements (not k)
    for (i64 v = plan.i1_lo; v <= plan.i1_hi; ++v) {
        const bool smooth_enough = largest_prime_power_divisor(v) <= beta_bound;
        if (v == k || smooth_enough) {
            c1.push_back(v);
            c1_recip += mpq_class(1, static_cast<long>(v));
            if (v != k) droppable.push_back(v);
        }
    }
    const Rational cap2 = recip_of_range(plan.i2_lo, plan.i2_hi);
    const Rational min_unit(1, plan.i2_hi);
    const Rational beta0 = alpha - Rational(mpq_class(c1_recip));
    if (!stage("c1", beta0 - rec12d <= cap2 - min_unit,
               "beta=" + beta0.to_string() + " vs I2 capacity " + cap2.to_string() +
                   " (smooth bound " + std::to_string(beta_bound) + ", |C1| = " +
                   std::to_string(c1.size()) + ")"))
        return plan;

    // C2 = I2 minus a drop set T2 with recip(T2) = capacity - (beta - rec12d).
    // The drop-set view keeps the search guided: every prime power the
    // target's denominator owes is supplied by forced picks among the few
    // multiples available in I2. Dropping further C1 elements shifts the
    // target, so absence at one shift retries at the next.
    std::vector<i64> i2_values;
    for (i64 v = plan.i2_lo; v <= plan.i2_hi; ++v) i2_values.push_back(v);
    spectrum::RecipSubsetSearch t2_engine(i2_values);
    bool c2_done = false;
    Rational beta = beta0;
    std::string c2_note;
    const std::size_t max_shifts = std::min<std::size_t>(droppable.size(), 24);
    for (std::size_t drops = 0; drops <= max_shifts; ++drops) {
        const Rational sigma = cap2 - (beta - rec12d);
        if (sigma.is_negative()) break;   // beta overshot the interval capacity
        if (!(sigma > cap2)) {            // target nonnegative: try this shift
            if (sigma.is_zero()) {
                plan.c2 = i2_values;      // T2 empty: take the whole interval
                c2_done = true;
                c2_note = "T2 empty after " + std::to_string(drops) + " drops";
                break;
            }
            SearchBudget tb = b;
            tb.max_nodes = std::min<u64>(b.max_nodes, 2'000'000);
            const SearchOutcome t2 = t2_engine.find(sigma, tb);
            if (t2.found()) {
                const auto& drop = t2.witness->parts();
                for (i64 v : i2_values)
                    if (!std::binary_search(drop.begin(), drop.end(), v))
                        plan.c2.push_back(v);
                c2_done = true;
                c2_note = "|T2| = " + std::to_string(drop.size()) + " after " +
                          std::to_string(drops) + " C1 shifts, " +
                          std::to_string(t2.nodes) + " nodes";
                break;
            }
        }
        if (drops == max_shifts) break;
        const i64 v = droppable[drops];
        c1.erase(std::find(c1.begin(), c1.end(), v));
        beta += Rational(1, v);
    }
    plan.beta = beta;
    plan.c2_target = beta - rec12d;
    if (!stage("c2", c2_done, c2_done ? c2_note : "no drop set found for any shift"))
        return plan;
    plan.c1 = c1;

    i64 sum_i1 = 0, sum_i2 = 0, sum_d = 0, sum_c1 = 0, sum_c2 = 0;
    for (i64 v = plan.i1_lo; v <= plan.i1_hi; ++v) sum_i1 += v;
    for (i64 v = plan.i2_lo; v <= plan.i2_hi; ++v) sum_i2 += v;
    for (i64 v : plan.dset.elements) sum_d += v;
    for (i64 v : plan.c1) sum_c1 += v;
    for (i64 v : plan.c2) sum_c2 += v;
    plan.x_threshold = 76 * k + sum_i1 + sum_i2 + 50 * sum_d;
    plan.y_offset = sum_c1 + sum_c2 + 49 * sum_d;
    plan.ok = true;
    stage("plan", true, "X=" + std::to_string(plan.x_threshold));
    return plan;
}

AssembleResult assemble_from_plan(i64 n, const MlargePlan& plan,
                                  const SearchBudget& b) {
    AssembleResult res;
    res.plan = plan;
    auto stage = [&](const std::string& name, bool ok, std::string detail) {
        res.trace.push_back({name, ok, std::move(detail)});
        return ok;
    };
    if (!plan.ok) {
        stage("plan", false, "plan invalid");
        res.outcome.status = spectrum::SearchStatus::BudgetExceeded;
        return res;
    }
    if (n <= plan.x_threshold) {
        stage("threshold", false,
              "n <= X = " + std::to_string(plan.x_threshold));
        res.outcome.status = spectrum::SearchStatus::BudgetExceeded;
        return res;
    }

    const i64 k = plan.anchor_k;
    const i64 a = ((n - plan.y_offset) % k + k) % k;
    res.residue_block = pick_residue_block(plan.dset, a);
    i64 sum_d2 = 0;
    for (i64 v : res.residue_block) sum_d2 += v;
    const i64 numer = n - plan.y_offset + k - sum_d2;
    if (numer % k != 0) {
        stage("residue", false, "n' not integral");
        res.outcome.status = spectrum::SearchStatus::BudgetExceeded;
        return res;
    }
    const i64 n_base = numer / k;
    res.scaled_base = n_base;
    stage("residue", true,
          "|D2|=" + std::to_string(res.residue_block.size()) +
              ", n'=" + std::to_string(n_base));

    // B: 1-partition of n'
    SearchOutcome bsearch;
    if (n_base >= 531) {
        bsearch = three_smooth_one_partition(n_base, b);
    } else if (n_base >= 1) {
        bsearch = spectrum::exists_partition(n_base, Rational(1), {}, b);
    }
    if (!stage("base", bsearch.found(),
               bsearch.found() ? "1-partition of n' with " +
                                     std::to_string(bsearch.witness->size()) + " parts"
                               : "no 1-partition of n'")) {
        res.outcome.status = bsearch.status;
        return res;
    }

    std::vector<i64> parts;
    for (i64 v : bsearch.witness->parts()) parts.push_back(k * v);
    for (i64 v : plan.c1)
        if (v != k) parts.push_back(v);
    for (i64 v : plan.c2) parts.push_back(v);
    std::vector<i64> d1 = plan.dset.elements;
    for (i64 v : res.residue_block)
        d1.erase(std::find(d1.begin(), d1.end(), v));
    for (i64 v : d1) {
        parts.push_back(21 * v);
        parts.push_back(28 * v);
    }
    for (i64 v : res.residue_block) {
        parts.push_back(20 * v);
        parts.push_back(30 * v);
    }

    try {
        Partition w(std::move(parts));
        const bool sums_ok = (w.total() == n) && (w.recip() == plan.alpha) &&
                             (w.parts().front() >= plan.m);
        if (!stage("verify", sums_ok,
                   "sum=" + std::to_string(w.total()) +
                       ", recip=" + w.recip().to_string() +
                       ", min part=" + std::to_string(w.parts().front()))) {
            res.outcome.status = spectrum::SearchStatus::BudgetExceeded;
            return res;
        }
        res.outcome.status = spectrum::SearchStatus::Found;
        res.outcome.witness = std::move(w);
        res.structured = true;
    } catch (const std::invalid_argument& e) {
        stage("verify", false, std::string("overlap: ") + e.what());
        res.outcome.status = spectrum::SearchStatus::BudgetExceeded;
    }
    return res;
}

AssembleResult assemble_mlarge(i64 n, const Rational& alpha, i64 m,
                               const Rational& eps0, const SearchBudget& b,
                               const AssembleOptions& opt) {
    if (n < 1) throw std::invalid_argument("assemble_mlarge: n must be >= 1");
    if (m < 1) throw std::invalid_argument("assemble_mlarge: m must be >= 1");
    if (!alpha.is_positive())
        throw std::invalid_argument("assemble_mlarge: alpha must be positive");

    AssembleResult res;
    bool pipeline_viable = m >= (1LL << 12);
    if (pipeline_viable) {
        MlargePlan plan;
        try {
            plan = plan_mlarge(alpha, m, eps0, b, opt);
        } catch (const std::invalid_argument& e) {
            res.trace.push_back({"plan", false, e.what()});
            pipeline_viable = false;
        }
        if (pipeline_viable) {
            res.trace.insert(res.trace.end(), plan.trace.begin(), plan.trace.end());
            if (plan.ok && n > plan.x_threshold) {
                AssembleResult inner = assemble_from_plan(n, plan, b);
                inner.trace.insert(inner.trace.begin(), res.trace.begin(),
                                   res.trace.end());
                if (inner.outcome.found()) return inner;
                res.trace = std::move(inner.trace);
            } else if (plan.ok) {
                res.trace.push_back({"threshold", false,
                                     "n <= X = " + std::to_string(plan.x_threshold)});
            }
        }
    } else {
        res.trace.push_back({"plan", false, "m below 2^12; pipeline skipped"});
    }

    // fallback: direct m-large search (desk-scale n only)
    constexpr i64 kDirectLimit = 10'000'000;
    if (n > kDirectLimit) {
        res.trace.push_back({"fallback", false,
                             "n beyond direct-search range; no witness"});
        res.outcome.status = spectrum::SearchStatus::BudgetExceeded;
        return res;
    }
    Constraints c;
    c.min_part = m;
    res.outcome = spectrum::exists_partition(n, alpha, c, b);
    res.trace.push_back({"fallback", res.outcome.found(),
                         res.outcome.found() ? "direct search witness"
                                             : "direct search exhausted or out of budget"});
    return res;
}

} // namespace recipart::constructions
