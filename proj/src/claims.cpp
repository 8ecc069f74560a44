#include "recipart/claims.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "recipart/bounds.hpp"
#include "recipart/constructions.hpp"
#include "recipart/dset.hpp"
#include "recipart/naive.hpp"
#include "recipart/smoothness.hpp"

namespace recipart::claims {

using core::Constraints;
using core::Partition;
using core::Rational;
using spectrum::SearchBudget;
using spectrum::SearchOutcome;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct Checker {
    bool pass = true;
    std::ostringstream detail;
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& s) {
        if (detail.tellp() > 0) detail << "; ";
        detail << s;
    }
};

ClaimResult finish(int id, const char* name, cli::Tier tier, Checker& c,
                   std::chrono::steady_clock::time_point t0) {
    ClaimResult r;
    r.id = id;
    r.name = name;
    r.tier = tier;
    r.pass = c.pass;
    r.detail = c.detail.str();
    r.seconds = seconds_since(t0);
    return r;
}

} // namespace

ClaimResult claim_graham_slice() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    const SearchOutcome at77 = spectrum::exists_partition(77, Rational(1));
    c.expect(at77.proven_absent(), "n=77 not proven absent");
    for (i64 n = 78; n <= 150 && c.pass; ++n) {
        const SearchOutcome oc = spectrum::exists_partition(n, Rational(1));
        c.expect(oc.found(), "no 1-partition at n=" + std::to_string(n));
        if (oc.found())
            c.expect(oc.witness->total() == n && oc.witness->recip() == Rational(1),
                     "witness mismatch at n=" + std::to_string(n));
    }
    if (c.pass) c.note("77 absent, 78..150 found");
    return finish(1, "graham-slice", cli::Tier::Full, c, t0);
}

ClaimResult claim_transfer_tables() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    try {
        constructions::TransferTables::verify();
    } catch (const std::logic_error& e) {
        c.expect(false, e.what());
    }
    static constexpr std::array<i64, 8> expected_sums{1, 66, 11, 92, 37, 38, 31, 64};
    for (int i = 0; i < 8; ++i) {
        const auto& d = constructions::TransferTables::blocks()[static_cast<std::size_t>(i)];
        i64 sum = 0;
        for (i64 v : d) sum += v;
        c.expect(sum == expected_sums[static_cast<std::size_t>(i)],
                 "sum(D_" + std::to_string(i + 1) + ") != " +
                     std::to_string(expected_sums[static_cast<std::size_t>(i)]));
        c.expect(sum % 8 == (i + 1) % 8, "residue mismatch at D_" + std::to_string(i + 1));
        c.expect(core::reciprocal_sum(d) == Rational(1),
                 "recip(D_" + std::to_string(i + 1) + ") != 1");
    }
    if (c.pass) c.note("sums 1,66,11,92,37,38,31,64 with residues 1..7,0; recips all 1");
    return finish(2, "transfer-tables", cli::Tier::Fast, c, t0);
}

ClaimResult claim_subset_spectrum_158() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    const auto spec = constructions::subset_reciprocal_spectrum(
        constructions::TransferTables::half_set());
    c.expect(spec.size() == 158,
             "got " + std::to_string(spec.size()) + " rationals, expected 158");
    c.expect(spec.count(Rational(0)) == 1, "empty subset (0) missing");
    c.note("with empty subset: " + std::to_string(spec.size()) +
           ", without: " + std::to_string(spec.size() - spec.count(Rational(0))));
    return finish(3, "subset-spectrum-158", cli::Tier::Fast, c, t0);
}

ClaimResult claim_unit_fraction_identity() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    const Rational lhs = Rational(1, 21) + Rational(1, 28);
    const Rational rhs = Rational(1, 20) + Rational(1, 30);
    c.expect(lhs == Rational(1, 12), "1/21 + 1/28 != 1/12");
    c.expect(rhs == Rational(1, 12), "1/20 + 1/30 != 1/12");
    c.expect(core::reciprocal_sum(std::vector<i64>{20, 21, 28, 30}) == Rational(1, 6),
             "recip({20,21,28,30}) != 1/6");
    if (c.pass) c.note("1/21+1/28 = 1/20+1/30 = 1/12 exactly");
    return finish(4, "unit-fraction-identity", cli::Tier::Fast, c, t0);
}

ClaimResult claim_spectrum_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    std::vector<std::set<Rational>> oracle(41);
    for (i64 n = 1; n <= 40; ++n) {
        oracle[static_cast<std::size_t>(n)] = naive::spectrum(n);
        const auto engine = spectrum::spectrum(n);
        c.expect(engine == oracle[static_cast<std::size_t>(n)],
                 "spectrum mismatch at n=" + std::to_string(n));
        if (!c.pass) break;
    }

    std::mt19937_64 rng(20250809);
    std::uniform_int_distribution<i64> pick_n(1, 40);
    int agreements = 0;
    for (int trial = 0; trial < 500 && c.pass; ++trial) {
        const i64 n = pick_n(rng);
        const auto& spec = oracle[static_cast<std::size_t>(n)];
        Rational alpha;
        if (trial % 2 == 0 && !spec.empty()) {
            auto it = spec.begin();
            std::advance(it, static_cast<long>(rng() % spec.size()));
            alpha = *it;
        } else {
            const i64 q = 1 + static_cast<i64>(rng() % 60);
            const i64 p = 1 + static_cast<i64>(rng() % (4 * q));
            alpha = Rational(p, q);
        }
        const bool oracle_says = spec.count(alpha) > 0;
        const SearchOutcome oc = spectrum::exists_partition(n, alpha);
        c.expect(!oc.budget_exceeded(), "budget exceeded at small n");
        c.expect(oc.found() == oracle_says,
                 "disagreement at n=" + std::to_string(n) + ", alpha=" +
                     alpha.to_string());
        if (oc.found()) ++agreements;
    }
    if (c.pass)
        c.note("spectra equal for n<=40; 500 random checks agree (" +
               std::to_string(agreements) + " found)");
    return finish(5, "spectrum-oracle-equivalence", cli::Tier::Full, c, t0);
}

ClaimResult claim_growth_chain() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    const auto rows = bounds::bound_report(100);
    for (const auto& r : rows) {
        c.expect(r.spectrum_size.has_value(), "missing |B| at n=" + std::to_string(r.n));
        if (!r.spectrum_size) break;
        const mpz_class b(static_cast<unsigned long>(*r.spectrum_size));
        c.expect(r.p_count <= b, "P > |B| at n=" + std::to_string(r.n));
        c.expect(b <= r.q_count, "|B| > Q at n=" + std::to_string(r.n));
        // strict comparison against the lower end of the envelope
        c.expect(Rational(r.q_count, 1) < r.upper_envelope.lo,
                 "Q not below envelope at n=" + std::to_string(r.n));
        if (!c.pass) break;
    }
    if (c.pass) {
        const auto& last = rows.back();
        c.note("P(100)=" + last.p_count.get_str() + " <= |B(100)|=" +
               std::to_string(*last.spectrum_size) + " <= Q(100)=" +
               last.q_count.get_str() + " < envelope");
    }
    return finish(6, "growth-chain", cli::Tier::Full, c, t0);
}

ClaimResult claim_greedy_split() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    const auto base =
        constructions::greedy_balanced_split({1, 2, 3, 4, 5, 6}, 2);
    std::set<Rational> recips(base.recips.begin(), base.recips.end());
    c.expect(recips == std::set<Rational>{Rational(6, 5), Rational(5, 4)},
             "{1..6}, k=2 recips not {6/5, 5/4}");

    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 1000 && c.pass; ++trial) {
        const std::size_t size = 1 + rng() % 200;
        std::set<i64> vals;
        while (vals.size() < size) vals.insert(1 + static_cast<i64>(rng() % 1'000'000));
        const i64 k = 1 + static_cast<i64>(rng() % 8);
        const auto split = constructions::greedy_balanced_split(
            std::vector<i64>(vals.begin(), vals.end()), k);
        c.expect(split.spread() <= Rational(1),
                 "spread > 1 on trial " + std::to_string(trial));
        std::size_t total = 0;
        for (const auto& blk : split.blocks) total += blk.size();
        c.expect(total == vals.size(), "blocks lost elements");
    }
    if (c.pass) c.note("base instance exact; 1000 random instances spread <= 1");
    return finish(7, "greedy-split", cli::Tier::Fast, c, t0);
}

ClaimResult claim_complete_sequences() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200 && c.pass; ++trial) {
        std::vector<i64> x{1};
        while (x.back() < 64) {
            const i64 lo = x.back() + 1, hi = std::min<i64>(2 * x.back(), 64);
            if (lo > hi) break;
            x.push_back(lo + static_cast<i64>(rng() % (hi - lo + 1)));
            if (rng() % 5 == 0) break;
        }
        // brute subset-sum reachability as the cross-check
        const i64 top = 2 * x.back() - 1;
        std::vector<char> reach(static_cast<std::size_t>(top) + 1, 0);
        reach[0] = 1;
        for (i64 v : x)
            for (i64 s = top; s >= v; --s)
                if (reach[static_cast<std::size_t>(s - v)])
                    reach[static_cast<std::size_t>(s)] = 1;
        for (i64 t = 1; t <= top && c.pass; ++t) {
            c.expect(reach[static_cast<std::size_t>(t)],
                     "brute force misses t=" + std::to_string(t));
            const auto sub = constructions::complete_subset_sum(x, t);
            i64 sum = 0;
            for (i64 v : sub) sum += v;
            c.expect(sum == t, "greedy missed t=" + std::to_string(t));
        }
    }
    for (const auto& bad :
         {std::vector<i64>{2, 3}, std::vector<i64>{1, 3}, std::vector<i64>{1, 2, 2}}) {
        try {
            constructions::complete_subset_sum(bad, 1);
            c.expect(false, "invalid chain accepted");
        } catch (const std::invalid_argument&) {
        }
    }
    if (c.pass) c.note("200 random chains complete; invalid chains rejected");
    return finish(8, "complete-sequences", cli::Tier::Fast, c, t0);
}

ClaimResult claim_three_smooth_range() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    for (i64 n = 531; n <= 800 && c.pass; ++n) {
        const SearchOutcome oc = constructions::three_smooth_one_partition(n);
        c.expect(oc.found(), "no 3-smooth 1-partition at n=" + std::to_string(n));
        if (!oc.found()) break;
        c.expect(oc.witness->total() == n && oc.witness->recip() == Rational(1),
                 "witness sums wrong at n=" + std::to_string(n));
        for (i64 v : oc.witness->parts())
            c.expect(core::is_smooth(v, 3),
                     "non-3-smooth part at n=" + std::to_string(n));
    }
    if (c.pass) c.note("531..800 all found, witnesses 3-smooth with recip 1");
    return finish(9, "three-smooth-range", cli::Tier::Full, c, t0);
}

ClaimResult claim_stable_empty_65() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    spectrum::StableSetOptions opt;
    opt.target_candidates = 0;   // prefer wholesale elimination to the horizon
    const auto res = spectrum::stable_set_approx(65, 120, {}, opt);
    c.expect(res.survivors.empty(),
             std::to_string(res.survivors.size()) + " survivors at horizon 120");
    c.note("window end " + std::to_string(res.window_end) + ", horizon 120");
    return finish(10, "stable-empty-65", cli::Tier::Full, c, t0);
}

ClaimResult claim_stable_count_100() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    spectrum::StableSetOptions opt;
    opt.budget.max_nodes = 4'000'000;
    opt.budget.max_seconds = 0;
    const auto res = spectrum::stable_set_approx(100, 400, {}, opt);
    std::ostringstream meta;
    meta << "window [100," << res.window_end << "], horizon " << res.horizon
         << ", survivors " << res.survivors.size() << ", targeted searches "
         << res.targeted_searches << ", budget hits " << res.budget_hits;
    c.expect(res.survivors.size() == 4314,
             "survivor count " + std::to_string(res.survivors.size()) +
                 " != 4314 (" + meta.str() + ")");
    c.expect(res.stabilized, "stabilization flag not set (" + meta.str() + ")");
    if (res.survivors.size() > 4314) {
        std::ostringstream extras;
        extras << "extras sample:";
        for (std::size_t i = 4314; i < res.survivors.size() && i < 4319; ++i)
            extras << " " << res.survivors[i].alpha.to_string();
        c.note(extras.str());
    }
    if (c.pass) c.note(meta.str());
    return finish(11, "stable-count-100", cli::Tier::Extended, c, t0);
}

ClaimResult claim_lower_bound_pipeline() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    const i64 q = 101, x = 6;
    const auto p = bounds::find_hard_numerator(q, x, 1, 100);
    c.expect(p.has_value(), "no hard numerator found for q=101, x=6");
    if (!p) return finish(12, "lower-bound-pipeline", cli::Tier::Extended, c, t0);

    // independent exhaustive recheck of the defining property
    {
        std::set<i64> residues;
        std::vector<i64> parts;
        auto rec = [&](auto&& self, i64 smallest, i64 left, i64 res) -> void {
            residues.insert(res);
            for (i64 v = smallest; v <= left; ++v) {
                if (v % q == 0) continue;
                mpz_class inv;
                mpz_invert(inv.get_mpz_t(), mpz_class(static_cast<long>(v)).get_mpz_t(),
                           mpz_class(static_cast<long>(q)).get_mpz_t());
                self(self, v + 1, left - v,
                     (res + static_cast<i64>(inv.get_si())) % q);
            }
        };
        rec(rec, 1, x, 0);
        c.expect(!residues.count(*p % q),
                 "recheck found B' with matching residue for p=" + std::to_string(*p));
    }

    SearchBudget b;
    b.max_nodes = 200'000'000;
    b.max_seconds = 0;
    const Rational alpha(*p, q);
    for (i64 n = 1; n <= 707 && c.pass; ++n) {
        const SearchOutcome oc = spectrum::exists_partition(n, alpha, {}, b);
        c.expect(oc.proven_absent(),
                 "alpha=" + alpha.to_string() + " not proven absent at n=" +
                     std::to_string(n) +
                     (oc.budget_exceeded() ? " (budget exceeded)" : " (witness found)"));
    }
    if (c.pass)
        c.note("p=" + std::to_string(*p) + "; " + alpha.to_string() +
               " proven absent for all n <= 707");
    return finish(12, "lower-bound-pipeline", cli::Tier::Extended, c, t0);
}

ClaimResult claim_chain_properties() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;
    for (const i64 m : {i64{1} << 12, i64{1} << 24}) {
        const auto chain = sieves::doubling_powersmooth_chain(m, 1'000'000);
        c.expect(!chain.values.empty(), "empty chain");
        // independent scan: each step must be the largest powersmooth value
        for (std::size_t i = 1; i < chain.values.size(); ++i) {
            i64 best = 0;
            for (i64 v = 2 * chain.values[i - 1]; v > chain.values[i - 1]; --v)
                if (core::is_powersmooth(v, chain.bound)) { best = v; break; }
            c.expect(chain.values[i] == best,
                     "chain step not maximal at index " + std::to_string(i));
        }
        // ratio > 3/2 between consecutive post-prefix elements
        for (std::size_t i = chain.power_of_two_prefix + 1; i < chain.values.size(); ++i)
            c.expect(2 * chain.values[i] > 3 * chain.values[i - 1],
                     "slow step at m=" + std::to_string(m) + ", index " +
                         std::to_string(i));
        i64 sum = 0, top = 0;
        for (i64 v : chain.values) {
            sum += v;
            top = std::max(top, v);
        }
        c.expect(sum < 3 * top, "sum >= 3*max at m=" + std::to_string(m));
    }
    if (c.pass) c.note("m=2^12 and m=2^24 chains verified");
    return finish(13, "chain-properties", cli::Tier::Fast, c, t0);
}

ClaimResult claim_assembly_and_thresholds() {
    const auto t0 = std::chrono::steady_clock::now();
    Checker c;

    const auto verify_witness = [&](const constructions::AssembleResult& res, i64 n,
                                    const Rational& alpha, i64 m,
                                    const std::string& label) {
        if (!res.outcome.found()) return;
        const Partition& w = *res.outcome.witness;
        c.expect(w.total() == n, label + ": sum mismatch");
        c.expect(w.recip() == alpha, label + ": recip mismatch");
        c.expect(w.parts().front() >= m, label + ": part below m");
    };

    // small-m fallback instances
    for (const auto& [n, m] : {std::pair<i64, i64>{30, 2}, {50, 3}, {100, 2}}) {
        const auto res = constructions::assemble_mlarge(n, Rational(1), m,
                                                        Rational(1, 4));
        c.expect(res.outcome.found(),
                 "no witness at n=" + std::to_string(n) + ", m=" + std::to_string(m));
        verify_witness(res, n, Rational(1), m,
                       "n=" + std::to_string(n) + ",m=" + std::to_string(m));
    }

    // Theorem-8 assembly algebra on a hand-verified plan. The asymptotic
    // stages (powersmooth densities, Croot-style reciprocal mass) are out of
    // reach at desk sizes, so the full kB u (C1\{k}) u C2 u 21D1 u 28D1 u
    // 20D2 u 30D2 identity is exercised with a small anchor instead.
    {
        constructions::MlargePlan toy;
        toy.ok = true;
        toy.m = 2;
        toy.eps0 = Rational(1, 4);
        toy.anchor_k = 11;
        toy.dset.elements = {12, 13, 15, 19, 27};
        toy.dset.anchor_k = 11;
        toy.dset.m = 2;
        toy.dset.eps0 = Rational(1, 4);
        toy.dset.eps1 = Rational(1, 4);
        toy.c1 = {11};
        toy.i1_lo = toy.i1_hi = 11;
        toy.i2_lo = 12;
        toy.i2_hi = 11;   // empty interval, C2 = {}
        mpq_class rec12d(0);
        i64 dsum = 0;
        for (i64 v : toy.dset.elements) {
            rec12d += mpq_class(1, static_cast<long>(12 * v));
            dsum += v;
        }
        toy.alpha = Rational(1, 11) + Rational(mpq_class(rec12d));
        toy.beta = Rational(mpq_class(rec12d));
        toy.c2_target = Rational(0);
        toy.y_offset = 11 + 49 * dsum;
        toy.x_threshold = 76 * 11 + 11 + 50 * dsum;

        const auto report = constructions::verify_dset(toy.dset);
        c.expect(report.assembly_ok(), "toy D-set structural check failed");
        for (const i64 n : {toy.x_threshold + 1, toy.x_threshold + 859,
                            toy.x_threshold + 1504}) {
            const auto res = constructions::assemble_from_plan(n, toy);
            c.expect(res.outcome.found() && res.structured,
                     "assembly failed at n=" + std::to_string(n));
            verify_witness(res, n, toy.alpha, toy.m, "assembly");
            if (!res.outcome.found()) continue;
            // the witness's D-blocks contribute exactly recip(12 D):
            // 1/21 + 1/28 = 1/20 + 1/30 = 1/12 regardless of the D2 split
            mpq_class wsum(0);
            for (i64 v : toy.dset.elements) {
                const bool in_d2 =
                    std::find(res.residue_block.begin(), res.residue_block.end(),
                              v) != res.residue_block.end();
                wsum += mpq_class(1, static_cast<long>((in_d2 ? 20 : 21) * v));
                wsum += mpq_class(1, static_cast<long>((in_d2 ? 30 : 28) * v));
            }
            c.expect(wsum == rec12d, "D-block identity violated at n=" + std::to_string(n));
        }
    }

    // the literal pipeline is attempted and its stage trace recorded; the
    // asymptotic stages are expected to starve at this scale
    {
        SearchBudget b;
        b.max_nodes = 2'000'000;
        b.max_seconds = 0;
        const auto plan = constructions::plan_mlarge(Rational(1), 1 << 12,
                                                     Rational(3, 10), b);
        std::ostringstream trace;
        for (const auto& st : plan.trace)
            trace << " [" << st.name << (st.ok ? " ok" : " fail") << "]";
        c.note(std::string("m=2^12 pipeline ") +
               (plan.ok ? "completed" : "incomplete (expected at desk scale)") +
               ":" + trace.str());
    }

    // empirical thresholds with the asymptotic ratio as a diagnostic
    for (const i64 m : {1, 2, 3}) {
        const auto res = spectrum::empirical_N(Rational(1), m, 400);
        c.expect(!res.unstable(), "empirical N unstable at m=" + std::to_string(m));
        if (res.unstable()) continue;
        if (m == 1)
            c.expect(*res.threshold == 78,
                     "N(1) = " + std::to_string(*res.threshold) + ", expected 78");
        const double scale = 0.5 * (std::exp(2.0) - 1.0) *
                             static_cast<double>(m) * static_cast<double>(m);
        std::ostringstream line;
        line << "N(1," << m << ")=" << *res.threshold << " ratio "
             << static_cast<double>(*res.threshold) / scale;
        c.note(line.str());
    }
    return finish(14, "assembly-and-thresholds", cli::Tier::Full, c, t0);
}

std::vector<ClaimResult> run_claims(cli::Tier max_tier, std::ostream* progress) {
    using Fn = ClaimResult (*)();
    struct Entry {
        Fn fn;
        cli::Tier tier;
    };
    static const std::array<Entry, 14> claims{{
        {claim_graham_slice, cli::Tier::Full},
        {claim_transfer_tables, cli::Tier::Fast},
        {claim_subset_spectrum_158, cli::Tier::Fast},
        {claim_unit_fraction_identity, cli::Tier::Fast},
        {claim_spectrum_oracle, cli::Tier::Full},
        {claim_growth_chain, cli::Tier::Full},
        {claim_greedy_split, cli::Tier::Fast},
        {claim_complete_sequences, cli::Tier::Fast},
        {claim_three_smooth_range, cli::Tier::Full},
        {claim_stable_empty_65, cli::Tier::Full},
        {claim_stable_count_100, cli::Tier::Extended},
        {claim_lower_bound_pipeline, cli::Tier::Extended},
        {claim_chain_properties, cli::Tier::Fast},
        {claim_assembly_and_thresholds, cli::Tier::Full},
    }};
    std::vector<ClaimResult> out;
    for (const Entry& e : claims) {
        if (static_cast<int>(e.tier) > static_cast<int>(max_tier)) continue;
        ClaimResult r = e.fn();
        if (progress)
            (*progress) << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id
                        << " (" << r.name << ", " << cli::tier_name(r.tier)
                        << " tier, " << r.seconds << "s)"
                        << (r.detail.empty() ? "" : ": " + r.detail) << "\n"
                        << std::flush;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace recipart::claims
