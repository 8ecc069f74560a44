// recipart: exact search, construction, and verification of partitions
// with prescribed reciprocal sums. Exit codes: 0 success/found,
// 1 proven absent, 2 resource limit, 3 budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "recipart/bounds.hpp"
#include "recipart/cache.hpp"
#include "recipart/claims.hpp"
#include "recipart/constructions.hpp"
#include "recipart/dset.hpp"
#include "recipart/smoothness.hpp"

using namespace recipart;
using core::Constraints;
using core::Partition;
using core::Rational;
using nlohmann::json;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitAbsent = 1;
constexpr int kExitResource = 2;
constexpr int kExitBudget = 3;

struct ConstraintFlags {
    i64 min_part = 1;
    i64 forbid_multiples = 0;
    i64 smooth = 0;
    i64 powersmooth = 0;
    std::vector<i64> exclude;

    Constraints build() const {
        Constraints c;
        c.min_part = min_part;
        if (forbid_multiples) c.forbidden_modulus = forbid_multiples;
        if (smooth) c.smooth_bound = smooth;
        if (powersmooth) c.powersmooth_bound = powersmooth;
        c.excluded.insert(exclude.begin(), exclude.end());
        c.validate();
        return c;
    }
};

void add_constraint_flags(CLI::App* cmd, ConstraintFlags& f) {
    cmd->add_option("--min-part", f.min_part, "smallest allowed part (m-large)");
    cmd->add_option("--forbid-multiples", f.forbid_multiples,
                    "exclude parts divisible by M (M-free)");
    cmd->add_option("--smooth", f.smooth, "largest prime divisor bound");
    cmd->add_option("--powersmooth", f.powersmooth, "largest prime-power divisor bound");
    cmd->add_option("--exclude", f.exclude, "explicitly excluded parts");
}

void add_budget_flags(CLI::App* cmd, spectrum::SearchBudget& b) {
    cmd->add_option("--max-nodes", b.max_nodes, "search node budget");
    cmd->add_option("--max-seconds", b.max_seconds, "search time budget (0 = off)");
}

int status_code(const spectrum::SearchOutcome& oc) {
    switch (oc.status) {
        case spectrum::SearchStatus::Found: return kExitFound;
        case spectrum::SearchStatus::ProvenAbsent: return kExitAbsent;
        case spectrum::SearchStatus::BudgetExceeded: return kExitBudget;
    }
    return kExitBudget;
}

void print_outcome(const spectrum::SearchOutcome& oc, bool as_json) {
    if (as_json) {
        std::cout << cli::to_json(oc).dump(1, '\t') << "\n";
        return;
    }
    switch (oc.status) {
        case spectrum::SearchStatus::Found: {
            std::cout << "found:";
            for (i64 v : oc.witness->parts()) std::cout << " " << v;
            std::cout << "\n  sum " << oc.witness->total() << ", recip "
                      << oc.witness->recip() << ", " << oc.nodes << " nodes\n";
            break;
        }
        case spectrum::SearchStatus::ProvenAbsent:
            std::cout << "proven absent (" << oc.nodes << " nodes)\n";
            break;
        case spectrum::SearchStatus::BudgetExceeded:
            std::cout << "budget exceeded (" << oc.nodes << " nodes)\n";
            break;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partitions with prescribed reciprocal sums"};
    app.require_subcommand(1);

    cli::RunConfig cfg = cli::RunConfig::from_env();
    std::string cache_dir_flag;
    app.add_option("--cache-dir", cache_dir_flag, "result cache directory");
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    // ---- spectrum ----------------------------------------------------
    auto* sp = app.add_subcommand("spectrum", "all reciprocal sums B(n)");
    i64 sp_n = 0;
    ConstraintFlags sp_c;
    u64 sp_ceiling = 0;
    bool sp_no_cache = false;
    sp->add_option("n", sp_n, "the integer to partition")->required();
    add_constraint_flags(sp, sp_c);
    sp->add_option("--ceiling", sp_ceiling, "distinct-partition enumeration ceiling");
    sp->add_flag("--no-cache", sp_no_cache, "bypass the result cache");

    // ---- find ---------------------------------------------------------
    auto* fd = app.add_subcommand("find", "search for an alpha-partition of n");
    i64 fd_n = 0;
    std::string fd_alpha = "1";
    ConstraintFlags fd_c;
    spectrum::SearchBudget fd_b;
    fd->add_option("n", fd_n, "the integer to partition")->required();
    fd->add_option("--alpha", fd_alpha, "target reciprocal sum p/q")->required();
    add_constraint_flags(fd, fd_c);
    add_budget_flags(fd, fd_b);

    // ---- stable -------------------------------------------------------
    auto* st = app.add_subcommand("stable", "horizon approximation of the stable set A(n)");
    i64 st_n = 0, st_horizon = 0;
    ConstraintFlags st_c;
    spectrum::StableSetOptions st_opt;
    st->add_option("n", st_n, "base n")->required();
    st->add_option("horizon", st_horizon, "last n checked")->required();
    add_constraint_flags(st, st_c);
    st->add_option("--ceiling", st_opt.enum_limits.max_enumerated,
                   "total enumeration ceiling for the full-spectrum window");
    st->add_option("--target-candidates", st_opt.target_candidates,
                   "stop widening the window below this many candidates");
    add_budget_flags(st, st_opt.budget);

    // ---- empirical-N ----------------------------------------------------
    auto* en = app.add_subcommand("empirical-N", "horizon-bounded N(alpha, m)");
    std::string en_alpha = "1";
    i64 en_m = 1, en_horizon = 200;
    spectrum::SearchBudget en_b;
    en->add_option("--alpha", en_alpha, "target reciprocal sum")->required();
    en->add_option("--min-part", en_m, "the m of m-large");
    en->add_option("--horizon", en_horizon, "largest n checked")->required();
    add_budget_flags(en, en_b);

    // ---- sieve ----------------------------------------------------------
    auto* sv = app.add_subcommand("sieve", "smooth/powersmooth generation");
    std::string sv_kind = "smooth";
    i64 sv_limit = 0, sv_bound = 0, sv_mod = 0, sv_residue = 0, sv_lo = 0;
    i64 sv_chain_m = 0, sv_chain_stop = 1'000'000;
    sv->add_option("kind", sv_kind,
                   "one of: smooth, powersmooth, in-class, chain")->required();
    sv->add_option("--limit", sv_limit, "upper end of the range");
    sv->add_option("--bound", sv_bound, "smoothness bound x");
    sv->add_option("--lo", sv_lo, "lower end (exclusive) for in-class");
    sv->add_option("--modulus", sv_mod, "residue-class modulus");
    sv->add_option("--residue", sv_residue, "residue-class value");
    sv->add_option("--m", sv_chain_m, "chain parameter m (bound m^(1/12))");
    sv->add_option("--stop", sv_chain_stop, "chain stop value");

    // ---- bounds -----------------------------------------------------------
    auto* bd = app.add_subcommand("bounds", "growth-bound report (P, |B|, Q, envelope)");
    i64 bd_nmax = 0;
    i64 bd_spectrum_max = 100;
    bool bd_csv = false;
    bd->add_option("n_max", bd_nmax, "report rows for 1..n_max")->required();
    bd->add_option("--spectrum-max", bd_spectrum_max, "compute |B(n)| only up to this n");
    bd->add_flag("--csv", bd_csv, "CSV output");

    // ---- lower-bound --------------------------------------------------------
    auto* lb = app.add_subcommand("lower-bound",
                                  "residue coverage and hard numerators mod a prime");
    i64 lb_q = 0, lb_x = 0, lb_plo = 1, lb_phi = 0;
    lb->add_option("q", lb_q, "prime modulus")->required();
    lb->add_option("x", lb_x, "sum bound for the sets B'")->required();
    lb->add_option("--p-lo", lb_plo, "numerator interval start");
    lb->add_option("--p-hi", lb_phi, "numerator interval end (default q-1)");

    // ---- verify-claims ----------------------------------------------------
    auto* vc = app.add_subcommand("verify-claims", "tiered claim-verification suite");
    std::string vc_tier = "fast";
    std::string vc_report;
    vc->add_option("--tier", vc_tier, "fast | full | extended");
    vc->add_option("--report", vc_report, "write the JSON report to this file");

    // ---- construct ----------------------------------------------------------
    auto* ct = app.add_subcommand("construct", "run a constructive procedure");
    ct->require_subcommand(1);

    auto* ct_compose = ct->add_subcommand("compose", "M*B union C composition");
    std::vector<i64> cc_b, cc_c;
    i64 cc_m = 0;
    ct_compose->add_option("--b", cc_b, "parts of B")->required();
    ct_compose->add_option("--c", cc_c, "parts of C")->required();
    ct_compose->add_option("--m", cc_m, "the scale M")->required();

    auto* ct_split = ct->add_subcommand("split", "greedy balanced split");
    std::vector<i64> cs_a;
    i64 cs_k = 1;
    ct_split->add_option("--set", cs_a, "elements to distribute")->required();
    ct_split->add_option("--blocks", cs_k, "number of blocks")->required();

    auto* ct_smooth = ct->add_subcommand("three-smooth", "3-smooth 1-partition of n");
    i64 c3_n = 0;
    spectrum::SearchBudget c3_b;
    ct_smooth->add_option("n", c3_n)->required();
    add_budget_flags(ct_smooth, c3_b);

    auto* ct_dec = ct->add_subcommand("decompose", "alpha = beta/M + gamma split");
    std::string cd_alpha;
    i64 cd_modulus = 5;
    ct_dec->add_option("--alpha", cd_alpha)->required();
    ct_dec->add_option("--modulus", cd_modulus, "Lemma-5 modulus for alpha > 1");

    auto* ct_mfree = ct->add_subcommand("mfree", "M-free gamma-partition of n");
    i64 cm_n = 0, cm_gamma = 1, cm_modulus = 5;
    spectrum::SearchBudget cm_b;
    ct_mfree->add_option("n", cm_n)->required();
    ct_mfree->add_option("--gamma", cm_gamma)->required();
    ct_mfree->add_option("--modulus", cm_modulus);
    add_budget_flags(ct_mfree, cm_b);

    auto* ct_ff = ct->add_subcommand("five-free", "5-free 4/3^k-partition of n");
    i64 cf_n = 0, cf_k = 2;
    spectrum::SearchBudget cf_b;
    ct_ff->add_option("n", cf_n)->required();
    ct_ff->add_option("--k", cf_k)->required();
    add_budget_flags(ct_ff, cf_b);

    auto* ct_css = ct->add_subcommand("subset-sum", "complete-sequence subset sum");
    std::vector<i64> cq_x;
    i64 cq_t = 0;
    ct_css->add_option("--chain", cq_x, "complete sequence X")->required();
    ct_css->add_option("--target", cq_t, "target sum t")->required();

    auto* ct_sub = ct->add_subcommand("subset-spectrum", "all subset reciprocal sums");
    std::vector<i64> cu_s;
    ct_sub->add_option("--set", cu_s, "base set")->required();

    auto* ct_sf = ct->add_subcommand("seven-fifteen", "2-free 7/15-partition avoiding {1,3,5}");
    i64 c7_m = 0;
    spectrum::SearchBudget c7_b;
    ct_sf->add_option("m", c7_m)->required();
    add_budget_flags(ct_sf, c7_b);

    auto* ct_dset = ct->add_subcommand("dset-build", "Theorem-8 auxiliary set D");
    i64 cd_m = 0;
    std::string cd_a = "1", cd_eps = "1/4";
    bool cd_relaxed = false;
    i64 cd_chain_bound = 64, cd_interval_bound = 4096;
    ct_dset->add_option("--m", cd_m)->required();
    ct_dset->add_option("--alpha", cd_a);
    ct_dset->add_option("--eps0", cd_eps);
    ct_dset->add_flag("--relaxed", cd_relaxed, "use relaxed powersmooth bounds");
    ct_dset->add_option("--chain-bound", cd_chain_bound);
    ct_dset->add_option("--interval-bound", cd_interval_bound);

    auto* ct_asm = ct->add_subcommand("assemble", "m-large alpha-partition of n");
    i64 ca_n = 0, ca_m = 1;
    std::string ca_alpha = "1", ca_eps = "1/4";
    spectrum::SearchBudget ca_b;
    ct_asm->add_option("n", ca_n)->required();
    ct_asm->add_option("--alpha", ca_alpha);
    ct_asm->add_option("--m", ca_m);
    ct_asm->add_option("--eps0", ca_eps);
    add_budget_flags(ct_asm, ca_b);

    auto* ct_tr = ct->add_subcommand("transfer", "Lemma-11 transfer map");
    std::vector<i64> tr_b;
    i64 tr_np = 0;
    spectrum::SearchBudget tr_budget;
    ct_tr->add_option("--b", tr_b, "parts of the beta-partition B")->required();
    ct_tr->add_option("--n-prime", tr_np, "target n'")->required();
    add_budget_flags(ct_tr, tr_budget);

    CLI11_PARSE(app, argc, argv);
    if (!cache_dir_flag.empty()) cfg.cache_dir = cache_dir_flag;

    try {
        if (*sp) {
            spectrum::EnumLimits lim;
            if (sp_ceiling) lim.max_enumerated = sp_ceiling;
            const Constraints c = sp_c.build();
            std::set<Rational> result;
            if (sp_no_cache) {
                result = spectrum::spectrum(sp_n, c, lim);
            } else {
                cli::SpectrumCache cache(cfg.cache_dir);
                result = cli::cached_spectrum(sp_n, c, lim, cache);
            }
            if (as_json) {
                json j;
                j["n"] = sp_n;
                j["constraints"] = cli::to_json(c);
                j["complete"] = true;
                std::vector<std::string> strs;
                for (const auto& r : result) strs.push_back(r.to_string());
                j["recips"] = strs;
                std::cout << j.dump(1, '\t') << "\n";
            } else {
                for (const auto& r : result) std::cout << r << "\n";
            }
            return kExitFound;
        }
        if (*fd) {
            const auto oc = spectrum::exists_partition(
                fd_n, Rational::parse(fd_alpha), fd_c.build(), fd_b);
            print_outcome(oc, as_json);
            return status_code(oc);
        }
        if (*st) {
            const auto res =
                spectrum::stable_set_approx(st_n, st_horizon, st_c.build(), st_opt);
            if (as_json) {
                json j;
                j["base_n"] = res.base_n;
                j["window_end"] = res.window_end;
                j["horizon"] = res.horizon;
                j["stabilized"] = res.stabilized;
                j["count"] = res.survivors.size();
                json survivors = json::array();
                for (const auto& e : res.survivors) {
                    survivors.push_back(
                        {{"alpha", e.alpha.to_string()},
                         {"budget_flagged", e.budget_flagged}});
                }
                j["survivors"] = survivors;
                std::cout << j.dump(1, '\t') << "\n";
            } else {
                std::cout << res.survivors.size() << " candidates survive horizon "
                          << res.horizon << " (window [" << res.base_n << ", "
                          << res.window_end << "], "
                          << (res.stabilized ? "stabilized" : "budget-flagged")
                          << ")\n";
                for (const auto& e : res.survivors)
                    std::cout << e.alpha << (e.budget_flagged ? " [flagged]" : "")
                              << "\n";
            }
            return kExitFound;
        }
        if (*en) {
            const auto res = spectrum::empirical_N(Rational::parse(en_alpha), en_m,
                                                   en_horizon, en_b);
            if (as_json) {
                json j;
                j["horizon"] = res.horizon;
                j["budget_hit"] = res.budget_hit;
                if (res.threshold) j["threshold"] = *res.threshold;
                else j["threshold"] = nullptr;
                std::cout << j.dump(1, '\t') << "\n";
            } else if (res.threshold) {
                std::cout << "N = " << *res.threshold << " (horizon " << res.horizon
                          << ")\n";
            } else {
                std::cout << "unstable at horizon " << res.horizon
                          << (res.budget_hit ? " (budget hit)" : "") << "\n";
            }
            return res.threshold ? kExitFound : kExitBudget;
        }
        if (*sv) {
            if (sv_kind == "chain") {
                const auto chain =
                    sieves::doubling_powersmooth_chain(sv_chain_m, sv_chain_stop);
                if (as_json) {
                    json j;
                    j["bound"] = chain.bound;
                    j["values"] = chain.values;
                    j["power_of_two_prefix"] = chain.power_of_two_prefix;
                    j["stalled"] = chain.stalled;
                    j["slow_steps"] = chain.slow_steps;
                    std::cout << j.dump(1, '\t') << "\n";
                } else {
                    std::cout << "bound " << chain.bound << ":";
                    for (i64 v : chain.values) std::cout << " " << v;
                    std::cout << (chain.stalled ? " (stalled)" : "") << "\n";
                }
                return kExitFound;
            }
            std::vector<i64> values;
            if (sv_kind == "smooth")
                values = sieves::smooth_numbers(sv_limit, sv_bound).values;
            else if (sv_kind == "powersmooth")
                values = sieves::powersmooth_numbers(sv_limit, sv_bound).values;
            else if (sv_kind == "in-class")
                values = sieves::powersmooth_in_class(sv_lo, sv_limit, sv_bound,
                                                      sv_mod, sv_residue);
            else
                throw CLI::ValidationError("sieve", "unknown kind " + sv_kind);
            if (as_json) {
                std::cout << json(values).dump() << "\n";
            } else {
                for (i64 v : values) std::cout << v << "\n";
            }
            return kExitFound;
        }
        if (*bd) {
            bounds::BoundReportOptions opt;
            opt.spectrum_max_n = bd_spectrum_max;
            const auto rows = bounds::bound_report(bd_nmax, opt);
            if (bd_csv) {
                std::cout << "n,P,B_size,Q,envelope_lo,envelope_hi\n";
                for (const auto& r : rows) {
                    std::cout << r.n << "," << r.p_count.get_str() << ",";
                    if (r.spectrum_size) std::cout << *r.spectrum_size;
                    std::cout << "," << r.q_count.get_str() << ","
                              << r.upper_envelope.lo.to_string() << ","
                              << r.upper_envelope.hi.to_string() << "\n";
                }
            } else if (as_json) {
                json arr = json::array();
                for (const auto& r : rows) {
                    json j;
                    j["n"] = r.n;
                    j["P"] = r.p_count.get_str();
                    j["Q"] = r.q_count.get_str();
                    if (r.spectrum_size) j["B_size"] = *r.spectrum_size;
                    else j["B_size"] = nullptr;
                    j["envelope_lo"] = r.upper_envelope.lo.to_string();
                    j["envelope_hi"] = r.upper_envelope.hi.to_string();
                    arr.push_back(j);
                }
                std::cout << arr.dump(1, '\t') << "\n";
            } else {
                for (const auto& r : rows) {
                    std::cout << "n=" << r.n << " P=" << r.p_count.get_str();
                    if (r.spectrum_size) std::cout << " |B|=" << *r.spectrum_size;
                    std::cout << " Q=" << r.q_count.get_str() << " envelope=("
                              << r.upper_envelope.lo.to_double() << ", "
                              << r.upper_envelope.hi.to_double() << ")\n";
                }
            }
            return kExitFound;
        }
        if (*lb) {
            if (lb_phi == 0) lb_phi = lb_q - 1;
            const auto cov = bounds::residue_coverage(lb_q, lb_x);
            const auto hard = bounds::find_hard_numerator(lb_q, lb_x, lb_plo, lb_phi);
            if (as_json) {
                json j;
                j["q"] = cov.q;
                j["x"] = cov.x;
                j["covered"] = std::vector<i64>(cov.covered.begin(), cov.covered.end());
                if (hard) j["hard_numerator"] = *hard;
                else j["hard_numerator"] = nullptr;
                std::cout << j.dump(1, '\t') << "\n";
            } else {
                std::cout << "covered residues mod " << lb_q << " (x=" << lb_x
                          << "):";
                for (i64 r : cov.covered) std::cout << " " << r;
                std::cout << "\n";
                if (hard)
                    std::cout << "hard numerator: " << *hard << " (alpha = "
                              << *hard << "/" << lb_q << ")\n";
                else
                    std::cout << "no hard numerator in [" << lb_plo << ", "
                              << lb_phi << "]\n";
            }
            return hard ? kExitFound : kExitAbsent;
        }
        if (*vc) {
            const auto tier = cli::tier_from_name(vc_tier);
            if (!tier) throw CLI::ValidationError("verify-claims", "bad tier " + vc_tier);
            const auto results = claims::run_claims(*tier, &std::cout);
            json report = json::array();
            bool all_pass = true;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                report.push_back({{"id", r.id},
                                  {"name", r.name},
                                  {"tier", cli::tier_name(r.tier)},
                                  {"pass", r.pass},
                                  {"detail", r.detail},
                                  {"seconds", r.seconds}});
            }
            if (!vc_report.empty()) {
                std::ofstream out(vc_report);
                out << report.dump(1, '\t') << "\n";
            }
            if (as_json) std::cout << report.dump(1, '\t') << "\n";
            return all_pass ? kExitFound : kExitAbsent;
        }

        // construct subcommands
        if (*ct_compose) {
            const Partition out = constructions::compose_partitions(
                Partition(cc_b), Partition(cc_c), cc_m);
            std::cout << cli::to_json(out).dump(1, '\t') << "\n";
            return kExitFound;
        }
        if (*ct_split) {
            const auto split = constructions::greedy_balanced_split(cs_a, cs_k);
            json j = json::array();
            for (std::size_t i = 0; i < split.blocks.size(); ++i)
                j.push_back({{"block", split.blocks[i]},
                             {"recip", split.recips[i].to_string()}});
            std::cout << j.dump(1, '\t') << "\n";
            return kExitFound;
        }
        if (*ct_smooth) {
            const auto oc = constructions::three_smooth_one_partition(c3_n, c3_b);
            print_outcome(oc, as_json);
            return status_code(oc);
        }
        if (*ct_dec) {
            const auto d = constructions::decompose_alpha(Rational::parse(cd_alpha),
                                                          cd_modulus);
            json j;
            j["modulus"] = d.modulus;
            j["beta"] = d.beta.to_string();
            j["gamma"] = d.gamma.to_string();
            if (d.k) j["k"] = *d.k;
            std::cout << j.dump(1, '\t') << "\n";
            return kExitFound;
        }
        if (*ct_mfree) {
            const auto res =
                constructions::mfree_gamma_partition(cm_n, cm_gamma, cm_modulus, cm_b);
            print_outcome(res.outcome, as_json);
            return status_code(res.outcome);
        }
        if (*ct_ff) {
            const auto oc = constructions::five_free_four_over_3k(cf_n, cf_k, cf_b);
            print_outcome(oc, as_json);
            return status_code(oc);
        }
        if (*ct_css) {
            const auto sub = constructions::complete_subset_sum(cq_x, cq_t);
            std::cout << json(sub).dump() << "\n";
            return kExitFound;
        }
        if (*ct_sub) {
            const auto spec = constructions::subset_reciprocal_spectrum(cu_s);
            if (as_json) {
                std::vector<std::string> strs;
                for (const auto& r : spec) strs.push_back(r.to_string());
                std::cout << json(strs).dump(1, '\t') << "\n";
            } else {
                std::cout << spec.size() << " rationals\n";
                for (const auto& r : spec) std::cout << r << "\n";
            }
            return kExitFound;
        }
        if (*ct_sf) {
            const auto oc = constructions::seven_fifteen_partition(c7_m, c7_b);
            print_outcome(oc, as_json);
            return status_code(oc);
        }
        if (*ct_dset) {
            const Rational alpha = Rational::parse(cd_a);
            const Rational eps0 = Rational::parse(cd_eps);
            const auto res =
                cd_relaxed
                    ? constructions::build_dset_relaxed(cd_m, alpha, eps0,
                                                        cd_chain_bound,
                                                        cd_interval_bound)
                    : constructions::build_dset(cd_m, alpha, eps0);
            if (!res.dset) {
                std::cout << "construction failed: " << res.error << "\n";
                return kExitAbsent;
            }
            const auto report = constructions::verify_dset(*res.dset);
            json j;
            j["elements"] = res.dset->elements;
            j["anchor_k"] = res.dset->anchor_k;
            j["l1"] = res.dset->l1;
            j["l2"] = res.dset->l2;
            j["eps1"] = res.dset->eps1.to_string();
            j["recip_sum"] = report.recip_sum.to_string();
            j["all_powersmooth"] = report.all_powersmooth;
            j["residues_covered"] = report.residues_covered;
            j["products_injective"] = report.products_injective;
            j["element_sum"] = report.element_sum;
            std::cout << j.dump(1, '\t') << "\n";
            return report.assembly_ok() ? kExitFound : kExitAbsent;
        }
        if (*ct_asm) {
            const auto res = constructions::assemble_mlarge(
                ca_n, Rational::parse(ca_alpha), ca_m, Rational::parse(ca_eps), ca_b);
            for (const auto& stage : res.trace)
                std::cerr << "stage " << stage.name << ": "
                          << (stage.ok ? "ok" : "failed") << " (" << stage.detail
                          << ")\n";
            print_outcome(res.outcome, as_json);
            return status_code(res.outcome);
        }
        if (*ct_tr) {
            const auto res = constructions::transfer_beta_to_alpha(Partition(tr_b),
                                                                   tr_np, tr_budget);
            if (!res.ok) {
                std::cout << "construction failed: " << res.error << "\n";
                return kExitAbsent;
            }
            json j;
            j["alpha"] = res.alpha.to_string();
            j["witness"] = cli::to_json(*res.witness);
            j["block_index"] = res.block_index;
            j["seven_fifteen_m"] = res.seven_fifteen_m;
            std::cout << j.dump(1, '\t') << "\n";
            return kExitFound;
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitFound;
}
