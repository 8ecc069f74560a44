#pragma once

/// The auxiliary set D of the m-large assembly: a doubling powersmooth
/// chain scaled by (k+1) plus interval-sourced elements coprime to 210,
/// whose subset sums cover every residue class mod the anchor k. Includes
/// the seven-property verification report and the full witness assembly
///   A = kB u (C1 \ {k}) u C2 u 21*D1 u 28*D1 u 20*D2 u 30*D2.

#include <optional>
#include <string>

#include "recipart/search.hpp"
#include "recipart/sieves.hpp"

namespace recipart::constructions {

using core::Partition;
using core::Rational;
using spectrum::SearchBudget;
using spectrum::SearchOutcome;

struct DSet {
    std::vector<i64> elements;   // ascending distinct
    i64 anchor_k = 0;
    i64 l1 = 0;                  // chain-sourced element count
    i64 l2 = 0;                  // interval-sourced element count
    Rational eps0;
    Rational eps1;               // e_l1 / k
    i64 m = 0;
};

struct DSetReport {
    // 1. reciprocal smallness (diagnostic; the scale is asymptotic)
    Rational recip_sum;
    double smallness_scale = 0;   // (log log m)/log m
    // 2. powersmoothness against the literal bound m^(1/6)
    bool all_powersmooth = false;
    i64 powersmooth_bound = 0;
    std::vector<i64> powersmooth_violations;
    // 3. subset sums cover every residue class mod k
    bool residues_covered = false;
    bool coverage_via_complete_sequence = false;   // greedy path vs DP fallback
    std::optional<i64> uncovered_residue;
    // 4./5. anchor comparisons
    bool all_above_anchor = false;
    bool none_divisible_by_anchor = false;
    // 6. products with {20,21,28,30} are injective
    bool products_injective = false;
    std::optional<std::array<i64, 4>> product_collision;   // d, x, d', x'
    // 7. sum size (diagnostic constant against eps0 * m^2)
    i64 element_sum = 0;
    Rational sum_scale;   // sum / (eps0 * m^2)

    /// The exact structural facts the assembly relies on (3,4,5,6).
    bool assembly_ok() const {
        return residues_covered && all_above_anchor && none_divisible_by_anchor &&
               products_injective;
    }
};

DSetReport verify_dset(const DSet& d);

struct DSetBuildResult {
    std::optional<DSet> dset;
    std::string error;              // names the failing stage or interval
    sieves::DoublingChain chain;    // diagnostic, even on failure
    i64 chain_bound = 0;            // powersmooth bound used for the chain
    i64 interval_bound = 0;         // powersmooth bound used for J_i elements
};

/// Theorem-8 D-set with the literal powersmooth bounds m^(1/12) (chain,
/// anchor) and m^(1/6) (intervals). At desk-scale m the required powersmooth
/// densities do not exist and the builder reports which stage starved.
DSetBuildResult build_dset(i64 m, const Rational& alpha, const Rational& eps0);

/// Same construction with explicit powersmooth bounds, to exercise the
/// machinery at reachable sizes.
DSetBuildResult build_dset_relaxed(i64 m, const Rational& alpha,
                                   const Rational& eps0, i64 chain_bound,
                                   i64 interval_bound);

/// Variant with a caller-chosen anchor (used by the assembly pipeline).
DSetBuildResult build_dset_with_anchor(i64 m, i64 anchor_k, const Rational& eps0,
                                       i64 chain_bound, i64 interval_bound);

struct AssembleOptions {
    bool allow_relaxed_powersmooth = true;
    i64 relaxed_chain_bound = 64;
    i64 relaxed_interval_bound = 4096;
    /// Denominator-smoothness bound for the C1 greedy (the desk substitute
    /// for the powersmooth-denominator guarantee); 0 = width of I2.
    i64 beta_smooth_bound = 0;
};

struct AssembleStage {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct MlargePlan {
    bool ok = false;
    std::vector<AssembleStage> trace;
    i64 m = 0;
    Rational alpha, eps0;
    i64 i1_lo = 0, i1_hi = 0;   // I1 = [i1_lo, i1_hi]
    i64 i2_lo = 0, i2_hi = 0;   // I2 = [i2_lo, i2_hi]
    i64 anchor_k = 0;
    DSet dset;
    DSetReport dset_report;
    std::vector<i64> c1;        // contains the anchor
    Rational beta;              // alpha - recip(C1)
    Rational c2_target;         // beta - recip(12 D)
    std::vector<i64> c2;
    i64 x_threshold = 0;        // X = 76k + sum I1 + sum I2 + 50 sum D
    i64 y_offset = 0;           // Y = sum C1 + sum C2 + 49 sum D
};

/// Stages a-f of the assembly: intervals, anchor, D-set, C1 greedy, C2
/// search. Valid for every n > x_threshold afterwards.
MlargePlan plan_mlarge(const Rational& alpha, i64 m, const Rational& eps0,
                       const SearchBudget& b = {}, const AssembleOptions& opt = {});

struct AssembleResult {
    SearchOutcome outcome;
    std::vector<AssembleStage> trace;
    bool structured = false;    // witness came from the Theorem-8 pipeline
    std::optional<MlargePlan> plan;
    std::vector<i64> residue_block;   // D2 chosen for this n
    i64 scaled_base = 0;        // n' = (n - Y + k - sum D2)/k
};

/// m-large alpha-partition of n. Runs the Theorem-8 pipeline (with relaxed
/// powersmooth fallbacks when allowed); on any stage failure falls back to
/// a direct search with min_part = m.
AssembleResult assemble_mlarge(i64 n, const Rational& alpha, i64 m,
                               const Rational& eps0, const SearchBudget& b = {},
                               const AssembleOptions& opt = {});

/// Same pipeline driven by an existing plan (no fallback; fails when the
/// plan is invalid for this n).
AssembleResult assemble_from_plan(i64 n, const MlargePlan& plan,
                                  const SearchBudget& b = {});

} // namespace recipart::constructions
