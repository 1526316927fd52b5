//! Runnable verification targets for every catalogued claim.
//!
//! Each target compares an independent enumeration (the census layer)
//! against a closed form (the series layer), or sweeps an inequality, over
//! declared finite ranges, and produces a [`VerificationReport`]. The two
//! routes never share code: census results come from streaming partitions,
//! series results from exact q-series arithmetic, so agreement is real
//! evidence and disagreement pinpoints a bug or a false claim.
//!
//! Targets for proven statements report `Verified` on exhaustive agreement.
//! Open-ended targets (the crossover table and the two conjecture scans)
//! are structurally limited to `EvidenceOnly` or `Violated` — a finite
//! sweep cannot establish them, and the code does not pretend otherwise.
//!
//! Every target is tied to one or more claim labels from [`CLAIM_CATALOG`];
//! a unit test asserts the catalog is fully covered, so a claim cannot
//! silently drop out of the suite.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num::{BigInt, BigRational, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bivariate::BivariateSeries;
use crate::census::{
    census_refined, census_total, crossover_scan, hook_product_census, weighted_census, Bound,
    Side, Weight,
};
use crate::error::Error;
use crate::genfun;
use crate::partition::{count_one_part_tripled, PartitionClass};
use crate::report::{Status, VerificationReport, Violation};
use crate::series::TruncatedSeries;
use crate::sylvester::{check_injection, enumerate_distinct_pairs, enumerate_odd_pairs};

/// Claim labels the suite is required to exercise. The completeness test in
/// this module fails if any label is left without a target.
pub const CLAIM_CATALOG: &[&str] = &[
    "T1.1", "T1.2", "Cor1.3", "Conj1.4", "P1.5", "P1.6", "P1.7", "P1.8", "T2.1", "T2.2", "T2.3",
    "T2.4", "T2.5", "Rem2.3", "Conj2.6", "Cor2.7", "Cor2.8", "T2.9", "Eq3.1", "Prop3.1", "Lem3.1",
    "Eq3.6", "Lem3.2", "Euler336", "Conj4.1",
];

/// A verification target, named by the claim id it reproduces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// `P1.5`: unbounded 2-hook totals over odd partitions vs their series.
    UnboundedHook2Odd,
    /// `P1.6`: unbounded 2-hook totals over distinct partitions.
    UnboundedHook2Distinct,
    /// `P1.7`: unbounded 3-hook totals over odd partitions.
    UnboundedHook3Odd,
    /// `P1.8`: unbounded 3-hook totals over distinct partitions.
    UnboundedHook3Distinct,
    /// `Cor1.3`: the 1-hook gap equals the one-part-tripled count.
    SingleHookGap,
    /// `Ntable`: crossover sizes for hook lengths 2..10.
    CrossoverTable,
    /// `T2.1`: bounded 2-hook totals over odd partitions vs their series.
    BoundedHook2Odd,
    /// `T2.2`: bounded 2-hook totals over distinct partitions, both routes.
    BoundedHook2Distinct,
    /// `T2.3`: the bounded (and unbounded) hook-count bias inequalities.
    HookBiasSweep,
    /// `T2.4`: bounded pair-weighted totals over odd partitions.
    BoundedPairsOdd,
    /// `T2.5`: bounded pair-weighted totals over distinct partitions.
    BoundedPairsDistinct,
    /// `Rem2.3`: the rational middle term is a non-negative polynomial.
    MiddleTermPolynomial,
    /// `Cor2.7`: unbounded pair-weighted totals over odd partitions.
    UnboundedPairsOdd,
    /// `Cor2.8`: unbounded pair-weighted totals over distinct partitions.
    UnboundedPairsDistinct,
    /// `T2.9`: the unbounded pair-weighted gap equals its closed form.
    PairGapClosedForm,
    /// `Eq3.1`: marker-refined odd-side series vs the refined census.
    RefinedOdd,
    /// `Prop3.1`: marker-refined distinct-side series vs the refined census.
    RefinedDistinct,
    /// `Lem3.1`: box partitions weighted by distinct part sizes.
    BoxSizesWeighted,
    /// `Eq3.6`: the three-piece split of the 2-hook gap and its pair sets.
    PairFamilySplit,
    /// `Lem3.2`: the pair-set injection, checked exhaustively.
    PairInjection,
    /// `Euler336`: finite triangle-sum identities.
    TriangleIdentity,
    /// `NO-z`: hook-squared product census vs the power-product series.
    HookSquareProduct,
    /// Every target above, in catalog order, plus both conjecture scans.
    All,
}

impl Target {
    /// The individual targets, in catalog order (`All` excluded).
    pub const ALL: [Target; 22] = [
        Target::UnboundedHook2Odd,
        Target::UnboundedHook2Distinct,
        Target::UnboundedHook3Odd,
        Target::UnboundedHook3Distinct,
        Target::SingleHookGap,
        Target::CrossoverTable,
        Target::BoundedHook2Odd,
        Target::BoundedHook2Distinct,
        Target::HookBiasSweep,
        Target::BoundedPairsOdd,
        Target::BoundedPairsDistinct,
        Target::MiddleTermPolynomial,
        Target::UnboundedPairsOdd,
        Target::UnboundedPairsDistinct,
        Target::PairGapClosedForm,
        Target::RefinedOdd,
        Target::RefinedDistinct,
        Target::BoxSizesWeighted,
        Target::PairFamilySplit,
        Target::PairInjection,
        Target::TriangleIdentity,
        Target::HookSquareProduct,
    ];

    /// The id used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            Target::UnboundedHook2Odd => "P1.5",
            Target::UnboundedHook2Distinct => "P1.6",
            Target::UnboundedHook3Odd => "P1.7",
            Target::UnboundedHook3Distinct => "P1.8",
            Target::SingleHookGap => "Cor1.3",
            Target::CrossoverTable => "Ntable",
            Target::BoundedHook2Odd => "T2.1",
            Target::BoundedHook2Distinct => "T2.2",
            Target::HookBiasSweep => "T2.3",
            Target::BoundedPairsOdd => "T2.4",
            Target::BoundedPairsDistinct => "T2.5",
            Target::MiddleTermPolynomial => "Rem2.3",
            Target::UnboundedPairsOdd => "Cor2.7",
            Target::UnboundedPairsDistinct => "Cor2.8",
            Target::PairGapClosedForm => "T2.9",
            Target::RefinedOdd => "Eq3.1",
            Target::RefinedDistinct => "Prop3.1",
            Target::BoxSizesWeighted => "Lem3.1",
            Target::PairFamilySplit => "Eq3.6",
            Target::PairInjection => "Lem3.2",
            Target::TriangleIdentity => "Euler336",
            Target::HookSquareProduct => "NO-z",
            Target::All => "all",
        }
    }

    /// Claim labels this target exercises.
    pub fn claims(self) -> &'static [&'static str] {
        match self {
            Target::UnboundedHook2Odd => &["P1.5"],
            Target::UnboundedHook2Distinct => &["P1.6"],
            Target::UnboundedHook3Odd => &["P1.7"],
            Target::UnboundedHook3Distinct => &["P1.8"],
            Target::SingleHookGap => &["Cor1.3"],
            Target::CrossoverTable => &["Conj1.4"],
            Target::BoundedHook2Odd => &["T2.1"],
            Target::BoundedHook2Distinct => &["T2.2"],
            // The sweep covers both the bounded inequality and its
            // unbounded specialization.
            Target::HookBiasSweep => &["T2.3", "T1.2"],
            Target::BoundedPairsOdd => &["T2.4"],
            Target::BoundedPairsDistinct => &["T2.5"],
            Target::MiddleTermPolynomial => &["Rem2.3"],
            Target::UnboundedPairsOdd => &["Cor2.7"],
            Target::UnboundedPairsDistinct => &["Cor2.8"],
            Target::PairGapClosedForm => &["T2.9"],
            Target::RefinedOdd => &["Eq3.1"],
            Target::RefinedDistinct => &["Prop3.1"],
            Target::BoxSizesWeighted => &["Lem3.1"],
            Target::PairFamilySplit => &["Eq3.6"],
            Target::PairInjection => &["Lem3.2"],
            Target::TriangleIdentity => &["Euler336"],
            Target::HookSquareProduct => &["T1.1"],
            Target::All => &[],
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "all" {
            return Ok(Target::All);
        }
        Target::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownName(format!("verification target {s:?}")))
    }
}

/// An inequality scan over an open conjecture. Kept apart from [`Target`]
/// because scans can never report `Verified`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanTarget {
    /// `C2.6`: pair-weighted totals favor the odd side at every bound.
    WeightedBias,
    /// `C4.1`: the conjectured coefficientwise dominance at every bound.
    Dominance,
}

impl ScanTarget {
    pub fn id(self) -> &'static str {
        match self {
            ScanTarget::WeightedBias => "C2.6",
            ScanTarget::Dominance => "C4.1",
        }
    }

    pub fn claims(self) -> &'static [&'static str] {
        match self {
            ScanTarget::WeightedBias => &["Conj2.6"],
            ScanTarget::Dominance => &["Conj4.1"],
        }
    }
}

impl fmt::Display for ScanTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ScanTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "C2.6" => Ok(ScanTarget::WeightedBias),
            "C4.1" => Ok(ScanTarget::Dominance),
            _ => Err(Error::UnknownName(format!("scan target {s:?}"))),
        }
    }
}

/// Range overrides applied on top of each target's defaults. `n_max` also
/// stands in for the series truncation where a target has one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub l_max: Option<u32>,
    pub n_max: Option<u64>,
}

impl Overrides {
    fn l(&self, default: u32) -> u32 {
        self.l_max.unwrap_or(default)
    }

    fn n(&self, default: u64) -> u64 {
        self.n_max.unwrap_or(default)
    }
}

/// Runs one target (or, for [`Target::All`], the whole suite including both
/// conjecture scans) and returns the reports in catalog order.
pub fn run(target: Target, ov: &Overrides) -> Vec<VerificationReport> {
    match target {
        Target::All => run_all(ov),
        single => vec![run_single(single, ov)],
    }
}

/// Runs the full suite: all individual targets plus both conjecture scans.
pub fn run_all(ov: &Overrides) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> =
        Target::ALL.iter().map(|&t| run_single(t, ov)).collect();
    reports.push(scan(ScanTarget::WeightedBias, ov));
    reports.push(scan(ScanTarget::Dominance, ov));
    reports
}

fn run_single(target: Target, ov: &Overrides) -> VerificationReport {
    let start = Instant::now();
    let mut report = match target {
        Target::UnboundedHook2Odd => {
            unbounded_count(target, Side::Odd, 2, genfun::hook2_count_odd_inf, ov)
        }
        Target::UnboundedHook2Distinct => {
            unbounded_count(target, Side::Distinct, 2, genfun::hook2_count_distinct_inf, ov)
        }
        Target::UnboundedHook3Odd => {
            unbounded_count(target, Side::Odd, 3, genfun::hook3_count_odd_inf, ov)
        }
        Target::UnboundedHook3Distinct => {
            unbounded_count(target, Side::Distinct, 3, genfun::hook3_count_distinct_inf, ov)
        }
        Target::SingleHookGap => single_hook_gap(ov),
        Target::CrossoverTable => crossover_table(ov),
        Target::BoundedHook2Odd => {
            bounded_count(target, Side::Odd, &[genfun::hook2_count_odd], ov)
        }
        Target::BoundedHook2Distinct => bounded_count(
            target,
            Side::Distinct,
            &[genfun::hook2_count_distinct, genfun::hook2_count_distinct_triangle],
            ov,
        ),
        Target::HookBiasSweep => hook_bias_sweep(ov),
        Target::BoundedPairsOdd => bounded_pairs(
            target,
            Side::Odd,
            &[genfun::hook2_pairs_odd, genfun::hook2_pairs_odd_derivative],
            ov,
        ),
        Target::BoundedPairsDistinct => bounded_pairs(
            target,
            Side::Distinct,
            &[genfun::hook2_pairs_distinct, genfun::hook2_pairs_distinct_triangle],
            ov,
        ),
        Target::MiddleTermPolynomial => middle_term_polynomial(ov),
        Target::UnboundedPairsOdd => {
            unbounded_pairs(target, Side::Odd, genfun::hook2_pairs_odd_inf, ov)
        }
        Target::UnboundedPairsDistinct => {
            unbounded_pairs(target, Side::Distinct, genfun::hook2_pairs_distinct_inf, ov)
        }
        Target::PairGapClosedForm => pair_gap_closed_form(ov),
        Target::RefinedOdd => refined_count(target, Side::Odd, genfun::refined_hook2_odd, ov),
        Target::RefinedDistinct => {
            refined_count(target, Side::Distinct, genfun::refined_hook2_distinct, ov)
        }
        Target::BoxSizesWeighted => box_sizes_weighted(ov),
        Target::PairFamilySplit => pair_family_split(ov),
        Target::PairInjection => pair_injection(ov),
        Target::TriangleIdentity => triangle_identity(ov),
        Target::HookSquareProduct => hook_square_product(ov),
        Target::All => unreachable!("run_single is never called with All"),
    };
    report.elapsed = start.elapsed();
    report
}

/// Runs one conjecture scan. The result is never `Verified`.
pub fn scan(target: ScanTarget, ov: &Overrides) -> VerificationReport {
    let start = Instant::now();
    let l_max = ov.l(10);
    let n_max = ov.n(120) as usize;
    let params = json!({"L_max": l_max, "n_max": n_max});
    let sides: Vec<(u32, TruncatedSeries, TruncatedSeries)> = (1..=l_max)
        .into_par_iter()
        .map(|l| {
            let (lhs, rhs) = match target {
                ScanTarget::WeightedBias => {
                    (genfun::hook2_pairs_odd(l, n_max), genfun::hook2_pairs_distinct(l, n_max))
                }
                ScanTarget::Dominance => {
                    (genfun::dominance_lhs(l, n_max), genfun::dominance_rhs(l, n_max))
                }
            };
            (l, lhs, rhs)
        })
        .collect();
    let mut min_margin: Option<(BigRational, u32, usize)> = None;
    let mut violation = None;
    for (l, lhs, rhs) in &sides {
        let diff = lhs - rhs;
        if let Some((n, _)) = diff.first_negative() {
            violation = Some(Violation::at_coeff(*l, n, lhs.coeff(n), rhs.coeff(n)));
            break;
        }
        for (n, c) in diff.iter() {
            if min_margin.as_ref().map_or(true, |(m, _, _)| c < m) {
                min_margin = Some((c.clone(), *l, n));
            }
        }
    }
    let mut report = match violation {
        Some(v) => VerificationReport::violated(target.id(), params, v, Value::Null),
        None => {
            let details = match &min_margin {
                Some((m, l, n)) => {
                    json!({"violations": 0, "min_margin": m.to_string(), "at": {"L": l, "n": n}})
                }
                None => json!({"violations": 0}),
            };
            VerificationReport::evidence_only(target.id(), params, details)
        }
    };
    debug_assert_ne!(report.status, Status::Verified, "scans must never claim verification");
    report.elapsed = start.elapsed();
    report
}

// ---------------------------------------------------------------------------
// shared comparison helpers

fn big(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// First index where a census table and a series disagree.
fn counts_vs_series(
    l: impl Into<Option<u32>> + Copy,
    counts: &[u64],
    series: &TruncatedSeries,
) -> Option<Violation> {
    let top = counts.len().min(series.trunc() + 1);
    (0..top).find_map(|n| {
        let expected = big(counts[n]);
        if series.coeff(n) != &expected {
            Some(Violation::new(l.into(), n as u64, counts[n], series.coeff(n)))
        } else {
            None
        }
    })
}

/// First coefficient where two series disagree.
fn series_vs_series(
    l: impl Into<Option<u32>>,
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
) -> Option<Violation> {
    lhs.first_difference(rhs).map(|(n, a, b)| Violation::at_coeff(l, n, &a, &b))
}

/// First marker/coefficient where two bivariate series disagree, as a
/// violation at the q-exponent plus the offending marker power.
fn bivariate_vs_bivariate(
    l: u32,
    lhs: &BivariateSeries,
    rhs: &BivariateSeries,
) -> Option<(u32, Violation)> {
    let top = lhs.max_marker().max(rhs.max_marker());
    (0..=top).find_map(|m| {
        series_vs_series(l, &lhs.extract_marker(m), &rhs.extract_marker(m)).map(|v| (m, v))
    })
}

fn exact_i64(r: &BigRational) -> i64 {
    debug_assert!(r.is_integer());
    r.to_integer().to_i64().expect("margin fits in i64")
}

// ---------------------------------------------------------------------------
// individual targets

/// Census totals for hooks of length `t` over an unbounded family vs the
/// closed-form series.
fn unbounded_count(
    target: Target,
    side: Side,
    t: u64,
    gf: fn(usize) -> TruncatedSeries,
    ov: &Overrides,
) -> VerificationReport {
    let n_max = ov.n(40);
    let params = json!({"N": n_max});
    let table = census_total(side, t, Bound::Unbounded, n_max);
    let series = gf(n_max as usize);
    match counts_vs_series(None, &table.values, &series) {
        Some(v) => VerificationReport::violated(target.id(), params, v, Value::Null),
        None => VerificationReport::verified(
            target.id(),
            params,
            json!({"coefficients_checked": n_max + 1}),
        ),
    }
}

/// Census totals for 2-hooks over a bounded family vs every closed-form
/// route, for bounds `1..=L_max` and the stabilized bound `N + 1`.
fn bounded_count(
    target: Target,
    side: Side,
    routes: &[fn(u32, usize) -> TruncatedSeries],
    ov: &Overrides,
) -> VerificationReport {
    let l_max = ov.l(8);
    let n_max = ov.n(40);
    let params = json!({"L_max": l_max, "extra_L": n_max + 1, "N": n_max});
    let mut bounds: Vec<u32> = (1..=l_max).collect();
    bounds.push(n_max as u32 + 1);
    let first = bounds
        .par_iter()
        .map(|&l| {
            let table = census_total(side, 2, Bound::Finite(l), n_max);
            routes.iter().find_map(|gf| {
                counts_vs_series(l, &table.values, &gf(l, n_max as usize))
            })
        })
        .find_map_first(|v| v);
    match first {
        Some(v) => VerificationReport::violated(target.id(), params, v, Value::Null),
        None => VerificationReport::verified(
            target.id(),
            params,
            json!({"bounds_checked": bounds.len(), "routes": routes.len()}),
        ),
    }
}

/// Pair-weighted census (`C(m,2)` per partition with `m` 2-hooks) over a
/// bounded family vs every closed-form route.
fn bounded_pairs(
    target: Target,
    side: Side,
    routes: &[fn(u32, usize) -> TruncatedSeries],
    ov: &Overrides,
) -> VerificationReport {
    let l_max = ov.l(6);
    let n_max = ov.n(25);
    let params = json!({"L_max": l_max, "N": n_max});
    let first = (1..=l_max)
        .into_par_iter()
        .map(|l| {
            let counts = weighted_census(side, 2, Bound::Finite(l), n_max, Weight::ChooseTwo);
            routes.iter().find_map(|gf| counts_vs_series(l, &counts, &gf(l, n_max as usize)))
        })
        .find_map_first(|v| v);
    match first {
        Some(v) => VerificationReport::violated(target.id(), params, v, Value::Null),
        None => VerificationReport::verified(
            target.id(),
            params,
            json!({"bounds_checked": l_max, "routes": routes.len()}),
        ),
    }
}

/// Pair-weighted census over an unbounded family vs its closed form.
fn unbounded_pairs(
    target: Target,
    side: Side,
    gf: fn(usize) -> TruncatedSeries,
    ov: &Overrides,
) -> VerificationReport {
    let n_max = ov.n(25);
    let params = json!({"N": n_max});
    let counts = weighted_census(side, 2, Bound::Unbounded, n_max, Weight::ChooseTwo);
    match counts_vs_series(None, &counts, &gf(n_max as usize)) {
        Some(v) => VerificationReport::violated(target.id(), params, v, Value::Null),
        None => VerificationReport::verified(
            target.id(),
            params,
            json!({"coefficients_checked": n_max + 1}),
        ),
    }
}

/// The 1-hook census gap: parts of distinct partitions minus distinct part
/// sizes of odd partitions equals the count of partitions with exactly one
/// part value tripled.
fn single_hook_gap(ov: &Overrides) -> VerificationReport {
    let n_max = ov.n(50);
    let params = json!({"n_max": n_max});
    let odd = census_total(Side::Odd, 1, Bound::Unbounded, n_max);
    let distinct = census_total(Side::Distinct, 1, Bound::Unbounded, n_max);
    let sizes: Vec<u64> = (0..=n_max).collect();
    let tripled: Vec<u64> = sizes.par_iter().map(|&n| count_one_part_tripled(n)).collect();
    let witness = (0..=n_max as usize).find_map(|n| {
        let gap = distinct.values[n] as i64 - odd.values[n] as i64;
        if gap != tripled[n] as i64 {
            Some(Violation::new(None, n as u64, gap, tripled[n]))
        } else {
            None
        }
    });
    match witness {
        Some(v) => VerificationReport::violated("Cor1.3", params, v, Value::Null),
        None => {
            VerificationReport::verified("Cor1.3", params, json!({"sizes_checked": n_max + 1}))
        }
    }
}

/// Crossover candidates for hook lengths 2..10 against the reference table.
/// The largest size with a strict distinct-side surplus is reported per
/// hook length (0 when there is none, as for length 2). Evidence-only: the
/// absence of crossings beyond `n_max` is not decidable by a finite sweep.
fn crossover_table(ov: &Overrides) -> VerificationReport {
    const REFERENCE: [u64; 9] = [0, 7, 8, 18, 16, 34, 34, 56, 59];
    let n_max = ov.n(100);
    let params = json!({"t_lo": 2, "t_hi": 10, "n_max": n_max});
    let rows = crossover_scan(2, 10, n_max);
    let candidates: Vec<u64> = rows.iter().map(|r| r.candidate.unwrap_or(0)).collect();
    // The reference values are only meaningful when the sweep reaches them.
    if n_max < 100 {
        return VerificationReport::evidence_only(
            "Ntable",
            params,
            json!({"candidates": candidates, "reference_comparison": "skipped (n_max < 100)"}),
        );
    }
    let mismatch = rows.iter().zip(REFERENCE).find(|(row, expected)| {
        row.candidate.unwrap_or(0) != *expected
    });
    match mismatch {
        // The witness column carries the hook length, not a partition size.
        Some((row, expected)) => VerificationReport::violated(
            "Ntable",
            params,
            Violation::new(None, row.t, row.candidate.map_or(0, |c| c), expected),
            json!({"witness_field_n_holds": "t", "candidates": candidates}),
        ),
        None => VerificationReport::evidence_only(
            "Ntable",
            params,
            json!({"candidates": candidates, "matches_reference": true}),
        ),
    }
}

/// Coefficientwise bias sweep: the odd side has at least as many 2-hooks as
/// the distinct side at every bound, and the unbounded families obey the
/// same inequality for length 2 everywhere and length 3 beyond size 7.
fn hook_bias_sweep(ov: &Overrides) -> VerificationReport {
    let l_max = ov.l(10);
    let n_max = ov.n(120) as usize;
    let params = json!({"L_max": l_max, "n_max": n_max});
    let bounded_first = (1..=l_max)
        .into_par_iter()
        .map(|l| {
            let a = genfun::hook2_count_odd(l, n_max);
            let b = genfun::hook2_count_distinct(l, n_max);
            (&a - &b).first_negative().map(|(n, _)| Violation::at_coeff(l, n, a.coeff(n), b.coeff(n)))
        })
        .find_map_first(|v| v);
    if let Some(v) = bounded_first {
        return VerificationReport::violated("T2.3", params, v, Value::Null);
    }
    let a2 = genfun::hook2_count_odd_inf(n_max);
    let b2 = genfun::hook2_count_distinct_inf(n_max);
    if let Some((n, _)) = (&a2 - &b2).first_negative() {
        let v = Violation::at_coeff(None, n, a2.coeff(n), b2.coeff(n));
        return VerificationReport::violated("T2.3", params, v, json!({"family": "unbounded, t=2"}));
    }
    let a3 = genfun::hook3_count_odd_inf(n_max);
    let b3 = genfun::hook3_count_distinct_inf(n_max);
    let d3 = &a3 - &b3;
    // The length-3 inequality genuinely fails at n = 7 and holds strictly
    // beyond it, so the sweep starts at 8.
    for n in 8..=n_max {
        if d3.coeff(n) < &BigRational::zero() {
            let v = Violation::at_coeff(None, n, a3.coeff(n), b3.coeff(n));
            return VerificationReport::violated(
                "T2.3",
                params,
                v,
                json!({"family": "unbounded, t=3, n > 7"}),
            );
        }
    }
    let details = json!({
        "bounds_checked": l_max,
        "unbounded_t2_checked_to": n_max,
        "unbounded_t3_checked_from": 8,
        "last_t3_deficit": {"n": 7, "margin": exact_i64(d3.coeff(7))},
    });
    VerificationReport::verified("T2.3", params, details)
}

/// The rational middle term of the pair-weighted odd-side series is a
/// polynomial (certified by exact division) with non-negative coefficients,
/// and agrees with the manifestly non-negative double-sum route.
fn middle_term_polynomial(ov: &Overrides) -> VerificationReport {
    let l_max = ov.l(20);
    let n_max = ov.n(120) as usize;
    let params = json!({"L_max": l_max, "N": n_max});
    let mut max_degree = 0usize;
    for l in 1..=l_max {
        // Degree bound 6L − 3 keeps the whole polynomial inside the window,
        // so the divide-exact certificate applies to the full term.
        let window = n_max.max(6 * l as usize + 12);
        let term = genfun::weighted_middle_term(l, window);
        let pair_sum = genfun::weighted_middle_term_pair_sum(l, window);
        if let Some(v) = series_vs_series(l, &term, &pair_sum) {
            return VerificationReport::violated(
                "Rem2.3",
                params,
                v,
                json!({"check": "rational route vs double-sum route"}),
            );
        }
        if !term.is_integral() {
            return VerificationReport::violated(
                "Rem2.3",
                params,
                Violation::new(l, 0, "non-integer coefficient", "integers"),
                Value::Null,
            );
        }
        if let Some((n, c)) = term.first_negative() {
            let v = Violation::new(l, n as u64, c.to_string(), "≥ 0");
            return VerificationReport::violated("Rem2.3", params, v, Value::Null);
        }
        max_degree = max_degree.max(term.degree().unwrap_or(0));
    }
    let details = json!({
        "bounds_checked": l_max,
        "polynomial": true,
        "nonnegative": true,
        "max_degree": max_degree,
    });
    VerificationReport::verified("Rem2.3", params, details)
}

/// The unbounded pair-weighted gap: odd side minus distinct side equals the
/// closed-form quotient and is coefficientwise non-negative.
fn pair_gap_closed_form(ov: &Overrides) -> VerificationReport {
    let n_max = ov.n(60) as usize;
    let params = json!({"N": n_max});
    let odd = genfun::hook2_pairs_odd_inf(n_max);
    let distinct = genfun::hook2_pairs_distinct_inf(n_max);
    let diff = &odd - &distinct;
    let closed = genfun::hook2_pairs_gap_inf(n_max);
    if let Some(v) = series_vs_series(None, &diff, &closed) {
        return VerificationReport::violated(
            "T2.9",
            params,
            v,
            json!({"check": "difference vs closed form"}),
        );
    }
    if let Some((n, c)) = diff.first_negative() {
        let v = Violation::new(None, n as u64, c.to_string(), "≥ 0");
        return VerificationReport::violated("T2.9", params, v, Value::Null);
    }
    let details = json!({
        "coefficients_checked": n_max + 1,
        "first_nonzero": diff.valuation(),
    });
    VerificationReport::verified("T2.9", params, details)
}

/// Marker-refined series vs the refined census: for every bound and every
/// marker power, the coefficient at `qⁿ` counts class partitions of `n`
/// with exactly that many 2-hooks.
fn refined_count(
    target: Target,
    side: Side,
    gf: fn(u32, usize) -> BivariateSeries,
    ov: &Overrides,
) -> VerificationReport {
    let l_max = ov.l(6);
    let n_max = ov.n(25);
    let params = json!({"L_max": l_max, "N": n_max});
    for l in 1..=l_max {
        let refined = census_refined(side, 2, Bound::Finite(l), n_max);
        let series = gf(l, n_max as usize);
        let census_top = refined
            .counts
            .iter()
            .flat_map(|by_m| by_m.keys().copied())
            .max()
            .unwrap_or(0);
        let top = series.max_marker().max(census_top);
        for m in 0..=top {
            let slice = series.extract_marker(m);
            let counts: Vec<u64> = (0..=n_max).map(|n| refined.count(m, n)).collect();
            if let Some(v) = counts_vs_series(l, &counts, &slice) {
                return VerificationReport::violated(
                    target.id(),
                    params,
                    v,
                    json!({"marker": m}),
                );
            }
        }
    }
    VerificationReport::verified(target.id(), params, json!({"bounds_checked": l_max}))
}

/// Box-bounded partitions weighted by `(1−y)^{#distinct positive sizes}`
/// against the alternating binomial double sum, for every box shape in
/// range.
fn box_sizes_weighted(ov: &Overrides) -> VerificationReport {
    let l_max = ov.l(5);
    let n_max = ov.n(20) as usize;
    let params = json!({"L_max": l_max, "i_max": l_max, "N": n_max});
    for l in 0..=l_max {
        for i in 0..=l_max {
            let mut census = BivariateSeries::zero(n_max);
            for n in 0..=n_max as u64 {
                let class = PartitionClass::BoxBounded { max_part: l, max_parts: i };
                for pi in class.enumerate(n) {
                    // 1-hooks count exactly the distinct part sizes.
                    let sizes = pi.hook_count(1) as u32;
                    let weight = BivariateSeries::marker_affine_power(-1, 1, sizes, n_max);
                    census = &census
                        + &weight.mul_series(&TruncatedSeries::monomial_int(1, n as usize, n_max));
                }
            }
            let formula = genfun::box_sizes_weighted(l, i, n_max);
            if let Some((m, v)) = bivariate_vs_bivariate(l, &census, &formula) {
                return VerificationReport::violated(
                    "Lem3.1",
                    params,
                    v,
                    json!({"marker": m, "parts": i}),
                );
            }
        }
    }
    VerificationReport::verified(
        "Lem3.1",
        params,
        json!({"boxes_checked": (l_max + 1) * (l_max + 1)}),
    )
}

/// The three-piece split of the 2-hook gap: the identity itself, the
/// non-negativity of the residue piece, and the two pair-family series
/// counting their pair sets exactly.
fn pair_family_split(ov: &Overrides) -> VerificationReport {
    let l_max = ov.l(8);
    let n_max = ov.n(60) as usize;
    let residue_l_max = 12.max(l_max);
    let residue_n_max = 100.max(n_max);
    let set_l_max = 6.min(l_max);
    let set_n_max = 25;
    let params = json!({
        "L_max": l_max, "N": n_max,
        "residue_L_max": residue_l_max, "residue_N": residue_n_max,
        "set_L_max": set_l_max, "set_n_max": set_n_max,
    });
    for l in 1..=l_max {
        let gap = &genfun::hook2_count_odd(l, n_max) - &genfun::hook2_count_distinct(l, n_max);
        let family_gap =
            &genfun::pair_family_odd(l, n_max) - &genfun::pair_family_distinct(l, n_max);
        let split = &family_gap.mul_monomial(1, 2) + &genfun::difference_residue(l, n_max);
        if let Some(v) = series_vs_series(l, &gap, &split) {
            return VerificationReport::violated(
                "Eq3.6",
                params,
                v,
                json!({"check": "identity"}),
            );
        }
    }
    for l in 1..=residue_l_max {
        let residue = genfun::difference_residue(l, residue_n_max);
        if let Some((n, c)) = residue.first_negative() {
            let v = Violation::new(l, n as u64, c.to_string(), "≥ 0");
            return VerificationReport::violated(
                "Eq3.6",
                params,
                v,
                json!({"check": "residue non-negativity"}),
            );
        }
    }
    for l in 1..=set_l_max {
        let odd_series = genfun::pair_family_odd(l, set_n_max as usize);
        let distinct_series = genfun::pair_family_distinct(l, set_n_max as usize);
        for n in 0..=set_n_max {
            let odd_count = enumerate_odd_pairs(l, n).count() as u64;
            let distinct_count = enumerate_distinct_pairs(l, n).count() as u64;
            if odd_series.coeff(n as usize) != &big(odd_count) {
                let v = Violation::new(l, n, odd_series.coeff(n as usize), odd_count);
                return VerificationReport::violated(
                    "Eq3.6",
                    params,
                    v,
                    json!({"check": "odd pair-set cardinality"}),
                );
            }
            if distinct_series.coeff(n as usize) != &big(distinct_count) {
                let v = Violation::new(l, n, distinct_series.coeff(n as usize), distinct_count);
                return VerificationReport::violated(
                    "Eq3.6",
                    params,
                    v,
                    json!({"check": "distinct pair-set cardinality"}),
                );
            }
        }
    }
    VerificationReport::verified(
        "Eq3.6",
        params,
        json!({"identity_bounds": l_max, "residue_bounds": residue_l_max, "set_bounds": set_l_max}),
    )
}

/// Exhaustive injectivity of the pair map: every distinct-side pair lands
/// in the odd-side set, no two collide, and the counting inequality between
/// the sets follows.
fn pair_injection(ov: &Overrides) -> VerificationReport {
    let l_max = ov.l(8);
    let n_max = ov.n(30);
    let params = json!({"L_max": l_max, "n_max": n_max});
    let cells: Vec<(u32, u64)> =
        (1..=l_max).flat_map(|l| (0..=n_max).map(move |n| (l, n))).collect();
    let checks: Vec<_> = cells.par_iter().map(|&(l, n)| check_injection(l, n)).collect();
    let mut pairs_mapped = 0u64;
    for check in &checks {
        pairs_mapped += check.domain_count;
        if let Some(reason) = &check.failure {
            let v = Violation::new(check.l, check.n, reason, "injection into the odd-side set");
            return VerificationReport::violated("Lem3.2", params, v, Value::Null);
        }
        if check.domain_count > check.codomain_count {
            let v = Violation::new(check.l, check.n, check.domain_count, check.codomain_count);
            return VerificationReport::violated(
                "Lem3.2",
                params,
                v,
                json!({"check": "set sizes"}),
            );
        }
    }
    VerificationReport::verified("Lem3.2", params, json!({"pairs_mapped": pairs_mapped}))
}

/// Finite triangle-sum identities: the binomial-weighted triangular sum
/// equals its product form for each catalogued `(shift, sign, length)`
/// instance.
fn triangle_identity(ov: &Overrides) -> VerificationReport {
    const INSTANCES: [(usize, i32, i64); 4] = [(2, -1, 8), (3, -1, 6), (1, 1, 8), (2, 1, 8)];
    let n_max = ov.n(60) as usize;
    let instances: Vec<Value> =
        INSTANCES.iter().map(|&(e, s, nq)| json!([e, s, nq])).collect();
    let params = json!({"instances": instances, "N": n_max});
    for &(e, s, nq) in &INSTANCES {
        let sum = genfun::triangle_sum_side(e, s, nq, n_max);
        let product = genfun::triangle_product_side(e, s, nq, n_max);
        if let Some(v) = series_vs_series(None, &sum, &product) {
            return VerificationReport::violated(
                "Euler336",
                params,
                v,
                json!({"instance": [e, s, nq]}),
            );
        }
    }
    VerificationReport::verified(
        "Euler336",
        params,
        json!({"instances_checked": INSTANCES.len()}),
    )
}

/// The hook-squared product census over all partitions equals the integer
/// power of the Euler product, for every integer weight in range.
fn hook_square_product(ov: &Overrides) -> VerificationReport {
    let n_max = ov.n(25) as usize;
    let (z_min, z_max) = (-6i64, 6i64);
    let params = json!({"z_min": z_min, "z_max": z_max, "N": n_max});
    for z in z_min..=z_max {
        let census = hook_product_census(z, n_max);
        let product = genfun::euler_power_product(z, n_max);
        if let Some(v) = series_vs_series(None, &census, &product) {
            return VerificationReport::violated("NO-z", params, v, json!({"z": z}));
        }
    }
    VerificationReport::verified(
        "NO-z",
        params,
        json!({"weights_checked": z_max - z_min + 1}),
    )
}
