//! Brute-force hook censuses: enumerate partitions, count hooks, tabulate.
//!
//! Everything here is computed by direct enumeration, one partition at a
//! time. The census tables are the ground truth the closed-form generating
//! functions are tested against, so this module must not consult the
//! formula layer — its only inputs are the partition enumerator and the
//! per-diagram hook counters.
//!
//! Census sweeps parallelize over the size `n` (each size's class is
//! enumerated independently).

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};
use rayon::prelude::*;
use serde::ser::Serializer;
use serde::Serialize;

use crate::partition::PartitionClass;
use crate::series::TruncatedSeries;

/// Which partition family a census runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// All parts odd; a finite bound `L` caps parts at `2L − 1`.
    Odd,
    /// All parts distinct; a finite bound `L` caps parts at `L`.
    Distinct,
}

/// Largest-part bound of a census (interpreted per [`Side`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Finite(u32),
    Unbounded,
}

impl Serialize for Bound {
    /// `Finite(L)` serializes as the number `L`, `Unbounded` as `null`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Bound::Finite(l) => serializer.serialize_u32(*l),
            Bound::Unbounded => serializer.serialize_none(),
        }
    }
}

/// Weight applied to a partition with `m` hooks of the target length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// `m` itself: totals hooks across the class.
    Count,
    /// `m·(m−1)/2`: counts unordered pairs of such hooks.
    ChooseTwo,
}

impl Weight {
    fn apply(self, m: u64) -> u64 {
        match self {
            Weight::Count => m,
            Weight::ChooseTwo => m * (m.saturating_sub(1)) / 2,
        }
    }
}

impl Side {
    /// The partition class this side cuts out under the given bound.
    pub fn class(self, bound: Bound) -> PartitionClass {
        match (self, bound) {
            (Side::Odd, Bound::Finite(l)) => PartitionClass::OddBounded(l),
            (Side::Odd, Bound::Unbounded) => PartitionClass::OddUnbounded,
            (Side::Distinct, Bound::Finite(l)) => PartitionClass::DistinctBounded(l),
            (Side::Distinct, Bound::Unbounded) => PartitionClass::DistinctUnbounded,
        }
    }
}

/// Hook totals per size: `values[n]` is the number of hooks of length `t`
/// summed over every partition of `n` in the class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusTable {
    pub side: Side,
    pub t: u64,
    pub bound: Bound,
    pub n_max: u64,
    pub values: Vec<u64>,
}

impl CensusTable {
    /// `n,value` rows (with header), one per size 0..=n_max.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{v}\n"));
        }
        out
    }
}

/// Refined census: `counts[n][m]` is the number of partitions of `n` in the
/// class with exactly `m` hooks of length `t` (zero counts omitted).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefinedCensus {
    pub side: Side,
    pub t: u64,
    pub bound: Bound,
    pub n_max: u64,
    pub counts: Vec<BTreeMap<u32, u64>>,
}

impl RefinedCensus {
    /// Collapses the refinement with a weight on the hook multiplicity.
    pub fn weighted(&self, weight: Weight) -> Vec<u64> {
        self.counts
            .iter()
            .map(|by_m| by_m.iter().map(|(&m, &c)| weight.apply(m as u64) * c).sum())
            .collect()
    }

    /// Number of partitions of `n` with exactly `m` marked hooks.
    pub fn count(&self, m: u32, n: u64) -> u64 {
        self.counts[n as usize].get(&m).copied().unwrap_or(0)
    }

    /// `m,n,value` rows (with header) for the nonzero entries.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,n,value\n");
        for (n, by_m) in self.counts.iter().enumerate() {
            for (m, v) in by_m {
                out.push_str(&format!("{m},{n},{v}\n"));
            }
        }
        out
    }
}

/// Sums hooks of length `t` over every partition of each size `0..=n_max`.
pub fn census_total(side: Side, t: u64, bound: Bound, n_max: u64) -> CensusTable {
    let class = side.class(bound);
    let sizes: Vec<u64> = (0..=n_max).collect();
    let values: Vec<u64> = sizes
        .par_iter()
        .map(|&n| class.enumerate(n).map(|pi| pi.hook_count(t)).sum())
        .collect();
    CensusTable { side, t, bound, n_max, values }
}

/// Tallies partitions of each size by their exact number of length-`t`
/// hooks.
pub fn census_refined(side: Side, t: u64, bound: Bound, n_max: u64) -> RefinedCensus {
    let class = side.class(bound);
    let sizes: Vec<u64> = (0..=n_max).collect();
    let counts: Vec<BTreeMap<u32, u64>> = sizes
        .par_iter()
        .map(|&n| {
            let mut by_m: BTreeMap<u32, u64> = BTreeMap::new();
            for pi in class.enumerate(n) {
                let m = pi.hook_count(t) as u32;
                *by_m.entry(m).or_insert(0) += 1;
            }
            by_m
        })
        .collect();
    RefinedCensus { side, t, bound, n_max, counts }
}

/// Weighted census in one pass (equivalent to refining and collapsing, but
/// without building the intermediate table).
pub fn weighted_census(side: Side, t: u64, bound: Bound, n_max: u64, weight: Weight) -> Vec<u64> {
    let class = side.class(bound);
    let sizes: Vec<u64> = (0..=n_max).collect();
    sizes
        .par_iter()
        .map(|&n| class.enumerate(n).map(|pi| weight.apply(pi.hook_count(t))).sum())
        .collect()
}

/// One row of a crossover scan: the per-size differences
/// `odd-side total − distinct-side total` for hooks of length `t`, and the
/// largest size where the difference is still negative (`None` when it
/// never is).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossoverRow {
    pub t: u64,
    pub candidate: Option<u64>,
    pub diffs: Vec<i64>,
}

/// Scans hook lengths `t_lo ..= t_hi` over the unbounded odd and distinct
/// families up to `n_max`, enumerating each family once per size and
/// profiling all hook lengths in the same pass.
pub fn crossover_scan(t_lo: u64, t_hi: u64, n_max: u64) -> Vec<CrossoverRow> {
    assert!(t_lo >= 1 && t_lo <= t_hi, "need 1 ≤ t_lo ≤ t_hi");
    let sizes: Vec<u64> = (0..=n_max).collect();
    // per_size[n] = (odd totals by t, distinct totals by t)
    let per_size: Vec<(Vec<u64>, Vec<u64>)> = sizes
        .par_iter()
        .map(|&n| {
            let mut odd = vec![0u64; t_hi as usize + 1];
            for pi in PartitionClass::OddUnbounded.enumerate(n) {
                for (t, c) in pi.hook_count_profile(t_hi).into_iter().enumerate() {
                    odd[t] += c;
                }
            }
            let mut distinct = vec![0u64; t_hi as usize + 1];
            for pi in PartitionClass::DistinctUnbounded.enumerate(n) {
                for (t, c) in pi.hook_count_profile(t_hi).into_iter().enumerate() {
                    distinct[t] += c;
                }
            }
            (odd, distinct)
        })
        .collect();
    (t_lo..=t_hi)
        .map(|t| {
            let diffs: Vec<i64> = per_size
                .iter()
                .map(|(odd, distinct)| {
                    odd[t as usize] as i64 - distinct[t as usize] as i64
                })
                .collect();
            let candidate = diffs
                .iter()
                .enumerate()
                .rev()
                .find(|&(_, &d)| d < 0)
                .map(|(n, _)| n as u64);
            CrossoverRow { t, candidate, diffs }
        })
        .collect()
}

/// Enumeration side of the hook-squared weighting identity:
/// `Σ_π q^{|π|} ∏_{h ∈ hooks(π)} (1 − z/h²)` over all partitions, truncated.
pub fn hook_product_census(z: i64, trunc: usize) -> TruncatedSeries {
    let zr = BigRational::from_integer(BigInt::from(z));
    let sizes: Vec<u64> = (0..=trunc as u64).collect();
    let coeffs: Vec<BigRational> = sizes
        .par_iter()
        .map(|&n| {
            let class = PartitionClass::BoxBounded {
                max_part: n.max(1) as u32,
                max_parts: n.max(1) as u32,
            };
            let mut total = BigRational::zero();
            for pi in class.enumerate(n) {
                let mut product = BigRational::one();
                for h in pi.hook_lengths() {
                    let h2 = BigRational::from_integer(BigInt::from(h * h));
                    product *= BigRational::one() - &zr / h2;
                    if product.is_zero() {
                        break;
                    }
                }
                total += product;
            }
            total
        })
        .collect();
    TruncatedSeries::from_rationals(&coeffs, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_values() {
        // Distinct partitions of 7 with parts ≤ 5 carry 4 hooks of length 2
        // and 4 hooks of length 3 in total.
        let b2 = census_total(Side::Distinct, 2, Bound::Finite(5), 7);
        assert_eq!(b2.values[7], 4);
        let b3 = census_total(Side::Distinct, 3, Bound::Finite(5), 7);
        assert_eq!(b3.values[7], 4);
        // Unbounded at n = 7 the distinct side has 6 length-3 hooks, the odd
        // side 5.
        let b3u = census_total(Side::Distinct, 3, Bound::Unbounded, 7);
        assert_eq!(b3u.values[7], 6);
        let a3u = census_total(Side::Odd, 3, Bound::Unbounded, 7);
        assert_eq!(a3u.values[7], 5);
    }

    #[test]
    fn refined_collapses_to_totals() {
        for (side, bound) in [
            (Side::Odd, Bound::Finite(3)),
            (Side::Distinct, Bound::Finite(6)),
            (Side::Odd, Bound::Unbounded),
        ] {
            let total = census_total(side, 2, bound, 16);
            let refined = census_refined(side, 2, bound, 16);
            assert_eq!(refined.weighted(Weight::Count), total.values);
            assert_eq!(
                weighted_census(side, 2, bound, 16, Weight::ChooseTwo),
                refined.weighted(Weight::ChooseTwo)
            );
        }
    }

    #[test]
    fn refined_entry_zero_is_the_empty_partition() {
        let refined = census_refined(Side::Odd, 2, Bound::Unbounded, 4);
        assert_eq!(refined.count(0, 0), 1);
        // n=2: (1,1) has one length-2 hook; (2) is not odd.
        assert_eq!(refined.count(1, 2), 1);
        assert_eq!(refined.count(0, 2), 0);
    }

    #[test]
    fn crossover_scan_small_window() {
        let rows = crossover_scan(2, 3, 12);
        // Length-2 hooks never favor the distinct side.
        assert_eq!(rows[0].t, 2);
        assert_eq!(rows[0].candidate, None);
        assert!(rows[0].diffs.iter().all(|&d| d >= 0));
        // Length-3 hooks do, last at n = 7 within this window.
        assert_eq!(rows[1].t, 3);
        assert_eq!(rows[1].candidate, Some(7));
        assert_eq!(rows[1].diffs[7], -1);
    }

    #[test]
    fn csv_shapes() {
        let table = census_total(Side::Distinct, 2, Bound::Finite(4), 3);
        let csv = table.to_csv();
        assert!(csv.starts_with("n,value\n0,0\n"));
        assert_eq!(csv.lines().count(), 5);
        let refined = census_refined(Side::Distinct, 2, Bound::Finite(4), 3);
        assert!(refined.to_csv().starts_with("m,n,value\n"));
    }

    #[test]
    fn json_encodes_bound_and_side() {
        let table = census_total(Side::Odd, 2, Bound::Finite(3), 2);
        let v = serde_json::to_value(&table).unwrap();
        assert_eq!(v["side"], "odd");
        assert_eq!(v["bound"], 3);
        assert_eq!(v["t"], 2);
        let table = census_total(Side::Odd, 2, Bound::Unbounded, 2);
        let v = serde_json::to_value(&table).unwrap();
        assert_eq!(v["bound"], serde_json::Value::Null);
    }

    #[test]
    fn hook_product_census_degenerates_correctly() {
        // z = 0: every product is 1, so the census counts partitions.
        let s = hook_product_census(0, 8);
        let expected: Vec<i64> = vec![1, 1, 2, 3, 5, 7, 11, 15, 22];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(s.coeff_i64(n), e, "p({n})");
        }
        // z = 1: only the empty partition survives (every diagram has a
        // hook of length 1).
        let s = hook_product_census(1, 8);
        assert_eq!(s.coeff_i64(0), 1);
        for n in 1..=8 {
            assert!(s.coeff(n).is_zero(), "q^{n}");
        }
    }
}
