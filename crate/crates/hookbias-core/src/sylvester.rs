//! Bijections between odd-part and distinct-part partitions via symmetric
//! diagrams, plus the pair-level injection built on top of them.
//!
//! An odd partition has a center-justified symmetric diagram: row `i` with
//! part `2m_i + 1` covers the signed columns `−m_i ..= m_i`, and column 0 is
//! the spine. [`psi`] reads that diagram as a sequence of bent hooks and
//! returns their lengths, which form a distinct partition. [`sigma`] is the
//! inverse direction, implemented independently: it derives insertion counts
//! from the distinct partition and rebuilds the symmetric diagram cell by
//! cell, never consulting the hook-reading code. Round-trip tests therefore
//! cross-validate two separate constructions.
//!
//! Internal invariants (violations panic): every hook walk visits only
//! present cells, the walks cover the diagram exactly, insertion never
//! collides, and the rebuilt diagram has full symmetric rows.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Partition, PartitionClass};

/// `(row ≥ 1, signed column)` in a center-justified diagram.
type Cell = (u32, i64);

fn take(cells: &mut HashSet<Cell>, cell: Cell) {
    let present = cells.remove(&cell);
    assert!(present, "hook walk visited a missing cell {cell:?}");
}

fn put(cells: &mut HashSet<Cell>, cell: Cell) {
    let fresh = cells.insert(cell);
    assert!(fresh, "insertion placed two cells at {cell:?}");
}

/// Maps a partition with all parts odd to one with all parts distinct by
/// reading bent hooks off the center-justified symmetric diagram.
///
/// The hooks are read in a fixed order: first the spine (bottom to top)
/// continuing right along row 1; then for `k = 1, 2, …` the hook that climbs
/// column `−k` up to row `k` and turns left, followed by the hook that climbs
/// column `+k` up to row `k + 1` and turns right. Reading stops at the first
/// empty hook, by which point the walks must have consumed the whole diagram.
pub fn psi(pi: &Partition) -> Result<Partition> {
    if let Some(&p) = pi.parts().iter().find(|&&p| p % 2 == 0) {
        return Err(Error::ExpectedOddParts(p));
    }
    if pi.is_empty() {
        return Ok(Partition::empty());
    }

    let mut cells: HashSet<Cell> = HashSet::new();
    for (i, &p) in pi.parts().iter().enumerate() {
        let m = ((p - 1) / 2) as i64;
        for c in -m..=m {
            cells.insert((i as u32 + 1, c));
        }
    }

    let rows = pi.num_parts() as u32;
    let mut hooks: Vec<u64> = Vec::new();

    // Center hook: the whole spine, then the right arm of row 1.
    let mut len = 0u64;
    for r in (1..=rows).rev() {
        take(&mut cells, (r, 0));
        len += 1;
    }
    let mut c = 1i64;
    while cells.remove(&(1, c)) {
        len += 1;
        c += 1;
    }
    hooks.push(len);

    // Bent hooks, alternating sides and moving outward.
    'reading: for k in 1..=rows {
        for (col, stop_row) in [(-(k as i64), k), (k as i64, k + 1)] {
            let Some(bottom) = (stop_row..=rows).rev().find(|&r| cells.contains(&(r, col)))
            else {
                break 'reading;
            };
            // Column segment from the bottom up to the stop row…
            let mut len = 0u64;
            for r in (stop_row..=bottom).rev() {
                take(&mut cells, (r, col));
                len += 1;
            }
            // …then along the stop row, away from the spine.
            let dir = if col < 0 { -1 } else { 1 };
            let mut c = col + dir;
            while cells.remove(&(stop_row, c)) {
                len += 1;
                c += dir;
            }
            // Everything nearer the top of this column belongs to hooks
            // already read.
            for r in 1..stop_row {
                assert!(!cells.contains(&(r, col)), "stale cell above hook in column {col}");
            }
            hooks.push(len);
        }
    }

    assert!(cells.is_empty(), "hook reading left {} cells uncovered", cells.len());
    assert!(
        hooks.windows(2).all(|w| w[0] > w[1]),
        "hook lengths must strictly decrease: {hooks:?}"
    );
    let total: u64 = hooks.iter().sum();
    assert_eq!(total, pi.size(), "hook lengths must account for every cell");
    let parts: Vec<u32> = hooks.iter().map(|&h| h as u32).collect();
    Ok(Partition::new(parts).expect("strictly decreasing lengths form a partition"))
}

/// Maps a partition with all parts distinct to one with all parts odd by
/// rebuilding a center-justified symmetric diagram from insertion counts.
///
/// The count `d_j` is the alternating sum of the parts after index `j`
/// (`d_0 = λ_1 − λ_2 + λ_3 − …`, `d_1 = λ_2 − λ_3 + …`, and so on); for a
/// strictly decreasing sequence every `d_j` is non-negative. Count `d_0`
/// drops the spine, odd-indexed counts widen a row symmetrically, and
/// even-indexed counts extend a column pair downward. The rows of the
/// finished diagram are the odd parts of the image.
pub fn sigma(lam: &Partition) -> Result<Partition> {
    if let Some(w) = lam.parts().windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::ExpectedDistinctParts(w[0]));
    }
    if lam.is_empty() {
        return Ok(Partition::empty());
    }

    let nu = lam.num_parts();
    // Suffix alternating sums: tail[i] = λ_i − λ_{i+1} + λ_{i+2} − …
    let mut tail = vec![0i64; nu + 2];
    for i in (1..=nu).rev() {
        tail[i] = lam.part(i) as i64 - tail[i + 1];
    }

    let mut cells: HashSet<Cell> = HashSet::new();
    for j in 0..nu {
        let count = tail[j + 1];
        assert!(count >= 0, "insertion count d_{j} = {count} must be non-negative");
        let d = count as u32;
        if j == 0 {
            for r in 1..=d {
                put(&mut cells, (r, 0));
            }
        } else if j % 2 == 1 {
            // Row k+1 grows d cells outward on each side.
            let k = (j as u32 - 1) / 2;
            for c in (k + 1)..=(k + d) {
                put(&mut cells, (k + 1, c as i64));
                put(&mut cells, (k + 1, -(c as i64)));
            }
        } else {
            // Columns ±k grow d cells downward.
            let k = j as u32 / 2;
            for r in (k + 1)..=(k + d) {
                put(&mut cells, (r, k as i64));
                put(&mut cells, (r, -(k as i64)));
            }
        }
    }
    assert_eq!(cells.len() as u64, lam.size(), "insertion must place one cell per unit");

    // Read the diagram back row by row; each row must be a full symmetric
    // block −m ..= m, contributing the odd part 2m + 1.
    let max_row = cells.iter().map(|&(r, _)| r).max().expect("diagram is nonempty");
    let mut parts = Vec::with_capacity(max_row as usize);
    for r in 1..=max_row {
        let row_cols: HashSet<i64> =
            cells.iter().filter(|&&(rr, _)| rr == r).map(|&(_, c)| c).collect();
        assert!(!row_cols.is_empty(), "row {r} of the rebuilt diagram is empty");
        let m = *row_cols.iter().max().expect("row is nonempty");
        assert_eq!(row_cols.len() as i64, 2 * m + 1, "row {r} is not a full symmetric block");
        for c in -m..=m {
            assert!(row_cols.contains(&c), "row {r} is missing column {c}");
        }
        parts.push((2 * m + 1) as u32);
    }
    assert!(
        parts.windows(2).all(|w| w[0] >= w[1]),
        "rebuilt rows must be non-increasing: {parts:?}"
    );
    Ok(Partition::new(parts).expect("validated rows form a partition"))
}

/// An ordered pair of partitions, the unit the pair injection acts on.
///
/// The second component is a "mark": in both families it carries at most one
/// part. Total size is the sum of the two component sizes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairPartition {
    pub first: Partition,
    pub second: Partition,
}

impl PairPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        PairPartition { first, second }
    }

    pub fn size(&self) -> u64 {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for PairPartition {
    /// `first|second` using the partition literal syntax, e.g. `6,5|2` or
    /// `-|-` for the pair of empty partitions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl std::str::FromStr for PairPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::InvalidParameter(format!("pair literal {s:?} needs a '|'")))?;
        Ok(PairPartition { first: a.parse()?, second: b.parse()? })
    }
}

/// Component classes of the odd-side pair family at bound `L`: odd parts at
/// most `2L − 1`, marked by at most one odd part at most `2L − 3`.
pub fn odd_pair_classes(l: u32) -> (PartitionClass, PartitionClass) {
    (PartitionClass::OddBounded(l), PartitionClass::OddSingleton(l))
}

/// Component classes of the distinct-side pair family at bound `L`: distinct
/// parts in `2 ..= L − 1`, marked by at most one part at most `L − 2`.
pub fn distinct_pair_classes(l: u32) -> (PartitionClass, PartitionClass) {
    (PartitionClass::DistinctNoOnes(l), PartitionClass::BoundedSingleton(l))
}

/// Membership test for the odd-side pair family.
pub fn odd_pair_contains(l: u32, pair: &PairPartition) -> bool {
    let (c1, c2) = odd_pair_classes(l);
    c1.contains(&pair.first) && c2.contains(&pair.second)
}

/// Membership test for the distinct-side pair family.
pub fn distinct_pair_contains(l: u32, pair: &PairPartition) -> bool {
    let (c1, c2) = distinct_pair_classes(l);
    c1.contains(&pair.first) && c2.contains(&pair.second)
}

fn pair_stream(
    (c1, c2): (PartitionClass, PartitionClass),
    n: u64,
) -> impl Iterator<Item = PairPartition> {
    // First-component sizes descending, each component in enumeration order.
    (0..=n).rev().flat_map(move |n1| {
        c1.enumerate(n1).flat_map(move |first| {
            c2.enumerate(n - n1)
                .map(move |second| PairPartition { first: first.clone(), second })
        })
    })
}

/// Streams the odd-side pairs of total size `n` at bound `L`.
pub fn enumerate_odd_pairs(l: u32, n: u64) -> impl Iterator<Item = PairPartition> {
    pair_stream(odd_pair_classes(l), n)
}

/// Streams the distinct-side pairs of total size `n` at bound `L`.
pub fn enumerate_distinct_pairs(l: u32, n: u64) -> impl Iterator<Item = PairPartition> {
    pair_stream(distinct_pair_classes(l), n)
}

/// The size-preserving injection from the distinct-side pairs into the
/// odd-side pairs at the same bound `L`.
///
/// The first component always travels through [`sigma`]. A present mark is
/// kept as is when odd; when even it donates one unit to the first component
/// (as a new part 1, which the domain class guarantees is absent) and
/// shrinks by one, becoming odd.
pub fn inject_pair(l: u32, pair: &PairPartition) -> Result<PairPartition> {
    let (c1, c2) = distinct_pair_classes(l);
    if !c1.contains(&pair.first) {
        return Err(Error::PairOutsideDomain {
            l,
            reason: format!(
                "first component {} must have distinct parts, none equal to 1, each at most {}",
                pair.first,
                l as i64 - 1
            ),
        });
    }
    if !c2.contains(&pair.second) {
        return Err(Error::PairOutsideDomain {
            l,
            reason: format!(
                "second component {} must have at most one part, at most {}",
                pair.second,
                l as i64 - 2
            ),
        });
    }
    let image = match *pair.second.parts() {
        [] => PairPartition::new(sigma(&pair.first)?, Partition::empty()),
        [p] if p % 2 == 1 => PairPartition::new(sigma(&pair.first)?, pair.second.clone()),
        [p] => {
            let mut parts = pair.first.parts().to_vec();
            parts.push(1);
            let widened =
                Partition::new(parts).expect("appending a part 1 keeps the parts decreasing");
            let shrunk = Partition::new(vec![p - 1]).expect("an even mark is at least 2");
            PairPartition::new(sigma(&widened)?, shrunk)
        }
        _ => unreachable!("domain pairs have at most one part in the second component"),
    };
    debug_assert_eq!(image.size(), pair.size(), "the injection preserves total size");
    Ok(image)
}

/// Outcome of exercising the pair injection at a single total size.
#[derive(Clone, Debug)]
pub struct InjectionCheck {
    pub l: u32,
    pub n: u64,
    /// Number of distinct-side pairs of size `n`.
    pub domain_count: u64,
    /// Number of odd-side pairs of size `n`.
    pub codomain_count: u64,
    /// First problem found (image outside the codomain, a collision, or a
    /// map error); `None` when the map is a verified injection at this size.
    pub failure: Option<String>,
}

/// Maps every distinct-side pair of size `n` and checks that the images are
/// odd-side pairs of size `n`, pairwise distinct, and hence witness
/// `|domain| ≤ |codomain|`.
pub fn check_injection(l: u32, n: u64) -> InjectionCheck {
    let codomain: HashSet<PairPartition> = enumerate_odd_pairs(l, n).collect();
    let mut seen: HashSet<PairPartition> = HashSet::new();
    let mut failure: Option<String> = None;
    let mut domain_count = 0u64;
    for pair in enumerate_distinct_pairs(l, n) {
        domain_count += 1;
        match inject_pair(l, &pair) {
            Ok(image) => {
                if !codomain.contains(&image) {
                    failure.get_or_insert_with(|| {
                        format!("image {image} of {pair} falls outside the odd-side family")
                    });
                } else if !seen.insert(image.clone()) {
                    failure.get_or_insert_with(|| format!("two pairs share the image {image}"));
                }
            }
            Err(e) => {
                failure.get_or_insert_with(|| format!("{pair}: {e}"));
            }
        }
    }
    if failure.is_none() && domain_count > codomain.len() as u64 {
        failure = Some(format!(
            "domain size {domain_count} exceeds codomain size {}",
            codomain.len()
        ));
    }
    InjectionCheck { l, n, domain_count, codomain_count: codomain.len() as u64, failure }
}
