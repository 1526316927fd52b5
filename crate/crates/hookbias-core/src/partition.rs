//! Integer partitions, Young diagrams, and hook-length machinery.
//!
//! Conventions used throughout the crate:
//! - a partition is a non-increasing sequence of positive integers;
//!   the empty partition `∅` is a valid partition of 0;
//! - rows and columns of the Young diagram are 1-based, English notation
//!   (row `i` has `λ_i` cells);
//! - `λ_k = 0` for `k` past the last part, so "gap" formulas such as
//!   `λ_i − λ_{i+1}` are defined for the final part as well;
//! - the hook length of cell `(i, j)` is `λ_i + λ′_j − i − j + 1` where `λ′`
//!   is the conjugate partition.

use std::fmt;

use crate::error::{Error, Result};

/// A partition of a non-negative integer, stored as its non-increasing parts.
///
/// The size (sum of parts) is cached because census loops consult it often.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    size: u64,
}

impl Partition {
    /// Builds a partition after checking that `parts` is non-increasing and
    /// strictly positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self::from_sorted_unchecked(parts))
    }

    /// Builds a partition from parts already known to be valid (used by the
    /// enumerators, which produce parts in non-increasing order by
    /// construction).
    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        let size = parts.iter().map(|&p| p as u64).sum();
        Partition { parts, size }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), size: 0 }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`, the number being partitioned.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// `ν(λ)`, the number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// `l(λ)`, the largest part (0 for the empty partition).
    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_k` with the convention `λ_k = 0` for `k` beyond the last part
    /// (`k` is 1-based).
    pub fn part(&self, k: usize) -> u32 {
        if k == 0 || k > self.parts.len() { 0 } else { self.parts[k - 1] }
    }

    /// True when every part is odd (vacuously true for `∅`).
    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// True when the parts are strictly decreasing (vacuously true for `∅`).
    pub fn all_parts_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// The conjugate partition `λ′` with `λ′_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let largest = self.largest_part() as usize;
        let mut conj = Vec::with_capacity(largest);
        // Parts are non-increasing, so #{i : λ_i ≥ j} is found by scanning
        // from the tail: `rows` counts parts ≥ j as j increases.
        let mut rows = self.parts.len();
        for j in 1..=largest {
            while rows > 0 && (self.parts[rows - 1] as usize) < j {
                rows -= 1;
            }
            conj.push(rows as u32);
        }
        Partition::from_sorted_unchecked(conj)
    }

    /// Hook length of cell `(i, j)` (1-based): `λ_i + λ′_j − i − j + 1`.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<u64> {
        if i == 0 || j == 0 || i > self.parts.len() || j > self.parts[i - 1] as usize {
            return Err(Error::CellOutOfRange { row: i, col: j });
        }
        let conj = self.conjugate();
        Ok(self.parts[i - 1] as u64 + conj.parts[j - 1] as u64 - i as u64 - j as u64 + 1)
    }

    /// All hook lengths, row by row (length = number of cells = `|λ|`).
    pub fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size as usize);
        for (i0, &p) in self.parts.iter().enumerate() {
            let i = (i0 + 1) as u64;
            for j in 1..=(p as u64) {
                out.push(p as u64 + conj.parts[j as usize - 1] as u64 - i - j + 1);
            }
        }
        out
    }

    /// Number of cells whose hook length equals `t`.
    pub fn hook_count(&self, t: u64) -> u64 {
        let conj = self.conjugate();
        let mut count = 0;
        for (i0, &p) in self.parts.iter().enumerate() {
            let i = (i0 + 1) as u64;
            for j in 1..=(p as u64) {
                if p as u64 + conj.parts[j as usize - 1] as u64 - i - j + 1 == t {
                    count += 1;
                }
            }
        }
        count
    }

    /// Counts of hooks of each length `1..=t_max` in one pass;
    /// `profile[t]` is the number of cells with hook length `t`
    /// (`profile[0]` is unused and stays 0).
    pub fn hook_count_profile(&self, t_max: u64) -> Vec<u64> {
        let mut profile = vec![0u64; t_max as usize + 1];
        let conj = self.conjugate();
        for (i0, &p) in self.parts.iter().enumerate() {
            let i = (i0 + 1) as u64;
            for j in 1..=(p as u64) {
                let h = p as u64 + conj.parts[j as usize - 1] as u64 - i - j + 1;
                if h <= t_max {
                    profile[h as usize] += 1;
                }
            }
        }
        profile
    }

    /// The alternating sum `γ(λ) = λ_1 − λ_2 + λ_3 − …` (always ≥ 0 for
    /// non-increasing parts).
    pub fn alternating_sum(&self) -> u64 {
        let mut acc: i64 = 0;
        for (k, &p) in self.parts.iter().enumerate() {
            if k % 2 == 0 {
                acc += p as i64;
            } else {
                acc -= p as i64;
            }
        }
        debug_assert!(acc >= 0, "alternating sum of a partition is non-negative");
        acc as u64
    }

    /// Renders the Young diagram as ASCII text, one row per part.
    ///
    /// With `Render::Cells` every cell prints as `[]`; with
    /// `Render::HookLengths` every cell prints its hook length,
    /// right-aligned in a fixed-width column.
    pub fn render_young(&self, labels: Render) -> String {
        match labels {
            Render::Cells => {
                let mut out = String::new();
                for &p in &self.parts {
                    for _ in 0..p {
                        out.push_str("[]");
                    }
                    out.push('\n');
                }
                out
            }
            Render::HookLengths => {
                let conj = self.conjugate();
                let width = self
                    .parts
                    .first()
                    .map(|&p| {
                        // The largest hook sits at cell (1, 1).
                        let h = p as u64 + conj.parts.first().copied().unwrap_or(0) as u64 - 1;
                        h.to_string().len()
                    })
                    .unwrap_or(1);
                let mut out = String::new();
                for (i0, &p) in self.parts.iter().enumerate() {
                    let i = (i0 + 1) as u64;
                    let row: Vec<String> = (1..=(p as u64))
                        .map(|j| {
                            let h = p as u64 + conj.parts[j as usize - 1] as u64 - i - j + 1;
                            format!("{h:>width$}")
                        })
                        .collect();
                    out.push_str(&row.join(" "));
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// Labelling mode for [`Partition::render_young`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Render {
    Cells,
    HookLengths,
}

impl fmt::Display for Partition {
    /// Prints parts comma-separated (`7,5,3,3`); the empty partition prints
    /// as `-`, matching the CLI literal syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated literal produced by `Display`: `7,5,3,3`
    /// for a partition, `-` (or an empty string) for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad partition literal {s:?}")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Number of cells `(i, j)` of a distinct-parts partition with hook length 2:
/// positions where `λ_i − λ_{i+1} ≥ 2` (with `λ_{ν+1} = 0`).
///
/// Errors unless the parts are strictly decreasing.
pub fn hook2_profile_distinct(pi: &Partition) -> Result<u64> {
    if let Some(w) = pi.parts().windows(2).find(|w| w[0] <= w[1]) {
        return Err(Error::ExpectedDistinctParts(w[1]));
    }
    let n = pi.num_parts();
    let mut count = 0;
    for i in 1..=n {
        let gap = pi.part(i) - pi.part(i + 1);
        if gap >= 2 {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of 2-hooks of an odd-parts partition, computed from its part-size
/// profile: one for every part size larger than 1 that appears, plus one for
/// every part size that appears at least twice.
///
/// Errors unless every part is odd.
pub fn hook2_profile_odd(pi: &Partition) -> Result<u64> {
    if let Some(&p) = pi.parts().iter().find(|&&p| p % 2 == 0) {
        return Err(Error::ExpectedOddParts(p));
    }
    let mut count = 0;
    let mut idx = 0;
    let parts = pi.parts();
    while idx < parts.len() {
        let size = parts[idx];
        let mut mult = 0;
        while idx < parts.len() && parts[idx] == size {
            mult += 1;
            idx += 1;
        }
        if size > 1 {
            count += 1;
        }
        if mult >= 2 {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of partitions of `n` in which exactly one part size is repeated,
/// and that part size occurs exactly three times.
pub fn count_one_part_tripled(n: u64) -> u64 {
    let class = PartitionClass::BoxBounded { max_part: n as u32, max_parts: n as u32 };
    class
        .enumerate(n)
        .filter(|pi| {
            let mut triples = 0;
            let mut idx = 0;
            let parts = pi.parts();
            while idx < parts.len() {
                let size = parts[idx];
                let mut mult = 0;
                while idx < parts.len() && parts[idx] == size {
                    mult += 1;
                    idx += 1;
                }
                match mult {
                    1 => {}
                    3 => triples += 1,
                    _ => return false,
                }
            }
            triples == 1
        })
        .count() as u64
}

/// A family of partitions cut out by per-part predicates.
///
/// Membership is decided part-by-part, so the empty partition belongs to
/// every class no matter how restrictive the bounds are (all predicates are
/// vacuous for `∅`). Bounds are stored as given; a bound that is negative
/// (such as "largest part ≤ 2L−3" at L = 1) simply leaves `∅` as the only
/// member. The one exception is [`PartitionClass::BoundedSingleton`] below
/// L = 2, which is empty outright: its generating function is the length
/// `L − 1` geometric sum `1 + q + … + q^{L−2}`, and at L = 1 that sum has
/// no terms at all, so not even `∅` is offered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionClass {
    /// Odd parts, each at most `2L − 1`.
    OddBounded(u32),
    /// Distinct parts, each at most `L`.
    DistinctBounded(u32),
    /// Odd parts, no bound on the largest part.
    OddUnbounded,
    /// Distinct parts, no bound on the largest part.
    DistinctUnbounded,
    /// At most `max_parts` parts, each at most `max_part` (an `m × n` box).
    BoxBounded { max_part: u32, max_parts: u32 },
    /// At most one part, odd and at most `2L − 3`.
    OddSingleton(u32),
    /// Distinct parts, none equal to 1, each at most `L − 1`.
    DistinctNoOnes(u32),
    /// At most one part, at most `L − 2`. Empty (no members, not even `∅`)
    /// when `L < 2`.
    BoundedSingleton(u32),
}

/// The shape constraints of a class in a uniform form used by both the
/// membership test and the enumerator.
struct ClassShape {
    /// Upper bound on any part (None = unbounded). May be negative-infeasible
    /// encoded as Some(0) meaning "no part allowed".
    max_part: Option<u32>,
    /// Smallest allowed part value.
    min_part: u32,
    /// Parts must all be odd.
    odd: bool,
    /// Parts must be strictly decreasing.
    distinct: bool,
    /// Maximum number of parts (None = unbounded).
    max_parts: Option<usize>,
    /// The class has no members at all, not even `∅`.
    void: bool,
}

impl PartitionClass {
    fn shape(&self) -> ClassShape {
        // Bounds like 2L−3 can be negative for small L; clamp to 0, which
        // forbids all parts and leaves only the empty partition.
        fn clamp(bound: i64) -> Option<u32> {
            Some(bound.max(0) as u32)
        }
        match *self {
            PartitionClass::OddBounded(l) => ClassShape {
                max_part: clamp(2 * l as i64 - 1),
                min_part: 1,
                odd: true,
                distinct: false,
                max_parts: None,
                void: false,
            },
            PartitionClass::DistinctBounded(l) => ClassShape {
                max_part: Some(l),
                min_part: 1,
                odd: false,
                distinct: true,
                max_parts: None,
                void: false,
            },
            PartitionClass::OddUnbounded => ClassShape {
                max_part: None,
                min_part: 1,
                odd: true,
                distinct: false,
                max_parts: None,
                void: false,
            },
            PartitionClass::DistinctUnbounded => ClassShape {
                max_part: None,
                min_part: 1,
                odd: false,
                distinct: true,
                max_parts: None,
                void: false,
            },
            PartitionClass::BoxBounded { max_part, max_parts } => ClassShape {
                max_part: Some(max_part),
                min_part: 1,
                odd: false,
                distinct: false,
                max_parts: Some(max_parts as usize),
                void: false,
            },
            PartitionClass::OddSingleton(l) => ClassShape {
                max_part: clamp(2 * l as i64 - 3),
                min_part: 1,
                odd: true,
                distinct: false,
                max_parts: Some(1),
                void: false,
            },
            PartitionClass::DistinctNoOnes(l) => ClassShape {
                max_part: clamp(l as i64 - 1),
                min_part: 2,
                odd: false,
                distinct: true,
                max_parts: None,
                void: false,
            },
            PartitionClass::BoundedSingleton(l) => ClassShape {
                max_part: clamp(l as i64 - 2),
                min_part: 1,
                odd: false,
                distinct: false,
                max_parts: Some(1),
                void: l < 2,
            },
        }
    }

    /// Membership test. Each condition is checked per part, so `∅` passes
    /// unless the class is empty outright.
    pub fn contains(&self, pi: &Partition) -> bool {
        let shape = self.shape();
        if shape.void {
            return false;
        }
        if let Some(maxp) = shape.max_parts {
            if pi.num_parts() > maxp {
                return false;
            }
        }
        if shape.distinct && !pi.all_parts_distinct() {
            return false;
        }
        pi.parts().iter().all(|&p| {
            p >= shape.min_part
                && (!shape.odd || p % 2 == 1)
                && shape.max_part.map_or(true, |b| p <= b)
        })
    }

    /// Streams the partitions of `n` in this class in reverse-lexicographic
    /// order (largest first part first; ties broken by the next part, and so
    /// on). The stream is lazy: partitions are produced one at a time.
    pub fn enumerate(&self, n: u64) -> ClassIter {
        ClassIter::new(self.shape(), n)
    }

    /// Number of partitions of `n` in the class.
    pub fn count(&self, n: u64) -> u64 {
        self.enumerate(n).count() as u64
    }
}

/// Lazy depth-first enumerator behind [`PartitionClass::enumerate`].
///
/// Each stack frame owns the remaining sum at its level and the largest part
/// value still to be tried there; descending candidate order at every level
/// yields reverse-lexicographic output order.
pub struct ClassIter {
    shape: ClassShape,
    /// One frame per chosen prefix part, plus the root.
    stack: Vec<Frame>,
    prefix: Vec<u32>,
}

struct Frame {
    remaining: u64,
    /// Largest candidate value not yet tried at this level.
    candidate: i64,
    emitted: bool,
}

impl ClassIter {
    fn new(shape: ClassShape, n: u64) -> Self {
        let mut cap = n.min(u32::MAX as u64) as i64;
        if let Some(b) = shape.max_part {
            cap = cap.min(b as i64);
        }
        // An outright-empty class starts with no frames, so the stream ends
        // immediately.
        let stack = if shape.void {
            Vec::new()
        } else {
            vec![Frame { remaining: n, candidate: cap, emitted: false }]
        };
        ClassIter { shape, stack, prefix: Vec::new() }
    }

    /// Largest valid candidate for the next part given the level's remaining
    /// sum and candidate ceiling, or None when the level is exhausted.
    fn next_candidate(shape: &ClassShape, depth: usize, remaining: u64, ceiling: i64) -> Option<u32> {
        if let Some(maxp) = shape.max_parts {
            if depth >= maxp {
                return None;
            }
        }
        let mut c = ceiling.min(remaining as i64);
        if shape.odd && c >= 1 && c % 2 == 0 {
            c -= 1;
        }
        if c < shape.min_part as i64 {
            None
        } else {
            Some(c as u32)
        }
    }
}

impl Iterator for ClassIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let frame = self.stack.last_mut()?;
            if frame.remaining == 0 && !frame.emitted {
                frame.emitted = true;
                return Some(Partition::from_sorted_unchecked(self.prefix.clone()));
            }
            let (remaining, ceiling) = (frame.remaining, frame.candidate);
            let choice = if remaining == 0 {
                None
            } else {
                Self::next_candidate(&self.shape, self.prefix.len(), remaining, ceiling)
            };
            match choice {
                Some(c) => {
                    frame.candidate = c as i64 - 1;
                    let child_cap = if self.shape.distinct { c as i64 - 1 } else { c as i64 };
                    self.prefix.push(c);
                    self.stack.push(Frame {
                        remaining: remaining - c as u64,
                        candidate: child_cap,
                        emitted: false,
                    });
                }
                None => {
                    self.stack.pop();
                    self.prefix.pop();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn constructor_validates_order_and_positivity() {
        assert!(Partition::new(vec![3, 4]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
        assert_eq!(pt(&[5, 5, 2]).size(), 12);
    }

    #[test]
    fn literal_parsing_round_trips() {
        let pi: Partition = "7,5,3,3".parse().unwrap();
        assert_eq!(pi, pt(&[7, 5, 3, 3]));
        assert_eq!(pi.to_string(), "7,5,3,3");
        assert_eq!(" 4 , 2 ".parse::<Partition>().unwrap(), pt(&[4, 2]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("2,3".parse::<Partition>().is_err()); // must be non-increasing
    }

    #[test]
    fn conjugate_matches_transpose() {
        assert_eq!(pt(&[5, 3, 2]).conjugate(), pt(&[3, 3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // Independent oracle: transpose the explicit cell set.
        for parts in [&[6, 4, 4, 1][..], &[3, 3, 3], &[7], &[2, 1, 1, 1]] {
            let pi = pt(parts);
            let mut cells: Vec<(usize, usize)> = Vec::new();
            for (i, &p) in pi.parts().iter().enumerate() {
                for j in 0..p as usize {
                    cells.push((j, i)); // transposed
                }
            }
            let rows = cells.iter().map(|&(r, _)| r).max().map(|m| m + 1).unwrap_or(0);
            let transposed: Vec<u32> = (0..rows)
                .map(|r| cells.iter().filter(|&&(rr, _)| rr == r).count() as u32)
                .collect();
            assert_eq!(pi.conjugate(), pt(&transposed));
        }
    }

    #[test]
    fn conjugate_is_involution() {
        for parts in [&[][..], &[1], &[4, 4, 2, 1], &[9, 3, 3, 1, 1]] {
            let pi = pt(parts);
            assert_eq!(pi.conjugate().conjugate(), pi);
        }
    }

    #[test]
    fn hook_lengths_of_fig_example() {
        let pi = pt(&[8, 6, 5, 2, 1]);
        assert_eq!(pi.hook_length(1, 1).unwrap(), 12);
        assert_eq!(pi.hook_length(3, 3).unwrap(), 3);
        assert!(pi.hook_length(5, 2).is_err());
        assert!(pi.hook_length(0, 1).is_err());
        let expected: Vec<Vec<u64>> = vec![
            vec![12, 10, 8, 7, 6, 4, 2, 1],
            vec![9, 7, 5, 4, 3, 1],
            vec![7, 5, 3, 2, 1],
            vec![3, 1],
            vec![1],
        ];
        let flat: Vec<u64> = expected.iter().flatten().copied().collect();
        assert_eq!(pi.hook_lengths(), flat);
    }

    #[test]
    fn hook_count_and_profile_agree() {
        let pi = pt(&[5, 3, 3, 1]);
        let profile = pi.hook_count_profile(12);
        for t in 1..=12 {
            assert_eq!(profile[t as usize], pi.hook_count(t));
        }
        // Every cell has a hook length between 1 and |λ| + rows − 1, so the
        // profile sums to the number of cells.
        let total: u64 = pi.hook_count_profile(64).iter().sum();
        assert_eq!(total, pi.size());
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(pt(&[7, 6, 4, 1]).alternating_sum(), 4);
        assert_eq!(pt(&[6, 5]).alternating_sum(), 1);
        assert_eq!(Partition::empty().alternating_sum(), 0);
    }

    #[test]
    fn hook2_profiles_match_direct_counts() {
        // Distinct side: gaps ≥ 2 (including the virtual final gap).
        assert_eq!(hook2_profile_distinct(&pt(&[5, 2])).unwrap(), 2);
        assert_eq!(hook2_profile_distinct(&pt(&[4, 3])).unwrap(), 1);
        assert_eq!(hook2_profile_distinct(&pt(&[4, 2, 1])).unwrap(), 1);
        assert!(hook2_profile_distinct(&pt(&[3, 3])).is_err());
        // Odd side: sizes > 1 plus repeated sizes.
        assert_eq!(hook2_profile_odd(&pt(&[3, 3, 1])).unwrap(), 2);
        assert_eq!(hook2_profile_odd(&pt(&[1, 1])).unwrap(), 1);
        assert_eq!(hook2_profile_odd(&pt(&[5])).unwrap(), 1);
        assert!(hook2_profile_odd(&pt(&[2, 1])).is_err());
        // Both profiles agree with the raw hook census on their domains.
        for n in 0..=18u64 {
            for pi in PartitionClass::OddUnbounded.enumerate(n) {
                assert_eq!(hook2_profile_odd(&pi).unwrap(), pi.hook_count(2), "odd {pi}");
            }
            for pi in PartitionClass::DistinctUnbounded.enumerate(n) {
                assert_eq!(
                    hook2_profile_distinct(&pi).unwrap(),
                    pi.hook_count(2),
                    "distinct {pi}"
                );
            }
        }
    }

    #[test]
    fn enumeration_order_is_reverse_lexicographic() {
        let got: Vec<Partition> = PartitionClass::DistinctBounded(5).enumerate(7).collect();
        assert_eq!(got, vec![pt(&[5, 2]), pt(&[4, 3]), pt(&[4, 2, 1])]);
        let got: Vec<Partition> = PartitionClass::OddBounded(2).enumerate(4).collect();
        assert_eq!(got, vec![pt(&[3, 1]), pt(&[1, 1, 1, 1])]);
        let got: Vec<Partition> = PartitionClass::OddBounded(1).enumerate(2).collect();
        assert_eq!(got, vec![pt(&[1, 1])]);
    }

    #[test]
    fn enumeration_of_zero_yields_empty_partition_once() {
        for class in [
            PartitionClass::OddBounded(3),
            PartitionClass::DistinctUnbounded,
            PartitionClass::OddSingleton(1),
            PartitionClass::BoxBounded { max_part: 0, max_parts: 0 },
        ] {
            let got: Vec<Partition> = class.enumerate(0).collect();
            assert_eq!(got, vec![Partition::empty()]);
        }
    }

    #[test]
    fn enumeration_agrees_with_membership_and_dp_counts() {
        // Independent oracle: bounded-knapsack DP over the allowed parts.
        fn dp_count(parts: &[u64], n: u64, distinct: bool) -> u64 {
            let mut dp = vec![0u64; n as usize + 1];
            dp[0] = 1;
            for &p in parts {
                if distinct {
                    for j in (p..=n).rev() {
                        dp[j as usize] += dp[(j - p) as usize];
                    }
                } else {
                    for j in p..=n {
                        dp[j as usize] += dp[(j - p) as usize];
                    }
                }
            }
            dp[n as usize]
        }
        for n in 0..=24u64 {
            let odd: Vec<u64> = (1..=n.max(1)).filter(|p| p % 2 == 1).collect();
            let all: Vec<u64> = (1..=n.max(1)).collect();
            assert_eq!(
                PartitionClass::OddUnbounded.count(n),
                dp_count(&odd, n, false),
                "odd n={n}"
            );
            assert_eq!(
                PartitionClass::DistinctUnbounded.count(n),
                dp_count(&all, n, true),
                "distinct n={n}"
            );
            let bounded: Vec<u64> = (1..=5).filter(|p| p % 2 == 1).collect();
            assert_eq!(
                PartitionClass::OddBounded(3).count(n),
                dp_count(&bounded, n, false),
                "odd≤5 n={n}"
            );
        }
        // Every enumerated partition is a member, members are pairwise
        // distinct, and membership over the box class matches enumeration.
        for n in 0..=14u64 {
            for class in [
                PartitionClass::OddBounded(2),
                PartitionClass::DistinctBounded(4),
                PartitionClass::DistinctNoOnes(5),
                PartitionClass::BoundedSingleton(6),
                PartitionClass::BoxBounded { max_part: 4, max_parts: 3 },
            ] {
                let all: Vec<Partition> = class.enumerate(n).collect();
                for pi in &all {
                    assert!(class.contains(pi), "{class:?} should contain {pi}");
                    assert_eq!(pi.size(), n);
                }
                let mut dedup = all.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len(), "duplicates from {class:?}");
                let brute = PartitionClass::BoxBounded {
                    max_part: n.max(1) as u32,
                    max_parts: n.max(1) as u32,
                }
                .enumerate(n)
                .filter(|pi| class.contains(pi))
                .count();
                assert_eq!(all.len(), brute, "membership mismatch for {class:?} at n={n}");
            }
        }
    }

    #[test]
    fn restrictive_bounds_leave_only_the_empty_partition() {
        // OddSingleton(1) allows parts ≤ −1, i.e. none: ∅ is still a member.
        assert!(PartitionClass::OddSingleton(1).contains(&Partition::empty()));
        assert_eq!(PartitionClass::OddSingleton(1).count(0), 1);
        assert_eq!(PartitionClass::OddSingleton(1).count(3), 0);
        assert!(PartitionClass::DistinctNoOnes(1).contains(&Partition::empty()));
        assert_eq!(PartitionClass::DistinctNoOnes(1).count(2), 0);
        // DistinctNoOnes excludes part 1 but allows ∅.
        assert_eq!(PartitionClass::DistinctNoOnes(4).count(1), 0);
        let members: Vec<Partition> = PartitionClass::DistinctNoOnes(4).enumerate(5).collect();
        assert_eq!(members, vec![pt(&[3, 2])]);
    }

    #[test]
    fn bounded_singleton_below_two_is_empty_outright() {
        // The class generating function is 1 + q + … + q^{L−2}; at L = 1 it
        // is the empty sum, so the class offers nothing — not even ∅.
        for l in [0, 1] {
            assert!(!PartitionClass::BoundedSingleton(l).contains(&Partition::empty()));
            assert_eq!(PartitionClass::BoundedSingleton(l).count(0), 0);
            assert_eq!(PartitionClass::BoundedSingleton(l).enumerate(0).count(), 0);
        }
        // From L = 2 on, the constant term is back and the count per size
        // matches the geometric sum's coefficients.
        assert_eq!(PartitionClass::BoundedSingleton(2).count(0), 1);
        assert_eq!(PartitionClass::BoundedSingleton(2).count(1), 0);
        assert_eq!(PartitionClass::BoundedSingleton(5).count(3), 1);
        assert_eq!(PartitionClass::BoundedSingleton(5).count(4), 0);
    }

    #[test]
    fn count_one_part_tripled_small_values() {
        assert_eq!(count_one_part_tripled(0), 0);
        assert_eq!(count_one_part_tripled(1), 0);
        assert_eq!(count_one_part_tripled(2), 0);
        assert_eq!(count_one_part_tripled(3), 1); // (1,1,1)
        assert_eq!(count_one_part_tripled(4), 0); // 1,1,1,1 repeats four times; no other profile fits
        assert_eq!(count_one_part_tripled(5), 1); // (2,1,1,1)
    }

    #[test]
    fn count_one_part_tripled_matches_profile_definition() {
        // Cross-check the filter against a direct multiplicity map.
        use std::collections::BTreeMap;
        for n in 0..=20u64 {
            let brute = PartitionClass::BoxBounded { max_part: n.max(1) as u32, max_parts: n.max(1) as u32 }
                .enumerate(n)
                .filter(|pi| {
                    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
                    for &p in pi.parts() {
                        *mult.entry(p).or_insert(0) += 1;
                    }
                    let threes = mult.values().filter(|&&m| m == 3).count();
                    let ones = mult.values().filter(|&&m| m == 1).count();
                    threes == 1 && threes + ones == mult.len()
                })
                .count() as u64;
            assert_eq!(count_one_part_tripled(n), brute, "n={n}");
        }
    }

    #[test]
    fn render_plain_cells() {
        let s = pt(&[5, 3, 2]).render_young(Render::Cells);
        let rows: Vec<&str> = s.lines().collect();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].matches("[]").count(), 5);
        assert_eq!(rows[1].matches("[]").count(), 3);
        assert_eq!(rows[2].matches("[]").count(), 2);
    }

    #[test]
    fn render_hook_labels_match_cellwise() {
        let s = pt(&[8, 6, 5, 2, 1]).render_young(Render::HookLengths);
        let parsed: Vec<Vec<u64>> = s
            .lines()
            .map(|line| line.split_whitespace().map(|w| w.parse().unwrap()).collect())
            .collect();
        let expected = vec![
            vec![12, 10, 8, 7, 6, 4, 2, 1],
            vec![9, 7, 5, 4, 3, 1],
            vec![7, 5, 3, 2, 1],
            vec![3, 1],
            vec![1],
        ];
        assert_eq!(parsed, expected);
    }
}
