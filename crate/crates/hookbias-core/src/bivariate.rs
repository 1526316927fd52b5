//! Truncated series in `q` with a second marker variable `z`.
//!
//! A [`BivariateSeries`] is a polynomial in the marker `z` whose coefficients
//! are integer q-series truncated at a common order: the term map sends
//! `(marker power, q-exponent)` to an integer coefficient. The marker tracks
//! a statistic (here: the number of hooks of a given length), so marker
//! powers stay small while q-degrees run up to the truncation order.
//!
//! Invariants:
//! - no explicit zero coefficients are stored;
//! - every stored q-exponent is ≤ `trunc`;
//! - mixed-truncation arithmetic truncates to the smaller window.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::series::TruncatedSeries;

/// Polynomial in the marker `z` with truncated integer q-series coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    trunc: usize,
    /// `(marker power, q-exponent) → coefficient`, zeros omitted.
    coeffs: BTreeMap<(u32, usize), BigInt>,
}

impl BivariateSeries {
    /// The zero series at truncation order `trunc`.
    pub fn zero(trunc: usize) -> Self {
        BivariateSeries { trunc, coeffs: BTreeMap::new() }
    }

    /// The constant series 1.
    pub fn one(trunc: usize) -> Self {
        Self::term(0, 1, 0, trunc)
    }

    /// The monomial `coeff · z^marker · q^q_exp` (zero if `q_exp > trunc`).
    pub fn term(marker: u32, coeff: i64, q_exp: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if q_exp <= trunc && coeff != 0 {
            s.coeffs.insert((marker, q_exp), BigInt::from(coeff));
        }
        s
    }

    /// `z^marker · f(q)`. The q-series must have integer coefficients.
    pub fn from_series(marker: u32, f: &TruncatedSeries) -> Self {
        let mut s = Self::zero(f.trunc());
        for (k, c) in f.iter() {
            if c.is_zero() {
                continue;
            }
            assert!(c.is_integer(), "marker coefficient of q^{k} is not an integer: {c}");
            s.coeffs.insert((marker, k), c.numer().clone());
        }
        s
    }

    /// `(a·z + b)^exp` as a marker polynomial (q-degree zero).
    pub fn marker_affine_power(a: i64, b: i64, exp: u32, trunc: usize) -> Self {
        let base = &Self::term(1, a, 0, trunc) + &Self::term(0, b, 0, trunc);
        let mut acc = Self::one(trunc);
        for _ in 0..exp {
            acc = &acc * &base;
        }
        acc
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest marker power with a nonzero coefficient (0 for the zero series).
    pub fn max_marker(&self) -> u32 {
        self.coeffs.keys().map(|&(m, _)| m).max().unwrap_or(0)
    }

    /// Coefficient of `z^marker · q^q_exp`.
    pub fn coeff(&self, marker: u32, q_exp: usize) -> BigInt {
        assert!(q_exp <= self.trunc, "q-exponent {q_exp} beyond truncation order {}", self.trunc);
        self.coeffs.get(&(marker, q_exp)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The q-series multiplying `z^marker`.
    pub fn extract_marker(&self, marker: u32) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.trunc);
        for (&(m, k), c) in &self.coeffs {
            if m == marker {
                s = &s + &TruncatedSeries::monomial(BigRational::from_integer(c.clone()), k, self.trunc);
            }
        }
        s
    }

    /// Specializes the marker to 1, collapsing to a plain q-series.
    pub fn specialize_one(&self) -> TruncatedSeries {
        self.marker_weighted_sum(|_| BigInt::one())
    }

    /// `Σ_m w(m) · [z^m](self)` as a q-series: applies a weight to each
    /// marker power and sums. Weight `m` gives the first moment, weight
    /// `m·(m−1)/2` the pair count, and so on.
    pub fn marker_weighted_sum(&self, weight: impl Fn(u32) -> BigInt) -> TruncatedSeries {
        let mut acc = vec![BigInt::zero(); self.trunc + 1];
        for (&(m, k), c) in &self.coeffs {
            let w = weight(m);
            if !w.is_zero() {
                acc[k] += c * w;
            }
        }
        let mut s = TruncatedSeries::zero(self.trunc);
        for (k, v) in acc.into_iter().enumerate() {
            if !v.is_zero() {
                s = &s + &TruncatedSeries::monomial(BigRational::from_integer(v), k, self.trunc);
            }
        }
        s
    }

    /// Multiplies by a plain q-series (which must have integer coefficients).
    pub fn mul_series(&self, f: &TruncatedSeries) -> Self {
        self * &Self::from_series(0, f)
    }

    fn insert_add(map: &mut BTreeMap<(u32, usize), BigInt>, key: (u32, usize), value: BigInt) {
        use std::collections::btree_map::Entry;
        match map.entry(key) {
            Entry::Vacant(e) => {
                if !value.is_zero() {
                    e.insert(value);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl std::ops::Add for &BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let mut coeffs = BTreeMap::new();
        for (&(m, k), c) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            if k <= trunc {
                BivariateSeries::insert_add(&mut coeffs, (m, k), c.clone());
            }
        }
        BivariateSeries { trunc, coeffs }
    }
}

impl std::ops::Sub for &BivariateSeries {
    type Output = BivariateSeries;
    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let mut coeffs = BTreeMap::new();
        for (&(m, k), c) in &self.coeffs {
            if k <= trunc {
                BivariateSeries::insert_add(&mut coeffs, (m, k), c.clone());
            }
        }
        for (&(m, k), c) in &rhs.coeffs {
            if k <= trunc {
                BivariateSeries::insert_add(&mut coeffs, (m, k), -c.clone());
            }
        }
        BivariateSeries { trunc, coeffs }
    }
}

impl std::ops::Mul for &BivariateSeries {
    type Output = BivariateSeries;
    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let mut coeffs = BTreeMap::new();
        for (&(m1, k1), c1) in &self.coeffs {
            if k1 > trunc {
                continue;
            }
            for (&(m2, k2), c2) in &rhs.coeffs {
                let k = k1 + k2;
                if k > trunc {
                    continue;
                }
                BivariateSeries::insert_add(&mut coeffs, (m1 + m2, k), c1 * c2);
            }
        }
        BivariateSeries { trunc, coeffs }
    }
}
