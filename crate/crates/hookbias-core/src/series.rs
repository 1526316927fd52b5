//! Truncated formal power series in `q` with exact rational coefficients.
//!
//! A [`TruncatedSeries`] stores the coefficients `c_0, …, c_N` of a series
//! modulo `q^{N+1}`; `N` is the truncation order. All arithmetic is exact:
//! coefficients are arbitrary-precision rationals, and every identity in this
//! crate stays within the integers (a non-unit denominator anywhere outside
//! the hook-product checks would indicate a bug).
//!
//! Invariants:
//! - `coeffs.len() == trunc + 1` always;
//! - binary operations on series with different truncation orders truncate
//!   the result to the smaller order;
//! - Gaussian binomials are produced by the q-Pascal recurrence, never by
//!   dividing q-Pochhammer symbols.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::Sign as BigSign;
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of factors in a q-Pochhammer-style product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductLength {
    /// A fixed number of factors; zero or negative means the empty product 1.
    Finite(i64),
    /// Infinitely many factors (truncation makes the product finite).
    Infinite,
}

/// A power series truncated at order `trunc`: coefficients of `q^0 … q^trunc`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    trunc: usize,
    coeffs: Vec<BigRational>,
}

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncatedSeries {
    /// The zero series at truncation order `trunc`.
    pub fn zero(trunc: usize) -> Self {
        TruncatedSeries { trunc, coeffs: vec![BigRational::zero(); trunc + 1] }
    }

    /// The constant series 1.
    pub fn one(trunc: usize) -> Self {
        Self::monomial_int(1, 0, trunc)
    }

    /// `coeff · q^exp` (zero series if `exp > trunc`).
    pub fn monomial(coeff: BigRational, exp: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if exp <= trunc {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// Integer convenience form of [`TruncatedSeries::monomial`].
    pub fn monomial_int(coeff: i64, exp: usize, trunc: usize) -> Self {
        Self::monomial(rat_int(coeff), exp, trunc)
    }

    /// Builds a series from the integer coefficients `c_0, c_1, …` (shorter
    /// lists are zero-padded; longer lists are truncated).
    pub fn from_int_coeffs(coeffs: &[i64], trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for (k, &c) in coeffs.iter().enumerate().take(trunc + 1) {
            s.coeffs[k] = rat_int(c);
        }
        s
    }

    /// Builds a series from rational coefficients, with the same padding and
    /// truncation behavior as [`TruncatedSeries::from_int_coeffs`].
    pub fn from_rationals(coeffs: &[BigRational], trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for (k, c) in coeffs.iter().enumerate().take(trunc + 1) {
            s.coeffs[k] = c.clone();
        }
        s
    }

    /// `1 + q^step + q^{2·step} + … + q^{(terms−1)·step}`, the geometric sum
    /// `(1 − q^{terms·step})/(1 − q^step)`. Zero series when `terms ≤ 0`.
    pub fn geometric_sum(step: usize, terms: i64, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if terms <= 0 {
            return s;
        }
        let mut exp = 0usize;
        for _ in 0..terms {
            if exp > trunc {
                break;
            }
            s.coeffs[exp] = BigRational::one();
            exp += step.max(1);
            if step == 0 {
                break;
            }
        }
        s
    }

    /// `1/(1 − q^step) = 1 + q^step + q^{2·step} + …` within the window.
    pub fn geometric_inf(step: usize, trunc: usize) -> Self {
        assert!(step >= 1, "geometric_inf needs a positive step");
        let mut s = Self::zero(trunc);
        let mut exp = 0usize;
        while exp <= trunc {
            s.coeffs[exp] = BigRational::one();
            exp += step;
        }
        s
    }

    /// `1/(1 + q^step) = 1 − q^step + q^{2·step} − …` within the window.
    pub fn alternating_geometric_inf(step: usize, trunc: usize) -> Self {
        assert!(step >= 1, "alternating_geometric_inf needs a positive step");
        let mut s = Self::zero(trunc);
        let mut exp = 0usize;
        let mut sign = 1i64;
        while exp <= trunc {
            s.coeffs[exp] = rat_int(sign);
            exp += step;
            sign = -sign;
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Coefficient of `q^k`; panics when `k` exceeds the truncation order.
    pub fn coeff(&self, k: usize) -> &BigRational {
        assert!(
            k <= self.trunc,
            "coefficient {k} beyond truncation order {}",
            self.trunc
        );
        &self.coeffs[k]
    }

    /// Coefficient of `q^k` as an `i64`; panics on non-integers or overflow.
    /// Convenient in tests, where all values are small integers.
    pub fn coeff_i64(&self, k: usize) -> i64 {
        let c = self.coeff(k);
        assert!(c.is_integer(), "coefficient of q^{k} is not an integer: {c}");
        let digits = c.numer().to_string();
        digits.parse().expect("coefficient does not fit i64")
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().enumerate()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when every stored coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// True when every stored coefficient is ≥ 0.
    pub fn is_nonneg(&self) -> bool {
        self.first_negative().is_none()
    }

    /// The first `(k, c_k)` with `c_k < 0`, if any.
    pub fn first_negative(&self) -> Option<(usize, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
            .map(|(k, c)| (k, c.clone()))
    }

    /// Exponent of the lowest nonzero coefficient, if the series is nonzero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exponent of the highest nonzero stored coefficient, if any. (For a
    /// polynomial of degree ≤ `trunc` this is its degree.)
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Returns a copy truncated (or zero-extended — only valid when the
    /// series is known to be a polynomial of degree ≤ `trunc`) to `new_trunc`.
    pub fn truncate(&self, new_trunc: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(new_trunc + 1, BigRational::zero());
        TruncatedSeries { trunc: new_trunc, coeffs }
    }

    /// True when the two series agree on every order up to the smaller of the
    /// two truncation orders. This is the equality notion used by identity
    /// checks; `==` additionally requires equal truncation orders.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.trunc.min(other.trunc);
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    /// First order (up to the smaller truncation) where the two series
    /// differ, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, BigRational, BigRational)> {
        let n = self.trunc.min(other.trunc);
        (0..=n)
            .find(|&k| self.coeffs[k] != other.coeffs[k])
            .map(|k| (k, self.coeffs[k].clone(), other.coeffs[k].clone()))
    }

    /// Multiplies by the monomial `coeff · q^exp` (shifting out the top).
    pub fn mul_monomial(&self, coeff: i64, exp: usize) -> Self {
        let mut out = Self::zero(self.trunc);
        if coeff == 0 {
            return out;
        }
        let c = rat_int(coeff);
        for k in 0..=self.trunc {
            if k + exp > self.trunc {
                break;
            }
            if !self.coeffs[k].is_zero() {
                out.coeffs[k + exp] = &self.coeffs[k] * &c;
            }
        }
        out
    }

    /// Multiplies every coefficient by the rational `factor`.
    pub fn scale(&self, factor: &BigRational) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        TruncatedSeries { trunc: self.trunc, coeffs }
    }

    /// Sum of all stored coefficients — the specialization `q → 1` of a
    /// polynomial fully contained in the window.
    pub fn sum_coeffs(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// Multiplicative inverse. The constant term must be ＋1 or −1 (every
    /// inverted series in this crate is a unit of that form).
    pub fn invert_unit(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.is_integer() || !c0.numer().magnitude().is_one() {
            return Err(Error::NonUnitDivisor);
        }
        let mut inv = Self::zero(self.trunc);
        inv.coeffs[0] = c0.clone(); // ±1 is its own inverse
        for k in 1..=self.trunc {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !inv.coeffs[k - j].is_zero() {
                    acc += &self.coeffs[j] * &inv.coeffs[k - j];
                }
            }
            if !acc.is_zero() {
                inv.coeffs[k] = -(acc * c0);
            }
        }
        Ok(inv)
    }

    /// Exact polynomial division `self / divisor`.
    ///
    /// Both operands are treated as the polynomials held in their windows
    /// (callers must pick truncation orders that contain the full support).
    /// A common monomial factor is stripped first; after that the divisor's
    /// constant term must be ±1. Errors with [`Error::InexactDivision`] when
    /// the quotient fails to be a polynomial — i.e. the division leaves a
    /// remainder within the truncation window.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        let trunc = self.trunc.min(divisor.trunc);
        let Some(vb) = divisor.valuation() else {
            return Err(Error::NonUnitDivisor);
        };
        if self.is_zero() {
            return Ok(Self::zero(trunc));
        }
        let va = self.valuation().expect("nonzero series has a valuation");
        if va < vb {
            return Err(Error::InexactDivision);
        }
        // Strip q^vb from both operands.
        let shifted_trunc = trunc - vb;
        let mut a = Self::zero(shifted_trunc);
        a.coeffs[..=shifted_trunc.min(self.trunc - vb)]
            .clone_from_slice(&self.coeffs[vb..=(vb + shifted_trunc).min(self.trunc)]);
        let mut b = Self::zero(shifted_trunc);
        b.coeffs[..=shifted_trunc.min(divisor.trunc - vb)]
            .clone_from_slice(&divisor.coeffs[vb..=(vb + shifted_trunc).min(divisor.trunc)]);

        let quotient = &a * &b.invert_unit()?;
        // The quotient is a genuine polynomial only if nothing survives
        // above deg(a) − deg(b); anything there is a disguised remainder.
        let deg_a = a.degree().expect("a is nonzero");
        let deg_b = b.degree().expect("b is nonzero");
        if deg_b > deg_a {
            return Err(Error::InexactDivision);
        }
        let bound = deg_a - deg_b;
        if quotient.coeffs[bound + 1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        debug_assert!((&quotient * &b).agrees_with(&a), "quotient times divisor must reproduce the dividend");
        Ok(quotient.truncate(trunc))
    }
}

/// The product `∏_{i=0}^{len−1} (1 − sign · q^{start + i·step})` truncated at
/// `trunc`. `sign` must be ＋1 (factors `1 − q^…`) or −1 (factors `1 + q^…`).
/// A finite length ≤ 0 is the empty product 1. Factors whose exponent exceeds
/// the truncation order are invisible within the window and are skipped, so
/// `ProductLength::Infinite` terminates.
pub fn poch(sign: i32, start: usize, step: usize, length: ProductLength, trunc: usize) -> TruncatedSeries {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    assert!(step >= 1, "step must be positive");
    let mut acc = TruncatedSeries::one(trunc);
    let count = match length {
        ProductLength::Finite(len) if len <= 0 => return acc,
        ProductLength::Finite(len) => Some(len as usize),
        ProductLength::Infinite => None,
    };
    let mut exp = start;
    let mut i = 0usize;
    loop {
        if let Some(c) = count {
            if i >= c {
                break;
            }
        }
        if exp > trunc {
            break; // remaining factors are ≡ 1 in the window
        }
        let factor = &TruncatedSeries::one(trunc) - &TruncatedSeries::monomial_int(sign as i64, exp, trunc);
        acc = &acc * &factor;
        exp += step;
        i += 1;
    }
    acc
}

/// Gaussian binomial coefficient `[m; n]_{q^r}` as a truncated series.
///
/// Out-of-range indices (`n < 0` or `n > m`) give the zero series. The
/// polynomial is built by the q-Pascal recurrence
/// `[a; b] = [a−1; b−1] + q^b · [a−1; b]`, then the exponents are scaled
/// by `r` and truncated.
pub fn gaussian_binomial(m: i64, n: i64, r: usize, trunc: usize) -> TruncatedSeries {
    assert!(r >= 1, "exponent scale must be positive");
    if n < 0 || n > m {
        return TruncatedSeries::zero(trunc);
    }
    let (m, n) = (m as usize, n as usize);
    // rows[b] = coefficients of [a; b]_q for the current a.
    let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    for a in 1..=m {
        let top = n.min(a);
        let mut next: Vec<Vec<BigRational>> = Vec::with_capacity(top + 1);
        for b in 0..=top {
            if b == 0 {
                next.push(vec![BigRational::one()]);
                continue;
            }
            if b == a {
                next.push(vec![BigRational::one()]);
                continue;
            }
            // [a; b] = [a−1; b−1] + q^b · [a−1; b]
            let left = &rows[b - 1];
            let right = &rows[b];
            let mut poly = vec![BigRational::zero(); (b * (a - b)) + 1];
            for (k, c) in left.iter().enumerate() {
                poly[k] += c;
            }
            for (k, c) in right.iter().enumerate() {
                poly[k + b] += c;
            }
            next.push(poly);
        }
        rows = next;
    }
    let poly = &rows[n];
    let mut out = TruncatedSeries::zero(trunc);
    for (k, c) in poly.iter().enumerate() {
        let exp = k * r;
        if exp <= trunc {
            out.coeffs[exp] = c.clone();
        }
    }
    out
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let coeffs = (0..=trunc).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        TruncatedSeries { trunc, coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let coeffs = (0..=trunc).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        TruncatedSeries { trunc, coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        TruncatedSeries { trunc: self.trunc, coeffs }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let mut coeffs = vec![BigRational::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(trunc + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(trunc + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { trunc, coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    /// Polynomial-style rendering, e.g. `1 + q^2 - 2*q^5 + O(q^9)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[{self}]")
    }
}

fn serialize_rational<S: Serializer>(c: &BigRational, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    if c.is_integer() {
        let n = c.numer();
        // Common case: fits a machine integer and serializes as a JSON number.
        if let Ok(v) = i64::try_from(n.clone()) {
            return serializer.serialize_i64(v);
        }
        return serializer.serialize_str(&n.to_string());
    }
    serializer.serialize_str(&format!("{}/{}", c.numer(), c.denom()))
}

impl Serialize for TruncatedSeries {
    /// `{"trunc": N, "coeffs": [c_0, …, c_N]}` with integer entries where
    /// possible and `"p/q"` strings otherwise.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a [BigRational]);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                struct Rat<'a>(&'a BigRational);
                impl Serialize for Rat<'_> {
                    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                        serialize_rational(self.0, s)
                    }
                }
                for c in self.0 {
                    seq.serialize_element(&Rat(c))?;
                }
                seq.end()
            }
        }
        let mut state = serializer.serialize_struct("TruncatedSeries", 2)?;
        state.serialize_field("trunc", &self.trunc)?;
        state.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        state.end()
    }
}

fn parse_rational_value(v: &serde_json::Value) -> Option<BigRational> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Some(rat_int(i))
            } else {
                n.as_u64().map(|u| BigRational::from_integer(BigInt::from(u)))
            }
        }
        serde_json::Value::String(s) => {
            let (numer, denom) = match s.split_once('/') {
                Some((a, b)) => (a, b),
                None => (s.as_str(), "1"),
            };
            let n: BigInt = numer.parse().ok()?;
            let d: BigInt = denom.parse().ok()?;
            if d.sign() == BigSign::NoSign {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        _ => None,
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            trunc: usize,
            coeffs: Vec<serde_json::Value>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.trunc + 1 {
            return Err(de::Error::custom(format!(
                "expected {} coefficients, found {}",
                raw.trunc + 1,
                raw.coeffs.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for v in &raw.coeffs {
            let c = parse_rational_value(v)
                .ok_or_else(|| de::Error::custom(format!("bad coefficient entry: {v}")))?;
            coeffs.push(c);
        }
        Ok(TruncatedSeries { trunc: raw.trunc, coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poch_small_products() {
        // (q; q^2)_2 = (1 − q)(1 − q^3)
        let s = poch(1, 1, 2, ProductLength::Finite(2), 5);
        assert_eq!(s, TruncatedSeries::from_int_coeffs(&[1, -1, 0, -1, 1, 0], 5));
        // (−q^2; q)_2 = (1 + q^2)(1 + q^3)
        let s = poch(-1, 2, 1, ProductLength::Finite(2), 6);
        assert_eq!(s, TruncatedSeries::from_int_coeffs(&[1, 0, 1, 1, 0, 1, 0], 6));
        // Negative lengths are the empty product.
        assert_eq!(poch(1, 1, 2, ProductLength::Finite(-3), 4), TruncatedSeries::one(4));
        assert_eq!(poch(1, 1, 2, ProductLength::Finite(0), 4), TruncatedSeries::one(4));
    }

    #[test]
    fn poch_infinite_truncates() {
        // 1/(q; q)_∞ counts all partitions: invert to check a few values.
        let euler = poch(1, 1, 1, ProductLength::Infinite, 10);
        let inv = euler.invert_unit().unwrap();
        let p: Vec<i64> = (0..=10).map(|k| inv.coeff_i64(k)).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn euler_odd_distinct_product_identity() {
        // (−q; q)_∞ · (q; q^2)_∞ = 1.
        let n = 40;
        let distinct = poch(-1, 1, 1, ProductLength::Infinite, n);
        let odd = poch(1, 1, 2, ProductLength::Infinite, n);
        assert_eq!(&distinct * &odd, TruncatedSeries::one(n));
    }

    #[test]
    fn gaussian_small_values() {
        let g = gaussian_binomial(4, 2, 1, 6);
        assert_eq!(g, TruncatedSeries::from_int_coeffs(&[1, 1, 2, 1, 1, 0, 0], 6));
        assert_eq!(gaussian_binomial(2, 3, 1, 4), TruncatedSeries::zero(4));
        assert_eq!(gaussian_binomial(-1, 2, 1, 4), TruncatedSeries::zero(4));
        assert_eq!(gaussian_binomial(5, 0, 1, 4), TruncatedSeries::one(4));
        assert_eq!(gaussian_binomial(5, 5, 1, 4), TruncatedSeries::one(4));
        // Exponent scaling: [2;1]_{q^3} = 1 + q^3.
        assert_eq!(
            gaussian_binomial(2, 1, 3, 5),
            TruncatedSeries::from_int_coeffs(&[1, 0, 0, 1, 0, 0], 5)
        );
    }

    #[test]
    fn gaussian_symmetry_and_classical_limit() {
        for m in 0..=9i64 {
            for n in 0..=m {
                let a = gaussian_binomial(m, n, 1, 81);
                let b = gaussian_binomial(m, m - n, 1, 81);
                assert_eq!(a, b, "[{m};{n}] vs [{m};{m}-{n}]");
                // q → 1 gives the ordinary binomial coefficient.
                let mut choose = 1i64;
                for i in 0..n {
                    choose = choose * (m - i) / (i + 1);
                }
                assert_eq!(a.sum_coeffs(), BigRational::from_integer(BigInt::from(choose)));
            }
        }
    }

    #[test]
    fn invert_unit_of_one_minus_q() {
        let s = TruncatedSeries::from_int_coeffs(&[1, -1], 4).truncate(4);
        let inv = s.invert_unit().unwrap();
        assert_eq!(inv, TruncatedSeries::from_int_coeffs(&[1, 1, 1, 1, 1], 4));
        assert_eq!(&s * &inv, TruncatedSeries::one(4));
        // Constant term −1 works; constant 2 or 0 does not.
        assert!(TruncatedSeries::from_int_coeffs(&[-1, 1], 3).invert_unit().is_ok());
        assert!(TruncatedSeries::from_int_coeffs(&[2, 1], 3).invert_unit().is_err());
        assert!(TruncatedSeries::zero(3).invert_unit().is_err());
    }

    #[test]
    fn divide_exact_examples() {
        let num = TruncatedSeries::from_int_coeffs(&[1, 0, 0, 0, -1], 4); // 1 − q^4
        let den = TruncatedSeries::from_int_coeffs(&[1, 0, -1, 0, 0], 4); // 1 − q^2
        let q = num.divide_exact(&den).unwrap();
        assert_eq!(q, TruncatedSeries::from_int_coeffs(&[1, 0, 1, 0, 0], 4));
        // Non-divisible pair leaves a remainder inside the window.
        let bad = TruncatedSeries::from_int_coeffs(&[1, 1, 1, 0, 0], 4); // 1 + q + q^2
        let den2 = TruncatedSeries::from_int_coeffs(&[1, -1, 0, 0, 0], 4);
        assert_eq!(bad.divide_exact(&den2), Err(Error::InexactDivision));
        // Common monomial factors are stripped: q^3(1−q) / q(1−q) = q^2 …
        let a = TruncatedSeries::from_int_coeffs(&[0, 0, 0, 1, -1], 4);
        let b = TruncatedSeries::from_int_coeffs(&[0, 1, -1, 0, 0], 4);
        let q2 = a.divide_exact(&b).unwrap();
        assert_eq!(q2, TruncatedSeries::from_int_coeffs(&[0, 0, 1, 0, 0], 4));
        // … while dividing the smaller valuation by the larger fails.
        assert_eq!(b.divide_exact(&a), Err(Error::InexactDivision));
        // Zero dividend is fine; zero divisor is not.
        assert!(TruncatedSeries::zero(4).divide_exact(&den).is_ok());
        assert!(den.divide_exact(&TruncatedSeries::zero(4)).is_err());
    }

    #[test]
    fn mixed_truncation_takes_the_smaller_window() {
        let a = TruncatedSeries::one(10);
        let b = TruncatedSeries::geometric_inf(1, 5);
        assert_eq!((&a + &b).trunc(), 5);
        assert_eq!((&a * &b).trunc(), 5);
        assert!(a.agrees_with(&TruncatedSeries::one(3)));
    }

    #[test]
    fn geometric_sum_matches_closed_form() {
        // (1 − q^{2L−2})/(1 − q^2) with L = 4 is 1 + q^2 + q^4.
        let g = TruncatedSeries::geometric_sum(2, 3, 8);
        assert_eq!(g, TruncatedSeries::from_int_coeffs(&[1, 0, 1, 0, 1, 0, 0, 0, 0], 8));
        assert_eq!(TruncatedSeries::geometric_sum(2, 0, 4), TruncatedSeries::zero(4));
        assert_eq!(TruncatedSeries::geometric_sum(2, -2, 4), TruncatedSeries::zero(4));
    }

    #[test]
    fn json_round_trip() {
        let s = TruncatedSeries::from_int_coeffs(&[1, 0, -3, 7], 3);
        let text = serde_json::to_string(&s).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["trunc"], 3);
        assert_eq!(v["coeffs"], serde_json::json!([1, 0, -3, 7]));
        let back: TruncatedSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        // Rational coefficients become "p/q" strings.
        let r = TruncatedSeries::monomial(BigRational::new(BigInt::from(3), BigInt::from(4)), 1, 1);
        let text = serde_json::to_string(&r).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["coeffs"][1], "3/4");
        let back: TruncatedSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn display_is_compact() {
        let s = TruncatedSeries::from_int_coeffs(&[1, 0, -2, 1], 3);
        assert_eq!(format!("{s}"), "1 - 2*q^2 + q^3 + O(q^4)");
        assert_eq!(format!("{}", TruncatedSeries::zero(2)), "0 + O(q^3)");
    }
}
