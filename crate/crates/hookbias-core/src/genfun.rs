//! Closed-form generating functions for hook-length-two statistics.
//!
//! Each function builds a truncated q-series (or a marker-refined bivariate
//! series) from products, geometric sums, Gaussian binomials, and exact
//! polynomial division — never from partition enumeration. The census module
//! provides the independent enumeration route, and the verification layer
//! compares the two; keeping the routes separate is what makes that
//! comparison meaningful.
//!
//! Several statistics have two formula routes on top of the census route
//! (for example, the pair-weighted odd-side series via an assembled
//! five-term form and via a squared-derivative form). These are also kept
//! independent and cross-checked.
//!
//! Throughout, `L` bounds the largest part: `2L − 1` on the odd side, `L` on
//! the distinct side.

use num::{BigInt, BigRational};

use crate::bivariate::BivariateSeries;
use crate::series::{gaussian_binomial, poch, ProductLength, TruncatedSeries};

/// `1/(q; q²)_L`: the generating function for partitions into odd parts at
/// most `2L − 1`.
fn odd_poch_inverse(l: u32, trunc: usize) -> TruncatedSeries {
    poch(1, 1, 2, ProductLength::Finite(l as i64), trunc)
        .invert_unit()
        .expect("(q; q^2)_L has constant term 1")
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// Total number of length-2 hooks over odd partitions with parts ≤ `2L − 1`:
/// `(q² + q³·(1−q^{2L−2})/(1−q²) + q⁶·(1−q^{4L−4})/(1−q⁴)) / (q;q²)_L`.
pub fn hook2_count_odd(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    let u = TruncatedSeries::geometric_sum(2, li - 1, trunc);
    let v = TruncatedSeries::geometric_sum(4, li - 1, trunc);
    let inner = &(&TruncatedSeries::monomial_int(1, 2, trunc) + &u.mul_monomial(1, 3))
        + &v.mul_monomial(1, 6);
    &inner * &odd_poch_inverse(l, trunc)
}

/// Total number of length-2 hooks over distinct partitions with parts ≤ `L`:
/// `q²·(1−q^{L−1})/(1−q)·(−q²;q)_{L−2}`.
pub fn hook2_count_distinct(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    let geom = TruncatedSeries::geometric_sum(1, li - 1, trunc);
    let prod = poch(-1, 2, 1, ProductLength::Finite(li - 2), trunc);
    (&geom * &prod).mul_monomial(1, 2)
}

/// Same statistic as [`hook2_count_distinct`], via the staircase-peeling sum
/// `Σ_{n=1}^{L} q^{n(n+1)/2 + 1}·[L−1; n]_q·[n; 1]_q` (an independent route).
pub fn hook2_count_distinct_triangle(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    let mut acc = TruncatedSeries::zero(trunc);
    for n in 1..=li {
        let base = (n * (n + 1) / 2 + 1) as usize;
        if base > trunc {
            break;
        }
        let term = &gaussian_binomial(li - 1, n, 1, trunc) * &gaussian_binomial(n, 1, 1, trunc);
        acc = &acc + &term.mul_monomial(1, base);
    }
    acc
}

/// The middle term of the pair-weighted odd-side series, computed as an
/// exact rational form.
///
/// With `u, v, w` the geometric sums of steps 2, 4, 6 over `L − 1` terms,
/// the term is `(u·v − w)/q²`. Writing everything over the common
/// denominator `(1−q²)(1−q⁴)(1−q⁶)` turns the numerator into a difference
/// of products of binomial-type factors, and the division is exact — the
/// quotient is a polynomial, which this route asserts via `divide_exact`.
pub fn weighted_middle_term(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    // Work at an order that contains the full numerator (degree 6L) and
    // denominator (degree 12) polynomials, then cut back down.
    let work = trunc.max(6 * l as usize + 12);
    let one = TruncatedSeries::one(work);
    let gone = |e: i64| -> TruncatedSeries {
        // 1 − q^e; exponent 0 gives the zero series (1 − 1).
        &one - &TruncatedSeries::monomial_int(1, e.max(0) as usize, work)
    };
    let numerator = &(&(&gone(2 * li - 2) * &gone(4 * li - 4)) * &gone(6))
        - &(&(&gone(6 * li - 6) * &gone(2)) * &gone(4));
    let denominator = &(&gone(2) * &gone(4)) * &gone(6);
    let ratio = numerator
        .divide_exact(&denominator)
        .expect("u·v − w clears its common denominator exactly");
    let term = ratio
        .divide_exact(&TruncatedSeries::monomial_int(1, 2, work))
        .expect("u·v − w is divisible by q^2");
    term.truncate(trunc)
}

/// Same term as [`weighted_middle_term`] via the direct double sum
/// `Σ_{a ≠ b, 0 ≤ a,b ≤ L−2} q^{2a + 4b − 2}`, which is manifestly a
/// polynomial with non-negative coefficients.
pub fn weighted_middle_term_pair_sum(l: u32, trunc: usize) -> TruncatedSeries {
    let mut coeffs = vec![0i64; trunc + 1];
    if l >= 2 {
        let top = (l - 2) as usize;
        for a in 0..=top {
            for b in 0..=top {
                if a == b {
                    continue;
                }
                let e = 2 * a + 4 * b - 2; // ≥ 0 whenever a ≠ b
                if e <= trunc {
                    coeffs[e] += 1;
                }
            }
        }
    }
    TruncatedSeries::from_int_coeffs(&coeffs, trunc)
}

/// Sum of `C(m, 2)` over odd partitions with parts ≤ `2L − 1` having `m`
/// hooks of length 2, assembled from five closed-form pieces including the
/// rational middle term.
pub fn hook2_pairs_odd(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    let u = TruncatedSeries::geometric_sum(2, li - 1, trunc);
    let v = TruncatedSeries::geometric_sum(4, li - 1, trunc);
    let inner = &(&(&(&u.mul_monomial(1, 5)
        + &(&v.mul_monomial(1, 6) + &v.mul_monomial(1, 8)))
        + &gaussian_binomial(li - 1, 2, 2, trunc).mul_monomial(1, 8))
        + &weighted_middle_term(l, trunc).mul_monomial(1, 11))
        + &gaussian_binomial(li - 1, 2, 4, trunc).mul_monomial(1, 16);
    &inner * &odd_poch_inverse(l, trunc)
}

/// Same statistic as [`hook2_pairs_odd`] through the second-derivative
/// route: `((q² + q³u + q⁶v)² + (−q⁴ + q⁶v − 2q⁹w − q¹²y)) / (2·(q;q²)_L)`
/// with `u, v, w, y` the geometric sums of steps 2, 4, 6, 8.
pub fn hook2_pairs_odd_derivative(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    let u = TruncatedSeries::geometric_sum(2, li - 1, trunc);
    let v = TruncatedSeries::geometric_sum(4, li - 1, trunc);
    let w = TruncatedSeries::geometric_sum(6, li - 1, trunc);
    let y = TruncatedSeries::geometric_sum(8, li - 1, trunc);
    let g = &(&TruncatedSeries::monomial_int(1, 2, trunc) + &u.mul_monomial(1, 3))
        + &v.mul_monomial(1, 6);
    let correction = &(&(&-&TruncatedSeries::monomial_int(1, 4, trunc)
        + &v.mul_monomial(1, 6))
        + &w.mul_monomial(-2, 9))
        + &y.mul_monomial(-1, 12);
    let total = &(&g * &g) + &correction;
    (&total * &odd_poch_inverse(l, trunc)).scale(&half())
}

/// Sum of `C(m, 2)` over distinct partitions with parts ≤ `L` having `m`
/// hooks of length 2: `q⁶·[L−2; 2]_q·(−q³;q)_{L−4}`.
pub fn hook2_pairs_distinct(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    let binom = gaussian_binomial(li - 2, 2, 1, trunc);
    let prod = poch(-1, 3, 1, ProductLength::Finite(li - 4), trunc);
    (&binom * &prod).mul_monomial(1, 6)
}

/// Same statistic as [`hook2_pairs_distinct`] via the staircase-peeling sum
/// `Σ_{n=2}^{L} q^{n(n+1)/2 + 3}·[L−2; n]_q·[n; 2]_q`.
pub fn hook2_pairs_distinct_triangle(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    let mut acc = TruncatedSeries::zero(trunc);
    for n in 2..=li {
        let base = (n * (n + 1) / 2 + 3) as usize;
        if base > trunc {
            break;
        }
        let term = &gaussian_binomial(li - 2, n, 1, trunc) * &gaussian_binomial(n, 2, 1, trunc);
        acc = &acc + &term.mul_monomial(1, base);
    }
    acc
}

/// Unbounded-part limit of [`hook2_count_odd`]:
/// `(q² + q³/(1−q²) + q⁶/(1−q⁴)) / (q;q²)_∞`.
pub fn hook2_count_odd_inf(trunc: usize) -> TruncatedSeries {
    let inner = &(&TruncatedSeries::monomial_int(1, 2, trunc)
        + &TruncatedSeries::geometric_inf(2, trunc).mul_monomial(1, 3))
        + &TruncatedSeries::geometric_inf(4, trunc).mul_monomial(1, 6);
    let inv = poch(1, 1, 2, ProductLength::Infinite, trunc)
        .invert_unit()
        .expect("(q; q^2)_inf has constant term 1");
    &inner * &inv
}

/// Unbounded-part limit of [`hook2_count_distinct`]: `q²/(1−q)·(−q²;q)_∞`.
pub fn hook2_count_distinct_inf(trunc: usize) -> TruncatedSeries {
    let geom = TruncatedSeries::geometric_inf(1, trunc);
    let prod = poch(-1, 2, 1, ProductLength::Infinite, trunc);
    (&geom * &prod).mul_monomial(1, 2)
}

/// Total number of length-3 hooks over all odd partitions:
/// `(−q³;q)_∞·q³(1+q³)/(1−q²) + (−q;q)_∞·(q⁶/(1−q⁴) + q³/(1−q⁶))`.
pub fn hook3_count_odd_inf(trunc: usize) -> TruncatedSeries {
    let first = {
        let prod = poch(-1, 3, 1, ProductLength::Infinite, trunc);
        let numer = &TruncatedSeries::monomial_int(1, 3, trunc)
            + &TruncatedSeries::monomial_int(1, 6, trunc);
        &(&prod * &numer) * &TruncatedSeries::geometric_inf(2, trunc)
    };
    let second = {
        let prod = poch(-1, 1, 1, ProductLength::Infinite, trunc);
        let inner = &TruncatedSeries::geometric_inf(4, trunc).mul_monomial(1, 6)
            + &TruncatedSeries::geometric_inf(6, trunc).mul_monomial(1, 3);
        &prod * &inner
    };
    &first + &second
}

/// Total number of length-3 hooks over all distinct partitions:
/// `(−q;q)_∞·Σ_{m≥2} q^m/(1+q^m) − q²/(1−q²)·(−q³;q)_∞`.
pub fn hook3_count_distinct_inf(trunc: usize) -> TruncatedSeries {
    let mut lambert = TruncatedSeries::zero(trunc);
    for m in 2..=trunc.max(2) {
        if m > trunc {
            break;
        }
        let term = TruncatedSeries::alternating_geometric_inf(m, trunc).mul_monomial(1, m);
        lambert = &lambert + &term;
    }
    let first = &poch(-1, 1, 1, ProductLength::Infinite, trunc) * &lambert;
    let second = (&TruncatedSeries::geometric_inf(2, trunc)
        * &poch(-1, 3, 1, ProductLength::Infinite, trunc))
        .mul_monomial(1, 2);
    &first - &second
}

/// Unbounded-part limit of [`hook2_pairs_odd`] (all five pieces in their
/// limiting rational forms).
pub fn hook2_pairs_odd_inf(trunc: usize) -> TruncatedSeries {
    let g2 = TruncatedSeries::geometric_inf(2, trunc);
    let g4 = TruncatedSeries::geometric_inf(4, trunc);
    let g6 = TruncatedSeries::geometric_inf(6, trunc);
    let g8 = TruncatedSeries::geometric_inf(8, trunc);
    let inner = &(&(&(&g2.mul_monomial(1, 5)
        + &(&g4.mul_monomial(1, 6) + &g4.mul_monomial(1, 8)))
        + &(&g2 * &g4).mul_monomial(1, 8))
        + &(&(&g4 * &g6).mul_monomial(1, 11) + &(&g4 * &g6).mul_monomial(2, 13)))
        + &(&g4 * &g8).mul_monomial(1, 16);
    let inv = poch(1, 1, 2, ProductLength::Infinite, trunc)
        .invert_unit()
        .expect("(q; q^2)_inf has constant term 1");
    &inner * &inv
}

/// Unbounded-part limit of [`hook2_pairs_distinct`]:
/// `q⁶ / ((q;q²)_∞·(1−q²)(1−q⁴))`.
pub fn hook2_pairs_distinct_inf(trunc: usize) -> TruncatedSeries {
    let inv = poch(1, 1, 2, ProductLength::Infinite, trunc)
        .invert_unit()
        .expect("(q; q^2)_inf has constant term 1");
    (&(&inv * &TruncatedSeries::geometric_inf(2, trunc))
        * &TruncatedSeries::geometric_inf(4, trunc))
        .mul_monomial(1, 6)
}

/// Closed form for the difference of the two pair-weighted unbounded series:
/// `q⁵(1+q)·P(q) / ((q³;q²)_∞·(1−q⁴)(1−q⁶)(1−q⁸))` with the explicit
/// 14-degree polynomial `P`. Manifestly non-negative term by term.
pub fn hook2_pairs_gap_inf(trunc: usize) -> TruncatedSeries {
    let p = TruncatedSeries::from_int_coeffs(
        &[1, 0, 2, 1, 2, 1, 2, 1, 2, 0, 1, 0, 1, 0, 1],
        trunc,
    );
    let one_plus_q = TruncatedSeries::from_int_coeffs(&[1, 1], trunc).truncate(trunc);
    let inv = poch(1, 3, 2, ProductLength::Infinite, trunc)
        .invert_unit()
        .expect("(q^3; q^2)_inf has constant term 1");
    let geoms = &(&TruncatedSeries::geometric_inf(4, trunc)
        * &TruncatedSeries::geometric_inf(6, trunc))
        * &TruncatedSeries::geometric_inf(8, trunc);
    (&(&(&p * &one_plus_q) * &inv) * &geoms).mul_monomial(1, 5)
}

/// Cardinality series of the odd-side pair family at bound `L`:
/// `(1 + q·(1−q^{2L−2})/(1−q²)) / (q;q²)_L`.
pub fn pair_family_odd(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    let inner = &TruncatedSeries::one(trunc)
        + &TruncatedSeries::geometric_sum(2, li - 1, trunc).mul_monomial(1, 1);
    &inner * &odd_poch_inverse(l, trunc)
}

/// Cardinality series of the distinct-side pair family at bound `L`:
/// `(−q²;q)_{L−2}·(1−q^{L−1})/(1−q)`.
pub fn pair_family_distinct(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    &poch(-1, 2, 1, ProductLength::Finite(li - 2), trunc)
        * &TruncatedSeries::geometric_sum(1, li - 1, trunc)
}

/// The manifestly non-negative residue in the count-difference split:
/// `q⁶·(1−q^{4L−4}) / ((1−q⁴)·(q;q²)_L)`.
pub fn difference_residue(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    (&TruncatedSeries::geometric_sum(4, li - 1, trunc) * &odd_poch_inverse(l, trunc))
        .mul_monomial(1, 6)
}

/// Left side of the conjectured dominance at bound `L`:
/// `((1−q^{2L−2})/(1−q²) + q³·[L−2; 2]_{q²}) / (q;q²)_L`.
pub fn dominance_lhs(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    let inner = &TruncatedSeries::geometric_sum(2, li - 1, trunc)
        + &gaussian_binomial(li - 2, 2, 2, trunc).mul_monomial(1, 3);
    &inner * &odd_poch_inverse(l, trunc)
}

/// Right side of the conjectured dominance at bound `L`:
/// `q·[L−2; 2]_q·(−q³;q)_{L−4}`.
pub fn dominance_rhs(l: u32, trunc: usize) -> TruncatedSeries {
    let li = l as i64;
    (&gaussian_binomial(li - 2, 2, 1, trunc)
        * &poch(-1, 3, 1, ProductLength::Finite(li - 4), trunc))
        .mul_monomial(1, 1)
}

/// Marker-refined series for odd partitions with parts ≤ `2L − 1`, the
/// marker counting hooks of length 2:
/// `(1 + q + z·q²/(1−q)) · ∏_{n=2}^{L} (1 + z·q^{2n−1} + z²·q^{4n−2}/(1−q^{2n−1}))`.
pub fn refined_hook2_odd(l: u32, trunc: usize) -> BivariateSeries {
    let mut acc = &(&BivariateSeries::one(trunc) + &BivariateSeries::term(0, 1, 1, trunc))
        + &BivariateSeries::from_series(
            1,
            &TruncatedSeries::geometric_inf(1, trunc).mul_monomial(1, 2),
        );
    for n in 2..=l as usize {
        let e = 2 * n - 1;
        if e > trunc {
            break; // the factor is 1 within the window
        }
        let mut factor = &BivariateSeries::one(trunc) + &BivariateSeries::term(1, 1, e, trunc);
        if 2 * e <= trunc {
            factor = &factor
                + &BivariateSeries::from_series(
                    2,
                    &TruncatedSeries::geometric_inf(e, trunc).mul_monomial(1, 2 * e),
                );
        }
        acc = &acc * &factor;
    }
    acc
}

/// Marker-refined series for distinct partitions with parts ≤ `L`, the
/// marker counting hooks of length 2:
/// `1 + Σ_{n=1}^{L} q^{n(n+1)/2} Σ_{j=0}^{n} q^{j(j+1)/2}(z−1)^j [L−j; n]_q [n; j]_q`.
///
/// The leading 1 is the empty partition's contribution, which the staircase
/// sum (starting at one part) does not produce on its own.
pub fn refined_hook2_distinct(l: u32, trunc: usize) -> BivariateSeries {
    let li = l as i64;
    let mut acc = BivariateSeries::one(trunc);
    for n in 1..=li {
        let base = (n * (n + 1) / 2) as usize;
        if base > trunc {
            break;
        }
        for j in 0..=n {
            let tri = (j * (j + 1) / 2) as usize;
            if base + tri > trunc {
                break;
            }
            let scalar = (&gaussian_binomial(li - j, n, 1, trunc)
                * &gaussian_binomial(n, j, 1, trunc))
                .mul_monomial(1, base + tri);
            if scalar.is_zero() {
                continue;
            }
            let term = &BivariateSeries::from_series(0, &scalar)
                * &BivariateSeries::marker_affine_power(1, -1, j as u32, trunc);
            acc = &acc + &term;
        }
    }
    acc
}

/// Generating function for partitions with at most `i` parts, each at most
/// `l`, where a partition with `s` different positive part sizes carries
/// weight `(1−y)^s`; the marker tracks powers of `y`:
/// `Σ_j q^{j(j+1)/2}(−y)^j [l+i−j; i]_q [i; j]_q`.
pub fn box_sizes_weighted(l: u32, i: u32, trunc: usize) -> BivariateSeries {
    let li = l as i64;
    let ii = i as i64;
    let mut acc = BivariateSeries::zero(trunc);
    for j in 0..=ii {
        let tri = (j * (j + 1) / 2) as usize;
        if tri > trunc {
            break;
        }
        let scalar = (&gaussian_binomial(li + ii - j, ii, 1, trunc)
            * &gaussian_binomial(ii, j, 1, trunc))
            .mul_monomial(if j % 2 == 0 { 1 } else { -1 }, tri);
        if scalar.is_zero() {
            continue;
        }
        acc = &acc + &BivariateSeries::from_series(j as u32, &scalar);
    }
    acc
}

/// [`box_sizes_weighted`] with `y` substituted by `1 − z`, so the marker is
/// `z` and `(−y)^j` becomes `(z−1)^j`. Summed over staircase offsets this
/// reassembles [`refined_hook2_distinct`].
pub fn box_sizes_weighted_in_z(l: u32, i: u32, trunc: usize) -> BivariateSeries {
    let li = l as i64;
    let ii = i as i64;
    let mut acc = BivariateSeries::zero(trunc);
    for j in 0..=ii {
        let tri = (j * (j + 1) / 2) as usize;
        if tri > trunc {
            break;
        }
        let scalar = (&gaussian_binomial(li + ii - j, ii, 1, trunc)
            * &gaussian_binomial(ii, j, 1, trunc))
            .mul_monomial(1, tri);
        if scalar.is_zero() {
            continue;
        }
        let term = &BivariateSeries::from_series(0, &scalar)
            * &BivariateSeries::marker_affine_power(1, -1, j as u32, trunc);
        acc = &acc + &term;
    }
    acc
}

/// Finite-sum side of the triangular-number binomial identity:
/// `Σ_{n=0}^{N} q^{n(n+1)/2}·(s·q^e)^n·[N; n]_q`.
pub fn triangle_sum_side(e: usize, s: i32, nq: i64, trunc: usize) -> TruncatedSeries {
    assert!(s == 1 || s == -1, "sign must be ±1");
    let mut acc = TruncatedSeries::zero(trunc);
    for n in 0..=nq.max(0) {
        let exp = (n * (n + 1) / 2) as usize + e * n as usize;
        if exp > trunc {
            break;
        }
        let sign = if s == -1 && n % 2 == 1 { -1 } else { 1 };
        acc = &acc + &gaussian_binomial(nq, n, 1, trunc).mul_monomial(sign, exp);
    }
    acc
}

/// Product side of the same identity: `(−s·q^{e+1}; q)_N`.
pub fn triangle_product_side(e: usize, s: i32, nq: i64, trunc: usize) -> TruncatedSeries {
    poch(-s, e + 1, 1, ProductLength::Finite(nq), trunc)
}

/// `∏_{k≥1} (1 − q^k)^{z−1}` for integer `z`, the product side of the
/// hook-squared weighting identity. Negative powers go through series
/// inversion.
pub fn euler_power_product(z: i64, trunc: usize) -> TruncatedSeries {
    let base = poch(1, 1, 1, ProductLength::Infinite, trunc);
    let exponent = z - 1;
    let mut acc = TruncatedSeries::one(trunc);
    if exponent >= 0 {
        for _ in 0..exponent {
            acc = &acc * &base;
        }
    } else {
        let inv = base.invert_unit().expect("(q; q)_inf has constant term 1");
        for _ in 0..(-exponent) {
            acc = &acc * &inv;
        }
    }
    acc
}
