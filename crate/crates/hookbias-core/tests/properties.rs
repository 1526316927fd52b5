//! Cross-layer property tests: enumeration, bijections, and q-series
//! arithmetic checked against each other through the public API.

use num::{BigInt, BigRational, One, Zero};
use proptest::prelude::*;

use hookbias_core::census::hook_product_census;
use hookbias_core::genfun;
use hookbias_core::partition::PartitionClass;
use hookbias_core::series::{gaussian_binomial, poch, ProductLength, TruncatedSeries};
use hookbias_core::sylvester::{psi, sigma};

/// Binomial coefficient as an exact big rational.
fn choose(m: u64, n: u64) -> BigRational {
    if n > m {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    for k in 0..n {
        acc *= BigRational::new(BigInt::from(m - k), BigInt::from(k + 1));
    }
    acc
}

#[test]
fn sylvester_round_trips_exhaustively_to_size_35() {
    let mut mapped = 0u64;
    for n in 0..=35u64 {
        for odd in PartitionClass::OddUnbounded.enumerate(n) {
            let image = psi(&odd).expect("odd partitions map forward");
            assert!(image.all_parts_distinct(), "{odd} → {image} is not distinct");
            assert_eq!(image.size(), n, "size preserved for {odd}");
            assert_eq!(sigma(&image).unwrap(), odd, "round trip through {image}");
            // The alternating sum of the image counts the preimage's parts,
            // and the largest parts are tied together through it.
            let gamma = image.alternating_sum();
            assert_eq!(gamma, odd.num_parts() as u64, "statistic transport for {odd}");
            if n > 0 {
                assert_eq!(
                    odd.largest_part() as u64,
                    2 * image.largest_part() as u64 - 2 * gamma + 1,
                    "largest-part relation for {odd}"
                );
            }
            mapped += 1;
        }
        // The reverse direction is exhaustive as well: σ is total on
        // distinct partitions and ψ undoes it.
        for distinct in PartitionClass::DistinctUnbounded.enumerate(n) {
            let back = sigma(&distinct).expect("distinct partitions map back");
            assert!(back.all_parts_odd());
            assert_eq!(psi(&back).unwrap(), distinct, "round trip through {distinct}");
        }
    }
    // Odd and distinct partitions are equinumerous, so the forward pass
    // alone covers every partition the reverse pass sees (4310 in total).
    assert!(mapped > 4_000, "exhaustive sweep actually ran ({mapped} maps)");
}

#[test]
fn gaussian_binomial_counts_box_partitions() {
    for m in 0..=10i64 {
        for n in 0..=m {
            let series = gaussian_binomial(m, n, 1, (m * m) as usize);
            let class = PartitionClass::BoxBounded {
                max_part: (m - n) as u32,
                max_parts: n as u32,
            };
            for k in 0..=(n * (m - n)) as u64 {
                assert_eq!(
                    series.coeff_i64(k as usize) as u64,
                    class.count(k),
                    "[{m}; {n}] at q^{k}"
                );
            }
        }
    }
}

#[test]
fn gaussian_binomial_symmetry_and_classical_limit() {
    for m in 0..=10i64 {
        for n in 0..=m {
            let lhs = gaussian_binomial(m, n, 1, 100);
            let rhs = gaussian_binomial(m, m - n, 1, 100);
            assert!(lhs.agrees_with(&rhs), "[{m}; {n}] vs [{m}; {}]", m - n);
            assert_eq!(lhs.sum_coeffs(), choose(m as u64, n as u64), "q → 1 of [{m}; {n}]");
        }
    }
}

#[test]
fn partition_counts_agree_between_enumeration_and_series() {
    let trunc = 40usize;
    let inverse = poch(1, 1, 1, ProductLength::Infinite, trunc)
        .invert_unit()
        .expect("(q;q)_∞ starts at 1");
    let odd_side = poch(1, 1, 2, ProductLength::Infinite, trunc)
        .invert_unit()
        .expect("(q;q²)_∞ starts at 1");
    let distinct_side = poch(-1, 1, 1, ProductLength::Infinite, trunc);
    for n in 0..=trunc as u64 {
        let by_box = PartitionClass::BoxBounded { max_part: n.max(1) as u32, max_parts: n.max(1) as u32 }
            .count(n);
        assert_eq!(inverse.coeff_i64(n as usize) as u64, by_box, "p({n})");
        let odd = PartitionClass::OddUnbounded.count(n);
        let distinct = PartitionClass::DistinctUnbounded.count(n);
        assert_eq!(odd, distinct, "odd vs distinct count at {n}");
        assert_eq!(odd_side.coeff_i64(n as usize) as u64, odd, "odd series at {n}");
        assert_eq!(distinct_side.coeff_i64(n as usize) as u64, distinct, "distinct series at {n}");
    }
}

#[test]
fn triangle_identity_instances() {
    for (e, s, nq) in [(2, -1, 8), (3, -1, 6), (1, 1, 8), (2, 1, 8), (4, 1, 5)] {
        let sum = genfun::triangle_sum_side(e, s, nq, 50);
        let product = genfun::triangle_product_side(e, s, nq, 50);
        assert!(sum.agrees_with(&product), "instance (e={e}, s={s}, nq={nq})");
    }
}

#[test]
fn hook_square_census_matches_power_product_for_integer_weights() {
    for z in -2..=6i64 {
        let census = hook_product_census(z, 15);
        let product = genfun::euler_power_product(z, 15);
        assert!(census.agrees_with(&product), "weight z = {z}");
    }
}

#[test]
fn refined_series_specialize_to_plain_counts() {
    for l in 1..=4u32 {
        let trunc = 20usize;
        let odd = genfun::refined_hook2_odd(l, trunc);
        let distinct = genfun::refined_hook2_distinct(l, trunc);
        let odd_class = PartitionClass::OddBounded(l);
        let distinct_class = PartitionClass::DistinctBounded(l);
        for n in 0..=trunc as u64 {
            assert_eq!(
                odd.specialize_one().coeff_i64(n as usize) as u64,
                odd_class.count(n),
                "odd marker → 1 at L={l}, n={n}"
            );
            assert_eq!(
                distinct.specialize_one().coeff_i64(n as usize) as u64,
                distinct_class.count(n),
                "distinct marker → 1 at L={l}, n={n}"
            );
        }
    }
}

// ---------------------------------------------------------------------------
// randomized series-ring laws

fn series_strategy(trunc: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..=50, 0..=trunc + 1)
        .prop_map(move |coeffs| TruncatedSeries::from_int_coeffs(&coeffs, trunc))
}

/// A polynomial of degree at most `deg` in a window wide enough that
/// products of two of them keep their full support (exact division treats
/// operands as the polynomials held in their windows).
fn poly_strategy(deg: usize, trunc: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..=50, 0..=deg + 1)
        .prop_map(move |coeffs| TruncatedSeries::from_int_coeffs(&coeffs, trunc))
}

/// A polynomial whose constant term is ±1, so it is invertible and an exact
/// divisor.
fn unit_poly_strategy(deg: usize, trunc: usize) -> impl Strategy<Value = TruncatedSeries> {
    (poly_strategy(deg, trunc), prop::bool::ANY).prop_map(move |(s, plus)| {
        let unit = if plus { 1 } else { -1 };
        &s + &TruncatedSeries::monomial_int(unit - s.coeff_i64(0), 0, trunc)
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        // Integration tests have no source file for a regression store.
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn addition_and_multiplication_are_commutative_rings(
        a in series_strategy(24),
        b in series_strategy(24),
        c in series_strategy(24),
    ) {
        prop_assert!((&(&a + &b) + &c).agrees_with(&(&a + &(&b + &c))));
        prop_assert!((&a + &b).agrees_with(&(&b + &a)));
        prop_assert!((&a * &b).agrees_with(&(&b * &a)));
        prop_assert!((&(&a * &b) * &c).agrees_with(&(&a * &(&b * &c))));
        prop_assert!((&a * &(&b + &c)).agrees_with(&(&(&a * &b) + &(&a * &c))));
        prop_assert!((&a - &a).is_zero());
        let one = TruncatedSeries::one(24);
        prop_assert!((&a * &one).agrees_with(&a));
    }

    #[test]
    fn units_invert_and_divide_exactly(
        a in poly_strategy(12, 40),
        b in unit_poly_strategy(12, 40),
    ) {
        let inv = b.invert_unit().unwrap();
        prop_assert!((&b * &inv).agrees_with(&TruncatedSeries::one(40)));
        let product = &a * &b;
        let quotient = product.divide_exact(&b).unwrap();
        prop_assert!(quotient.agrees_with(&a));
    }

    #[test]
    fn shifted_divisors_still_divide_exactly(
        a in poly_strategy(12, 40),
        b in unit_poly_strategy(12, 40),
        shift in 0usize..=4,
    ) {
        let shifted = b.mul_monomial(1, shift);
        let product = &a.mul_monomial(1, shift) * &b;
        // (a·q^s · b) / (b·q^s) = a, clearing the common monomial first.
        let quotient = product.divide_exact(&shifted).unwrap();
        prop_assert!(quotient.agrees_with(&a));
    }

    #[test]
    fn json_round_trips_preserve_series(a in series_strategy(18)) {
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let scaled = a.scale(&third);
        for s in [a, scaled] {
            let text = serde_json::to_string(&s).unwrap();
            let back: TruncatedSeries = serde_json::from_str(&text).unwrap();
            prop_assert!(back.agrees_with(&s));
            prop_assert_eq!(back.trunc(), s.trunc());
        }
    }
}
