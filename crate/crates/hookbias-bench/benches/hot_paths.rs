//! Benchmarks for the paths the verification suite leans on hardest:
//! class enumeration, censuses, q-series products, and the bijections.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hookbias_core::census::{census_total, weighted_census};
use hookbias_core::genfun;
use hookbias_core::partition::PartitionClass;
use hookbias_core::sylvester::{check_injection, psi, sigma};
use hookbias_core::{Bound, Side, Weight};

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate odd partitions of 40", |b| {
        b.iter(|| PartitionClass::OddUnbounded.enumerate(black_box(40)).count())
    });
    c.bench_function("enumerate distinct partitions of 60, parts ≤ 12", |b| {
        b.iter(|| PartitionClass::DistinctBounded(12).enumerate(black_box(60)).count())
    });
}

fn censuses(c: &mut Criterion) {
    c.bench_function("two-hook census, distinct parts ≤ 6, n ≤ 40", |b| {
        b.iter(|| census_total(Side::Distinct, 2, Bound::Finite(6), black_box(40)))
    });
    c.bench_function("pair-weighted census, odd parts < 12, n ≤ 30", |b| {
        b.iter(|| weighted_census(Side::Odd, 2, Bound::Finite(6), black_box(30), Weight::ChooseTwo))
    });
}

fn series(c: &mut Criterion) {
    c.bench_function("pair-count series at L = 6, 80 terms", |b| {
        b.iter(|| genfun::hook2_pairs_odd(black_box(6), 80))
    });
    c.bench_function("squared-hook product at z = 3, 40 terms", |b| {
        b.iter(|| genfun::euler_power_product(black_box(3), 40))
    });
    c.bench_function("refined two-hook series at L = 5, 40 terms", |b| {
        b.iter(|| genfun::refined_hook2_distinct(black_box(5), 40))
    });
}

fn bijections(c: &mut Criterion) {
    c.bench_function("odd/distinct round trip over partitions of 30", |b| {
        b.iter(|| {
            let mut mapped = 0u64;
            for pi in PartitionClass::OddUnbounded.enumerate(black_box(30)) {
                let image = psi(&pi).expect("odd input");
                let back = sigma(&image).expect("distinct input");
                assert!(back == pi);
                mapped += 1;
            }
            mapped
        })
    });
    c.bench_function("pair injection sweep at L = 6, n = 20", |b| {
        b.iter(|| check_injection(black_box(6), 20))
    });
}

criterion_group!(benches, enumeration, censuses, series, bijections);
criterion_main!(benches);
