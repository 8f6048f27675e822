use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use levixi::schubert::cup_product_chevalley;
use levixi::{borel_expand, cup_product, Family, ParabolicSubset};
use levixi_bench::{group, sample_class, symmetric_sum};

fn expand(c: &mut Criterion) {
    let mut g = c.benchmark_group("borel_expand");
    for (f, n) in [
        (Family::A, 3),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
    ] {
        let rs = group(f, n);
        let poly = symmetric_sum(&rs);
        let b = ParabolicSubset::borel(n);
        g.bench_with_input(BenchmarkId::from_parameter(&rs), &poly, |bench, p| {
            bench.iter(|| borel_expand(black_box(p), &rs, &b).unwrap())
        });
    }
    g.finish();
}

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("cup_product");
    for (f, n) in [(Family::B, 3), (Family::D, 4)] {
        let rs = group(f, n);
        let a = sample_class(&rs);
        g.bench_function(BenchmarkId::new("divided_difference", &rs), |bench| {
            bench.iter(|| cup_product(black_box(&a), black_box(&a)).unwrap())
        });
        g.bench_function(BenchmarkId::new("chevalley", &rs), |bench| {
            bench.iter(|| cup_product_chevalley(black_box(&a), black_box(&a)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, expand, products);
criterion_main!(benches);
