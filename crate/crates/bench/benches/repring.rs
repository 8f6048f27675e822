use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use levixi::repring::{weight_system_fundamental, weyl_dimension};
use levixi::ximap::verify_lr_products;
use levixi::{character, poly_membership, xi, Family, ParabolicSubset, XiContext};
use levixi_bench::{cayley_sum, group};

fn freudenthal(c: &mut Criterion) {
    let d4 = group(Family::D, 4);
    c.bench_function("weyl_dimension D_4", |b| {
        b.iter(|| weyl_dimension(&d4, black_box(&[4, 2, 2, 0])))
    });
    c.bench_function("membership D_4 V(2ω_1)", |b| {
        let chi = character(&weight_system_fundamental(&d4, &[2, 0, 0, 0]).unwrap());
        b.iter(|| poly_membership(black_box(&chi)))
    });
}

fn xi_map(c: &mut Criterion) {
    let d4 = group(Family::D, 4);
    let ctx = XiContext::new(&d4, &ParabolicSubset::maximal(4, 4).unwrap()).unwrap();
    let chi = ctx.character(cayley_sum(4)).unwrap();
    c.bench_function("xi D_4 P_4", |b| {
        b.iter(|| xi(&ctx, black_box(&chi)).unwrap())
    });
    c.bench_function("Littlewood-Richardson Gr(2,5)", |b| {
        b.iter(|| verify_lr_products(2, 5).unwrap())
    });
}

criterion_group!(benches, freudenthal, xi_map);
criterion_main!(benches);
