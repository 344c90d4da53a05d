//! Benchmarks for the invariant engines, the transform bridge, and the
//! classification sweep, sized so a full run finishes in minutes.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use treeinv_core::compositions::{hbar, irreducible_factorization, switching_class};
use treeinv_core::invariants::{
    csf_powersum, degree_poly, half_degree_poly, soup_poly, subtree_poly,
};
use treeinv_core::search::{builtin_exhibits, classify, InvariantTag};
use treeinv_core::transforms::verify_bridge;
use treeinv_core::tree::{cat, generate_free_trees};
use treeinv_core::Composition;

fn mid_size_trees() -> (treeinv_core::Tree, treeinv_core::Tree) {
    // a 14-vertex caterpillar and the 19-vertex shipped exhibit, covering
    // the path-like and branchy ends of the census workload
    let caterpillar = cat(&Composition::new(vec![2, 1, 2, 1, 2, 1, 2, 3])).unwrap();
    let exhibit = builtin_exhibits()[2].first.clone();
    (caterpillar, exhibit)
}

fn bench_invariants(c: &mut Criterion) {
    let (caterpillar, exhibit) = mid_size_trees();
    let mut group = c.benchmark_group("invariants");
    group.bench_function("hdp_cat14", |b| {
        b.iter(|| half_degree_poly(black_box(&caterpillar)))
    });
    group.bench_function("hdp_exhibit19", |b| {
        b.iter(|| half_degree_poly(black_box(&exhibit)))
    });
    group.bench_function("gdp_cat14", |b| b.iter(|| degree_poly(black_box(&caterpillar))));
    group.bench_function("gdp_exhibit19", |b| b.iter(|| degree_poly(black_box(&exhibit))));
    group.bench_function("stp_cat14", |b| b.iter(|| subtree_poly(black_box(&caterpillar))));
    group.bench_function("soup_cat14", |b| b.iter(|| soup_poly(black_box(&caterpillar))));
    group.bench_function("csf_powersum_cat14", |b| {
        b.iter(|| csf_powersum(black_box(&caterpillar)))
    });
    group.finish();
}

fn bench_transforms(c: &mut Criterion) {
    let (caterpillar, _) = mid_size_trees();
    c.bench_function("bridge_roundtrip_cat14", |b| {
        b.iter(|| verify_bridge(black_box(&caterpillar)))
    });
}

fn bench_compositions(c: &mut Criterion) {
    let alpha = Composition::new(vec![1, 2, 1, 3, 2, 1, 2]);
    let mut group = c.benchmark_group("compositions");
    group.bench_function("hbar_len7", |b| b.iter(|| hbar(black_box(&alpha)).unwrap()));
    group.bench_function("factor_len7", |b| {
        b.iter(|| irreducible_factorization(black_box(&alpha)))
    });
    group.bench_function("switching_class_len7", |b| {
        b.iter(|| switching_class(black_box(&alpha)))
    });
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("generate_n12", |b| {
        b.iter(|| generate_free_trees(black_box(12)).count())
    });
    group.bench_function("classify_hdp_n10", |b| {
        b.iter(|| classify(black_box(10), InvariantTag::Hdp, 1).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_invariants,
    bench_transforms,
    bench_compositions,
    bench_search
);
criterion_main!(benches);
