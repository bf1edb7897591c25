use criterion::{criterion_group, criterion_main, Criterion};

use stingy_core::bounds::VerificationParams;
use stingy_core::catalog::{graphs_on, graphs_up_to_iso};
use stingy_core::harness::{sweep, sweep_sequential};

fn bench_sweep(c: &mut Criterion) {
    let graphs = graphs_up_to_iso(1..=6).unwrap();
    let params = VerificationParams::default();
    let mut group = c.benchmark_group("sweep n<=6");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| sweep(&graphs, &params).unwrap()));
    group.bench_function("sequential", |b| {
        b.iter(|| sweep_sequential(&graphs, &params).unwrap())
    });
    group.finish();
}

fn bench_catalog(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog");
    group.sample_size(10);
    group.bench_function("n=6", |b| b.iter(|| graphs_on(6).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_sweep, bench_catalog);
criterion_main!(benches);
