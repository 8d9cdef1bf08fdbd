use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hankelcert::classtools::{convolution_min_modulus, t_grid, GridSpec};
use hankelcert::functionals::FunctionalId;
use hankelcert::oracle::sample_sup;
use hankelcert::series::extremal_sl;

fn extremal(c: &mut Criterion) {
    let mut group = c.benchmark_group("extremal_sl");
    for order in [8, 40] {
        group.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, &order| {
            b.iter(|| extremal_sl(3, black_box(order)).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_sup");
    group.sample_size(10);
    group.bench_function("h31/10000", |b| {
        b.iter(|| sample_sup(FunctionalId::H3_1, black_box(10_000), 0, false).unwrap())
    });
    group.finish();
}

fn convolution(c: &mut Criterion) {
    let f = extremal_sl(3, 40).unwrap();
    let grid = GridSpec::new(0.95, 90);
    let ts = t_grid(5);
    let mut group = c.benchmark_group("convolution");
    group.sample_size(10);
    group.bench_function("min_modulus/90x10", |b| {
        b.iter(|| convolution_min_modulus(black_box(&f), &ts, &grid).unwrap())
    });
    group.finish();
}

criterion_group!(benches, extremal, oracle, convolution);
criterion_main!(benches);
