use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hankelcert::algebra::{int, rat};
use hankelcert::boxopt::{certify_max, default_tol, isolate_roots};
use hankelcert::functionals::printed::g_face_octic;
use hankelcert::functionals::{bound_surrogate, FunctionalId};
use hankelcert::polyalg::bernstein_enclosure;
use hankelcert::{BoxRegion, RatInterval};

fn certify(c: &mut Criterion) {
    let mut group = c.benchmark_group("certify_max");
    group.sample_size(20);
    for id in [FunctionalId::H3_1, FunctionalId::H2_3] {
        let f = bound_surrogate(id).unwrap().surrogate;
        group.bench_function(id.key(), |b| {
            b.iter(|| certify_max(black_box(&f), &BoxRegion::cuboid(), &default_tol()).unwrap())
        });
    }
    group.finish();
}

fn enclosure(c: &mut Criterion) {
    let f = bound_surrogate(FunctionalId::H3_1).unwrap().surrogate;
    c.bench_function("bernstein_enclosure/cuboid", |b| {
        b.iter(|| bernstein_enclosure(black_box(&f), &BoxRegion::cuboid()).unwrap())
    });
}

fn roots(c: &mut Criterion) {
    let f = g_face_octic();
    let interval = RatInterval::new(int(0), int(2)).unwrap();
    c.bench_function("isolate_roots/octic", |b| {
        b.iter(|| isolate_roots(black_box(&f), &interval, &rat(1, 1_000_000_000)).unwrap())
    });
}

criterion_group!(benches, certify, enclosure, roots);
criterion_main!(benches);
