use criterion::{black_box, criterion_group, criterion_main, Criterion};

use liespec_bench::{dense_matrix, generic_metric, radius_polynomial};
use liespec_core::exact::{sturm_isolate, Domain};
use liespec_core::reps::minus_casimir;
use liespec_core::spectra::first_eigenvalue_at;
use liespec_core::{certify_uniqueness, model, Case};

fn exact(c: &mut Criterion) {
    let m = dense_matrix(12);
    c.bench_function("kernel 12x12", |b| b.iter(|| black_box(&m).kernel()));
    let m8 = dense_matrix(8);
    c.bench_function("char_poly 8x8", |b| {
        b.iter(|| black_box(&m8).char_poly_coeffs().unwrap())
    });
    let p = radius_polynomial();
    c.bench_function("sturm isolate quintic", |b| {
        b.iter(|| sturm_isolate(black_box(&p), &Domain::PositiveReals).unwrap())
    });
}

fn lie(c: &mut Criterion) {
    let m = model().expect("model builds");
    let ic = m.case(Case::Gr38);
    c.bench_function("casimir of k on tensor", |b| {
        b.iter(|| minus_casimir(&m.tensor, &ic.k, &ic.form_scale).unwrap())
    });
    c.bench_function("tensor invariants of h", |b| {
        b.iter(|| m.tensor.invariants(&ic.h).unwrap())
    });
    let s = generic_metric();
    c.bench_function("first eigenvalue gr38", |b| {
        b.iter(|| first_eigenvalue_at(m, Case::Gr38, black_box(&s)).unwrap())
    });
    let mut g = c.benchmark_group("certify");
    g.sample_size(10);
    g.bench_function("gr27", |b| {
        b.iter(|| certify_uniqueness(m, Case::Gr27).unwrap())
    });
    g.bench_function("gr38", |b| {
        b.iter(|| certify_uniqueness(m, Case::Gr38).unwrap())
    });
    g.finish();
}

criterion_group!(benches, exact, lie);
criterion_main!(benches);
