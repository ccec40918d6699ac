use criterion::{black_box, criterion_group, criterion_main, Criterion};
use lieons_core::classical::{canonical_scheme, ClassicalSpec};
use lieons_core::clusters::enumerate_clusters;
use lieons_core::gen;
use lieons_core::scheme::verify_scheme;
use num_traits::One;

fn schouten_random_bivectors(c: &mut Criterion) {
    let mut rng = gen::rng(42);
    let pairs: Vec<_> = (0..16)
        .map(|_| {
            (
                gen::random_multivector(&mut rng, 5, 2, 4),
                gen::random_multivector(&mut rng, 5, 2, 4),
            )
        })
        .collect();
    c.bench_function("schouten dim-5 bivector pairs", |b| {
        b.iter(|| {
            for (p, q) in &pairs {
                black_box(p.schouten(q).unwrap());
            }
        })
    });
}

fn jacobi_defect_random(c: &mut Criterion) {
    let mut rng = gen::rng(7);
    let gs: Vec<_> = (0..16).map(|_| gen::random_structure(&mut rng, 6, 10)).collect();
    c.bench_function("jacobi defect dim-6", |b| {
        b.iter(|| {
            for g in &gs {
                black_box(g.jacobi_defect());
            }
        })
    });
}

fn cluster_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate clusters n=4", |b| {
        b.iter(|| black_box(enumerate_clusters(4).unwrap()))
    });
}

fn so5_scheme(c: &mut Criterion) {
    let spec = ClassicalSpec::so(5, vec![lieons_core::Rational::one(); 5]).unwrap();
    c.bench_function("canonical scheme so(5) + verify", |b| {
        b.iter(|| {
            let s = canonical_scheme(&spec).unwrap();
            assert!(verify_scheme(&s).is_empty());
            black_box(s)
        })
    });
}

criterion_group!(
    benches,
    schouten_random_bivectors,
    jacobi_defect_random,
    cluster_enumeration,
    so5_scheme
);
criterion_main!(benches);
