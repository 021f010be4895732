use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qschur::schur::ProductEngine;
use qschur::uqgl::{
    b3_family, check_relations, independence_check, zeta_symbolic, GeneratorWord,
    DEFAULT_EVALUATION_POINTS,
};

fn relations(c: &mut Criterion) {
    let engine = ProductEngine::default();
    let mut g = c.benchmark_group("relations");
    g.sample_size(10);
    g.bench_function("n2_r4", |b| {
        b.iter(|| check_relations(2, black_box(4), &engine).unwrap())
    });
    g.bench_function("n3_r3", |b| {
        b.iter(|| check_relations(3, black_box(3), &engine).unwrap())
    });
    g.finish();
}

fn expansion(c: &mut Criterion) {
    let word: GeneratorWord = "E2^(2) E1 E2 K1 [K2;2] F1 F2^(2) F1".parse().unwrap();
    c.bench_function("zeta_symbolic_n3", |b| {
        b.iter(|| zeta_symbolic(black_box(&word), 3).unwrap())
    });
}

fn independence(c: &mut Criterion) {
    let (_, fam) = b3_family(2, 2, 5).unwrap();
    let mut g = c.benchmark_group("independence");
    g.sample_size(10);
    g.bench_function("b3_n2_bound2_r5", |b| {
        b.iter(|| independence_check(black_box(&fam), &DEFAULT_EVALUATION_POINTS))
    });
    g.finish();
}

criterion_group!(benches, relations, expansion, independence);
criterion_main!(benches);
