use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qschur::blm::{formula1_product, formula2_e, realize};
use qschur::hecke::oracle_product;
use qschur::schur::{multiply_bm, ProductEngine};
use qschur::IntVector;
use qschur_bench::{key, matrix2};

fn basis_products(c: &mut Criterion) {
    let mut g = c.benchmark_group("basis_product");
    for r in [3, 4, 5] {
        let a = matrix2(1, r - 2, 1, 0);
        let b = matrix2(1, 1, r - 3, 1);
        let bm = matrix2(2, 1, 0, r - 3);
        g.bench_with_input(BenchmarkId::new("oracle", r), &r, |bench, _| {
            bench.iter(|| oracle_product(black_box(&bm), black_box(&b), 6).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("blm_formula", r), &r, |bench, _| {
            bench.iter(|| multiply_bm(0, 1, black_box(&b)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("oracle_general", r), &r, |bench, _| {
            bench.iter(|| oracle_product(black_box(&a), black_box(&b), 6).unwrap())
        });
    }
    g.finish();
}

fn symbolic_products(c: &mut Criterion) {
    let a = matrix2(0, 2, 1, 0);
    let (d, l) = (IntVector::from([1, -1]), IntVector::from([2, 1]));
    let (gamma, mu) = (IntVector::from([-1, 2]), IntVector::from([2, 2]));
    c.bench_function("formula1_product", |b| {
        b.iter(|| formula1_product(black_box(&gamma), black_box(&mu), &a, &d, &l).unwrap())
    });
    c.bench_function("formula2_e", |b| {
        b.iter(|| formula2_e(2, 0, black_box(&a), &d, &l).unwrap())
    });
    let left = key(matrix2(0, 0, 0, 0), &[-1, 2], &[2, 2]);
    let right = key(a.clone(), &[1, -1], &[2, 1]);
    let engine = ProductEngine::default();
    let mut g = c.benchmark_group("componentwise_product");
    for r_max in [3, 4, 5] {
        let (x, y) = (
            realize(&left, r_max).unwrap(),
            realize(&right, r_max).unwrap(),
        );
        g.bench_with_input(BenchmarkId::from_parameter(r_max), &r_max, |b, _| {
            b.iter(|| x.product(black_box(&y), &engine).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, basis_products, symbolic_products);
criterion_main!(benches);
