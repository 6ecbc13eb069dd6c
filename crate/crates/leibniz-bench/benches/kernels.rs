//! Criterion benchmarks for the hot kernels: exact linear algebra, the
//! regular-element search, Cartan certification, quotient construction, and
//! the conjugacy search.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use leibniz_core::cartan::{cartan_from_regular, find_regular_element};
use leibniz_core::conjugacy::conjugate_cartan;
use leibniz_core::fixtures;
use leibniz_core::matrix::RationalMatrix;
use leibniz_core::quotient::QuotientMap;
use leibniz_core::rational::{rat, ratio};
use leibniz_core::subspace::Subspace;

/// Deterministic dense test matrix with mixed denominators.
fn dense_matrix(rows: usize, cols: usize) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |i, j| {
        let numer = ((i * 7 + j * 3) % 9) as i64 - 4;
        let denom = ((i + j) % 3 + 1) as i64;
        ratio(numer, denom)
    })
}

fn span(ambient: usize, rows: &[&[i64]]) -> Subspace {
    let rows = rows
        .iter()
        .map(|r| r.iter().copied().map(rat).collect())
        .collect();
    Subspace::from_rows(ambient, rows).expect("benchmark span is well formed")
}

fn bench_exact_linear_algebra(c: &mut Criterion) {
    let square = dense_matrix(12, 12);
    c.bench_function("rref_12x12", |b| {
        b.iter(|| black_box(&square).rref_with_pivots())
    });

    let wide = dense_matrix(10, 14);
    c.bench_function("kernel_basis_10x14", |b| {
        b.iter(|| black_box(&wide).kernel_basis())
    });

    let small = dense_matrix(8, 8);
    c.bench_function("char_poly_8x8", |b| b.iter(|| black_box(&small).char_poly()));
}

fn bench_structure_engine(c: &mut Criterion) {
    let mut group = c.benchmark_group("engine");
    group.sample_size(20);

    let solvable = fixtures::solvable(6, 3);
    group.bench_function("find_regular_solvable_6", |b| {
        b.iter(|| find_regular_element(black_box(&solvable), 0, 64).expect("search succeeds"))
    });

    let five_dim = fixtures::example_3_2();
    let report = find_regular_element(&five_dim, 0, 64).expect("search succeeds");
    group.bench_function("cartan_from_regular_dim_5", |b| {
        b.iter(|| cartan_from_regular(black_box(&five_dim), &report).expect("certificate holds"))
    });

    group.bench_function("quotient_build_dim_5", |b| {
        b.iter(|| QuotientMap::build(black_box(&five_dim)).expect("quotient exists"))
    });

    let c1 = span(5, &[&[0, 0, 1, 0, 0]]);
    let c2 = span(5, &[&[2, 0, 1, 0, 0]]);
    group.bench_function("conjugate_cartan_dim_5", |b| {
        b.iter(|| {
            conjugate_cartan(black_box(&five_dim), &c1, &c2, 0, 10_000)
                .expect("witness exists inside the budget")
        })
    });

    group.finish();
}

criterion_group!(benches, bench_exact_linear_algebra, bench_structure_engine);
criterion_main!(benches);
