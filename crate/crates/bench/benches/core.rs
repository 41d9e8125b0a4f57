//! Benchmarks for the hot kernels: ideal powers, ordering verification, and
//! the backtracking search.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use lq_core::lq::{verify_ordering, verify_pairwise};
use lq_core::orderings::{anticycle_square_ordering, antipath_power_generators};
use lq_core::search::{search_exhaustive, SearchOptions};
use lq_core::SimpleGraph;

fn bench_power(c: &mut Criterion) {
    let anticycle9 = SimpleGraph::anticycle(9).unwrap().edge_ideal();
    c.bench_function("power/anticycle9_square", |b| {
        b.iter(|| black_box(&anticycle9).power(2).unwrap())
    });

    let antipath9 = SimpleGraph::antipath(9).unwrap().edge_ideal();
    c.bench_function("power/antipath9_cube", |b| {
        b.iter(|| black_box(&antipath9).power(3).unwrap())
    });

    c.bench_function("power/antipath9_cube_closed_form", |b| {
        b.iter(|| antipath_power_generators(black_box(9), 3).unwrap())
    });
}

fn bench_verify(c: &mut Criterion) {
    let staged = anticycle_square_ordering(5).unwrap();
    let gens = staged.monomials();
    c.bench_function("verify/staged_n5_ordering", |b| {
        b.iter(|| verify_ordering(black_box(&gens)).unwrap())
    });
    c.bench_function("verify/staged_n5_pairwise", |b| {
        b.iter(|| verify_pairwise(black_box(&gens)).unwrap())
    });
}

fn bench_search(c: &mut Criterion) {
    let square = SimpleGraph::anticycle(6).unwrap().edge_ideal().power(2).unwrap();
    let options = SearchOptions::default();
    c.bench_function("search/anticycle6_square_exhaustive", |b| {
        b.iter(|| search_exhaustive(black_box(&square), &options).unwrap())
    });
}

criterion_group!(benches, bench_power, bench_verify, bench_search);
criterion_main!(benches);
