use std::time::Duration;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use interlace_bench::{graphs, words};
use interlace_core::euler::euler_circuits_brute;
use interlace_core::verify::{run_extremal_suite, run_identity_suite};
use interlace_core::*;

fn recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_graph");
    group.sample_size(10).measurement_time(Duration::from_secs(10));
    for n in [12, 16, 20] {
        let g = graphs(n, 1).pop().unwrap();
        group.bench_with_input(BenchmarkId::new("memo", n), &g, |b, g| {
            b.iter(|| InterlaceSolver::new().polynomial(black_box(g)))
        });
    }
    for n in [12, 14] {
        let g = graphs(n, 1).pop().unwrap();
        group.bench_with_input(BenchmarkId::new("plain", n), &g, |b, g| {
            b.iter(|| InterlaceSolver::with_options(SolverOptions::plain()).polynomial(black_box(g)))
        });
    }
    group.finish();
}

fn families(c: &mut Criterion) {
    let mut group = c.benchmark_group("family");
    for (name, g) in [
        ("path_16", Graph::path(16).unwrap()),
        ("cycle_16", Graph::cycle(16).unwrap()),
        ("complete_16", Graph::complete(16).unwrap()),
        ("k_8_8", Graph::complete_bipartite(8, 8).unwrap()),
    ] {
        group.bench_function(name, |b| b.iter(|| interlace_polynomial(black_box(&g))));
    }
    group.finish();
}

fn circuits(c: &mut Criterion) {
    let mut group = c.benchmark_group("euler");
    for n in [6, 8, 10] {
        let w = words(n, 1).pop().unwrap();
        let d = digraph_from_word(&w);
        group.bench_with_input(BenchmarkId::new("best", n), &d, |b, d| {
            b.iter(|| euler_circuit_count_best(black_box(d)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("brute", n), &d, |b, d| {
            b.iter(|| euler_circuits_brute(black_box(d)).unwrap().len())
        });
        group.bench_with_input(BenchmarkId::new("via_interlace", n), &w, |b, w| {
            b.iter(|| interlace_polynomial(&interlace_graph(black_box(w))).evaluate_i64(1))
        });
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    group.bench_function("identities_5", |b| b.iter(|| run_identity_suite(5, 50, 1)));
    group.bench_function("extremal_5", |b| b.iter(|| run_extremal_suite(5)));
    group.finish();
}

criterion_group!(benches, recursion, families, circuits, suites);
criterion_main!(benches);
