//! Criterion benchmarks for the two character engines and the
//! straightening machinery.

use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use specht_core::{
    char_table, char_table_with, representing_matrix, run_suite, Method, MnEvaluator, Partition, Permutation,
    SkewShape, SkewTableau, Straightener,
};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn border_strip_engine(c: &mut Criterion) {
    let mut group = c.benchmark_group("mn");
    group.bench_function("chi(4,4,4)(5,5,2)", |b| {
        b.iter(|| {
            MnEvaluator::new()
                .value(black_box(&p("4,4,4")), black_box(&p("5,5,2")))
                .unwrap()
        })
    });
    for n in [8, 12, 16] {
        group.bench_with_input(BenchmarkId::new("table", n), &n, |b, &n| b.iter(|| char_table(n)));
    }
    group.finish();
}

pub fn trace_engine(c: &mut Criterion) {
    let mut group = c.benchmark_group("trace");
    group.sample_size(10);
    for n in [5, 6, 7] {
        group.bench_with_input(BenchmarkId::new("table", n), &n, |b, &n| {
            b.iter(|| char_table_with(n, Method::Trace))
        });
    }
    let shape: SkewShape = "4,3,2,1".parse().unwrap();
    group.bench_function("matrix (4,3,2,1) long cycle", |b| {
        b.iter(|| representing_matrix(&shape, &Permutation::long_cycle(10)).unwrap())
    });
    group.finish();
}

pub fn straightening(c: &mut Criterion) {
    let mut group = c.benchmark_group("straighten");
    let golden: SkewTableau = "1,2,5/4,3,7/6,8".parse().unwrap();
    group.bench_function("golden, cold cache", |b| {
        b.iter(|| Straightener::new().straighten(black_box(&golden)))
    });
    let reversed: SkewTableau = "4,3,2,1/7,6,5/9,8/10".parse().unwrap();
    group.bench_function("rows reversed (4,3,2,1), cold cache", |b| {
        b.iter(|| Straightener::new().straighten(black_box(&reversed)))
    });
    let mut warm = Straightener::new();
    warm.straighten(&reversed);
    group.bench_function("rows reversed (4,3,2,1), warm cache", |b| {
        b.iter(|| warm.straighten(black_box(&reversed)))
    });
    group.finish();
}

pub fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for name in ["straighten-oracle", "unique-trace-tableau", "restriction"] {
        group.bench_function(name, |b| b.iter(|| run_suite(name, 5).unwrap()));
    }
    group.finish();
}
