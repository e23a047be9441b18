use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use riordan_graph::search::{scan_conjecture1, scan_conjecture2, ScanOptions};
use riordan_graph::{ASequence, Exec, RiordanGraph};

fn executors() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::sequential()), ("parallel", Exec::default())]
}

fn conjecture2(c: &mut Criterion) {
    let mut group = c.benchmark_group("conjecture2_k5");
    group.sample_size(10);
    for (name, exec) in executors() {
        let opts = ScanOptions {
            exec,
            ..Default::default()
        };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(scan_conjecture2(5, 0, 0, &opts).unwrap()))
        });
    }
    group.finish();
}

fn conjecture1(c: &mut Criterion) {
    let mut group = c.benchmark_group("conjecture1_n24");
    group.sample_size(10);
    for (name, exec) in executors() {
        let opts = ScanOptions {
            exec,
            ..Default::default()
        };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(scan_conjecture1(24, 23, &opts).unwrap()))
        });
    }
    group.finish();
}

fn eccentricities(c: &mut Criterion) {
    let g = RiordanGraph::build_bell_aseq(&ASequence::catalan(1024), 1024)
        .unwrap()
        .into_graph();
    let mut group = c.benchmark_group("catalan_1024_eccentricities");
    group.sample_size(10);
    for (name, exec) in executors() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                let ecc = exec.map_range(1..g.order() + 1, |v| g.bfs(v).unwrap().eccentricity());
                black_box(ecc)
            })
        });
    }
    group.finish();
}

criterion_group!(benches, conjecture2, conjecture1, eccentricities);
criterion_main!(benches);
