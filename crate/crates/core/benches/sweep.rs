//! Sweep throughput under the two scheduling configurations: the default
//! pool (`jobs = 0`) against a dedicated single-thread pool (`jobs = 1`).
//! Build with `--no-default-features` to measure the plain sequential
//! engine instead of the rayon one — the same benchmark body covers both,
//! so the feature flag is what is being compared across runs.

use criterion::{criterion_group, criterion_main, Criterion};
use hamstar_core::enumerate::connected_graphs;
use hamstar_core::{sweep, SweepMode, SweepOptions};

fn bench_main_sweep(c: &mut Criterion) {
    // Enumerate once up front so only classification work is measured.
    let graphs = connected_graphs(7).unwrap();
    let mut group = c.benchmark_group("main-sweep-n7");
    for jobs in [0usize, 1] {
        group.bench_function(format!("jobs-{jobs}"), |b| {
            let opts = SweepOptions {
                t: 5,
                mode: SweepMode::Main,
                strict: true,
                jobs,
            };
            b.iter(|| sweep(graphs.iter().cloned().map(Ok), &opts).unwrap());
        });
    }
    group.finish();
}

fn bench_lemma2_sweep(c: &mut Criterion) {
    let graphs = connected_graphs(7).unwrap();
    let mut group = c.benchmark_group("lemma2-sweep-n7");
    for jobs in [0usize, 1] {
        group.bench_function(format!("jobs-{jobs}"), |b| {
            let opts = SweepOptions {
                t: 5,
                mode: SweepMode::Lemma2,
                strict: true,
                jobs,
            };
            b.iter(|| sweep(graphs.iter().cloned().map(Ok), &opts).unwrap());
        });
    }
    group.finish();
}

criterion_group!(benches, bench_main_sweep, bench_lemma2_sweep);
criterion_main!(benches);
