//! Criterion benchmarks: the naive from-scratch enumerator against the
//! incremental one on matrices where each shows its profile, and the
//! sequential driver against the split-tree parallel driver.
//!
//! Run with `cargo bench -p zariski-core`.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use zariski_core::enumerate::{enumerate_posdef, CountOnly};
use zariski_core::matrix::SymmetricIntMatrix;
use zariski_core::oracle::oracle_enumerate;
use zariski_core::surfaces::{build_del_pezzo, build_fermat_tridiagonal, build_segre_matrix};

fn cases() -> Vec<(&'static str, SymmetricIntMatrix)> {
    vec![
        (
            "del-pezzo-5",
            build_del_pezzo(5).unwrap().negated().unwrap(),
        ),
        (
            "segre-16",
            build_segre_matrix().leading(16).unwrap().negated().unwrap(),
        ),
        (
            "fermat-15",
            build_fermat_tridiagonal(15).unwrap().negated().unwrap(),
        ),
        (
            "fermat-18",
            build_fermat_tridiagonal(18).unwrap().negated().unwrap(),
        ),
    ]
}

fn naive_vs_incremental(c: &mut Criterion) {
    let mut group = c.benchmark_group("naive-vs-incremental");
    group
        .sample_size(10)
        .warm_up_time(Duration::from_millis(500))
        .measurement_time(Duration::from_secs(3));
    for (name, negated) in cases() {
        group.bench_with_input(BenchmarkId::new("naive", name), &negated, |b, m| {
            b.iter(|| oracle_enumerate::<i64>(black_box(m), m.dim()).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("incremental", name), &negated, |b, m| {
            b.iter(|| enumerate_posdef::<i64, _>(black_box(m), &mut CountOnly).unwrap())
        });
    }
    group.finish();
}

fn sequential_vs_parallel(c: &mut Criterion) {
    let negated = build_segre_matrix().leading(24).unwrap().negated().unwrap();
    let mut group = c.benchmark_group("sequential-vs-parallel");
    group
        .sample_size(10)
        .warm_up_time(Duration::from_millis(500))
        .measurement_time(Duration::from_secs(5));
    group.bench_function("sequential/segre-24", |b| {
        b.iter(|| enumerate_posdef::<i64, _>(black_box(&negated), &mut CountOnly).unwrap())
    });
    #[cfg(feature = "parallel")]
    for workers in [2, 4] {
        group.bench_with_input(
            BenchmarkId::new("parallel/segre-24", workers),
            &workers,
            |b, &w| {
                b.iter(|| {
                    zariski_core::parallel::enumerate_parallel::<i64>(black_box(&negated), w)
                        .unwrap()
                })
            },
        );
    }
    group.finish();
}

criterion_group!(benches, naive_vs_incremental, sequential_vs_parallel);
criterion_main!(benches);
