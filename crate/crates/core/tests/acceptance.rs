//! Acceptance suite: one test per criterion, each printing a pass line.
//! Exact expected values are pinned in code; no tolerances anywhere.
//!
//! The full 64-line run (criterion 8, extended) enumerates 8.26e9 subsets
//! and is gated behind `--ignored`:
//!     cargo test -p zariski-core --test acceptance --release -- --ignored
//! Its desk-scale substitute (leading prefixes) runs in the normal suite.

use std::sync::atomic::{AtomicBool, Ordering};

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use zariski_core::checkpoint::Checkpoint;
use zariski_core::enumerate::{
    count_zariski_chambers, enumerate_posdef, enumerate_with, CountOnly, EnumerationOptions,
    RunOutcome,
};
use zariski_core::matrix::SymmetricIntMatrix;
use zariski_core::oracle::{bench_compare, oracle_enumerate_with};
use zariski_core::parallel::enumerate_parallel;
use zariski_core::surfaces::{
    build_del_pezzo, build_fermat_tridiagonal, build_segre_matrix, closed_form_discrepancies,
    segre_named_sublattice,
};
use zariski_core::{det_fraction_free, rank_exact};

fn random_symmetric(rng: &mut StdRng, n: usize, bound: i64) -> SymmetricIntMatrix {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.random_range(-bound..=bound);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    SymmetricIntMatrix::from_rows(rows).unwrap()
}

fn collect_subsets(a: &SymmetricIntMatrix) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    enumerate_posdef::<i64, _>(a, &mut |s: &[usize]| out.push(s.to_vec())).unwrap();
    out
}

fn collect_subsets_oracle(a: &SymmetricIntMatrix) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    oracle_enumerate_with::<i64, _>(a, a.dim(), false, &mut |s: &[usize]| out.push(s.to_vec()))
        .unwrap();
    out
}

#[test]
fn criterion_1_del_pezzo_chamber_counts() {
    let expected: [u64; 8] = [2, 5, 18, 76, 393, 2764, 33645, 1_501_681];
    for (r, &want) in (1..=8).zip(&expected) {
        let m = build_del_pezzo(r).unwrap();
        let report = count_zariski_chambers::<i64>(&m).unwrap();
        assert_eq!(report.total_chambers, want, "z(X_{r})");
        // negative definite support families are linearly independent, so
        // support size is bounded by the matrix rank; when the curves span
        // the full indefinite lattice (r >= 2) one slot is lost to the
        // positive direction
        let rank = rank_exact::<i64>(m.as_square()).unwrap();
        let bound = if r >= 2 { rank - 1 } else { rank };
        assert!(report.max_support <= bound, "r = {r}");
    }
    println!("[PASS] criterion 1: Del Pezzo chamber counts r=1..8 exact");
}

#[test]
fn criterion_2_segre_first_type_block() {
    let block = build_segre_matrix().leading(16).unwrap();
    let report = count_zariski_chambers::<i64>(&block).unwrap();
    assert_eq!(report.total_chambers, 6521);
    println!("[PASS] criterion 2: 16x16 first-type block yields 6521 chambers");
}

#[test]
fn criterion_3_matrix_reconstruction() {
    let m = build_segre_matrix();
    assert_eq!(rank_exact::<i64>(m.as_square()).unwrap(), 20);
    let gram = m.principal(&segre_named_sublattice()).unwrap();
    assert_eq!(det_fraction_free::<i64>(&gram).unwrap(), -48);
    for i in 1..=64 {
        assert_eq!(m.get(i, i), -2);
        for j in 1..=64 {
            if i != j {
                assert!(m.get(i, j) == 0 || m.get(i, j) == 1, "({i},{j})");
            }
        }
    }
    // Histogram rows for support sizes 1 and 2, from a depth-capped run of
    // the negated matrix (supersets are irrelevant to these two rows).
    let negated = m.negated().unwrap();
    let options = EnumerationOptions {
        max_support: Some(2),
        ..Default::default()
    };
    let report = enumerate_with::<i64, _, _>(
        &negated,
        &mut CountOnly,
        &options,
        None,
        &mut |_: &Checkpoint| Ok(()),
    )
    .unwrap()
    .into_complete()
    .unwrap();
    assert_eq!(report.histogram.get(1), 64);
    assert_eq!(report.histogram.get(2), 2016);
    println!(
        "[PASS] criterion 3: rank 20, named-basis discriminant -48, shape, histogram rows 64/2016"
    );
}

#[test]
fn criterion_4_oracle_equivalence() {
    let mut rng = StdRng::seed_from_u64(0x5e62e);
    let mut checked = 0usize;
    for round in 0..200 {
        let n = rng.random_range(1..=14);
        let a = random_symmetric(&mut rng, n, 3);
        let fast = collect_subsets(&a);
        let naive = collect_subsets_oracle(&a);
        assert_eq!(fast, naive, "random round {round}, n = {n}");
        checked += 1;
    }
    // all negated builder matrices with n <= 16
    let mut builders: Vec<(String, SymmetricIntMatrix)> = Vec::new();
    for r in 1..=5 {
        builders.push((format!("del-pezzo:{r}"), build_del_pezzo(r).unwrap()));
    }
    for n in 1..=16 {
        builders.push((
            format!("fermat-tridiag:{n}"),
            build_fermat_tridiagonal(n).unwrap(),
        ));
    }
    let segre = build_segre_matrix();
    for n in (4..=16).step_by(4) {
        builders.push((format!("segre-schur prefix {n}"), segre.leading(n).unwrap()));
    }
    for (name, m) in builders {
        let negated = m.negated().unwrap();
        let fast = collect_subsets(&negated);
        let naive = collect_subsets_oracle(&negated);
        assert_eq!(fast, naive, "{name}");
        checked += 1;
    }
    println!("[PASS] criterion 4: enumerator equals oracle on {checked} matrices (sets and histograms)");
}

#[test]
fn criterion_5_bareiss_invariants_on_full_traces() {
    // validate_states checks B = T * A_S, upper triangularity, diagonal
    // equality with from-scratch leading minors after every grow and shrink;
    // every Bareiss division is remainder-checked unconditionally.
    let mut rng = StdRng::seed_from_u64(1201);
    let mut matrices: Vec<SymmetricIntMatrix> = Vec::new();
    for _ in 0..20 {
        let n = rng.random_range(4..=12);
        matrices.push(random_symmetric(&mut rng, n, 3));
    }
    for r in 1..=4 {
        matrices.push(build_del_pezzo(r).unwrap().negated().unwrap());
    }
    matrices.push(build_fermat_tridiagonal(12).unwrap().negated().unwrap());
    matrices.push(build_segre_matrix().leading(12).unwrap().negated().unwrap());
    let options = EnumerationOptions {
        validate_states: true,
        ..Default::default()
    };
    let total: usize = matrices.len();
    for (i, a) in matrices.iter().enumerate() {
        enumerate_with::<i64, _, _>(a, &mut CountOnly, &options, None, &mut |_: &Checkpoint| {
            Ok(())
        })
        .unwrap_or_else(|e| panic!("matrix {i}: {e}"))
        .into_complete()
        .unwrap();
    }
    println!("[PASS] criterion 5: state invariants hold on full traces of {total} matrices (n <= 12)");
}

#[test]
fn criterion_6_parallel_determinism_and_resume() {
    let negated = build_del_pezzo(8).unwrap().negated().unwrap();
    let baseline = enumerate_parallel::<i64>(&negated, 1).unwrap();
    assert_eq!(baseline.total_chambers, 1_501_681);
    for workers in [2, 4, 8] {
        let report = enumerate_parallel::<i64>(&negated, workers).unwrap();
        assert!(
            report.same_counts(&baseline),
            "workers = {workers}: {} vs {}",
            report.total_chambers,
            baseline.total_chambers
        );
    }

    // Interrupt the sequential run mid-way at a visit boundary, then resume
    // from the checkpoint and require the exact full count.
    let stop = AtomicBool::new(false);
    let mut visits = 0u64;
    let options = EnumerationOptions {
        stop: Some(&stop),
        ..Default::default()
    };
    let outcome = enumerate_with::<i64, _, _>(
        &negated,
        &mut |_: &[usize]| {
            visits += 1;
            if visits == 700_000 {
                stop.store(true, Ordering::Relaxed);
            }
        },
        &options,
        None,
        &mut |_: &Checkpoint| Ok(()),
    )
    .unwrap();
    let checkpoint = match outcome {
        RunOutcome::Interrupted { checkpoint, .. } => checkpoint,
        RunOutcome::Complete(_) => panic!("stop flag was ignored"),
    };
    assert_eq!(checkpoint.visited, 700_000);
    let resumed = enumerate_with::<i64, _, _>(
        &negated,
        &mut CountOnly,
        &EnumerationOptions::default(),
        Some(&checkpoint),
        &mut |_: &Checkpoint| Ok(()),
    )
    .unwrap()
    .into_complete()
    .unwrap();
    assert_eq!(resumed.total_chambers, 1_501_681);
    assert!(resumed.same_counts(&baseline));
    println!("[PASS] criterion 6: X8 count identical for workers 1,2,4,8; interrupt/resume reproduces 1501681");
}

#[test]
fn criterion_7_closed_form_cross_check() {
    let lines = zariski_core::surfaces::build_segre_lines();
    let discrepancies = closed_form_discrepancies(&lines);
    if !discrepancies.is_empty() {
        // The determinant criterion stays authoritative; disagreements are
        // reported machine-readably before failing.
        for d in &discrepancies {
            eprintln!(
                "{{\"pair\":[{},{}],\"determinant\":{},\"closed_form\":{}}}",
                d.p, d.q, d.determinant_entry, d.closed_form_entry
            );
        }
    }
    assert!(
        discrepancies.is_empty(),
        "{} disagreements between closed form and determinant",
        discrepancies.len()
    );
    println!("[PASS] criterion 7: closed-form entries agree with the determinant criterion on all 2016 pairs");
}

#[test]
fn criterion_8_desk_scale_segre_prefixes() {
    let segre = build_segre_matrix();
    // Prefix n = 20 must match the oracle exactly.
    let prefix20 = segre.leading(20).unwrap().negated().unwrap();
    let fast = enumerate_posdef::<i64, _>(&prefix20, &mut CountOnly).unwrap();
    let naive = oracle_enumerate_with::<i64, _>(&prefix20, 20, false, &mut CountOnly).unwrap();
    assert!(fast.same_counts(&naive.chambers));
    // Prefixes up to n = 32 complete, with monotonically growing counts.
    let mut last = fast.posdef_submatrix_count;
    for n in [24, 28, 32] {
        let prefix = segre.leading(n).unwrap().negated().unwrap();
        let report = enumerate_posdef::<i64, _>(&prefix, &mut CountOnly).unwrap();
        assert!(
            report.posdef_submatrix_count > last,
            "prefix {n} count did not grow"
        );
        last = report.posdef_submatrix_count;
    }
    println!("[PASS] criterion 8 (desk scale): prefixes to 32 complete; prefix 20 matches oracle");
}

/// Support-size table for the full 64-line run.
const FULL_SEGRE_HISTOGRAM: [(usize, u64); 19] = [
    (1, 64),
    (2, 2016),
    (3, 41_376),
    (4, 605_856),
    (5, 6_343_776),
    (6, 45_613_512),
    (7, 217_025_520),
    (8, 674_047_818),
    (9, 1_376_161_536),
    (10, 1_900_843_848),
    (11, 1_832_006_112),
    (12, 1_264_421_472),
    (13, 635_795_760),
    (14, 233_619_648),
    (15, 61_499_712),
    (16, 11_037_702),
    (17, 1_246_368),
    (18, 69_744),
    (19, 1_728),
];

#[test]
#[ignore = "extended run: 8.26e9 subsets, hours to days depending on cores"]
fn criterion_8_extended_full_segre_run() {
    let negated = build_segre_matrix().negated().unwrap();
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get());
    let report = enumerate_parallel::<i64>(&negated, workers).unwrap();
    assert_eq!(report.total_chambers, 8_260_383_569);
    assert_eq!(report.posdef_submatrix_count, 8_260_383_568);
    for (l, want) in FULL_SEGRE_HISTOGRAM {
        assert_eq!(report.histogram.get(l), want, "support size {l}");
    }
    assert_eq!(report.max_support, 19);
    println!("[PASS] criterion 8 (extended): full Segre-Schur run matches the published table");
}

#[test]
fn full_segre_histogram_table_is_internally_consistent() {
    // The pinned table must sum to the pinned total minus the nef chamber.
    let sum: u64 = FULL_SEGRE_HISTOGRAM.iter().map(|&(_, c)| c).sum();
    assert_eq!(sum, 8_260_383_568);
}

#[test]
fn criterion_9_benchmark_trend() {
    // Qualitative direction only: the incremental algorithm must win on the
    // Segre prefix n = 24 and the tridiagonal n = 21; small cases may go
    // either way and are not asserted.
    let segre24 = build_segre_matrix().leading(24).unwrap().negated().unwrap();
    let cmp = bench_compare::<i64>(&segre24, 1, 24).unwrap();
    assert!(
        cmp.factor > 1.0,
        "Segre prefix 24: naive/incremental = {:.2}",
        cmp.factor
    );
    let fermat21 = build_fermat_tridiagonal(21).unwrap().negated().unwrap();
    let cmp2 = bench_compare::<i64>(&fermat21, 1, 21).unwrap();
    assert!(
        cmp2.factor > 1.0,
        "Fermat tridiagonal 21: naive/incremental = {:.2}",
        cmp2.factor
    );
    println!(
        "[PASS] criterion 9: incremental wins at scale (segre-24 factor {:.2}, fermat-21 factor {:.2})",
        cmp.factor, cmp2.factor
    );
}
