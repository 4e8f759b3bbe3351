//! Naive reference enumerator: the same backtracking traversal, but every
//! membership decision recomputes the leading principal minors of the
//! candidate submatrix from scratch. Serves as the correctness oracle for
//! small dimensions and as the baseline side of the benchmark comparison.

use std::time::{Duration, Instant};

use crate::bareiss::leading_minors_all_positive;
use crate::enumerate::{enumerate_posdef, ChamberReport, CountOnly, Histogram, SubsetVisitor};
use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;
use crate::num::ExactInt;

pub const DEFAULT_GUARD: usize = 24;

/// Largest dimension for which the per-subset decision log may be recorded.
pub const DECISION_LOG_LIMIT: usize = 20;

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub chambers: ChamberReport,
    /// Every tested subset with its verdict, in traversal order. Only
    /// recorded on request and for dimensions up to [`DECISION_LOG_LIMIT`].
    pub decisions: Option<Vec<(Vec<usize>, bool)>>,
}

/// Enumerate positive definite principal submatrices by per-subset
/// from-scratch tests. Refuses dimensions above the guard outright rather
/// than truncating.
pub fn oracle_enumerate<I: ExactInt>(
    a: &SymmetricIntMatrix,
    max_n_guard: usize,
) -> Result<OracleReport> {
    oracle_enumerate_with::<I, _>(a, max_n_guard, false, &mut CountOnly)
}

pub fn oracle_enumerate_with<I: ExactInt, V: SubsetVisitor + ?Sized>(
    a: &SymmetricIntMatrix,
    max_n_guard: usize,
    record_decisions: bool,
    visitor: &mut V,
) -> Result<OracleReport> {
    let n = a.dim();
    if n > max_n_guard {
        return Err(Error::GuardExceeded {
            n,
            guard: max_n_guard,
        });
    }
    let mut decisions = (record_decisions && n <= DECISION_LOG_LIMIT).then(Vec::new);
    let started = Instant::now();
    let mut histogram = Histogram::new(n);
    let mut subset: Vec<usize> = Vec::with_capacity(n);
    let mut k = 1usize;
    loop {
        if k <= n {
            subset.push(k);
            let accepted = leading_minors_all_positive::<I>(&a.principal(&subset)?)?;
            if let Some(log) = decisions.as_mut() {
                log.push((subset.clone(), accepted));
            }
            if accepted {
                histogram.record(subset.len());
                visitor.visit(&subset);
            } else {
                subset.pop();
            }
            k += 1;
        } else {
            match subset.pop() {
                None => break,
                Some(last) => k = last + 1,
            }
        }
    }
    let posdef = histogram.total();
    Ok(OracleReport {
        chambers: ChamberReport {
            matrix_dimension: n,
            posdef_submatrix_count: posdef,
            total_chambers: posdef + 1,
            max_support: histogram.max_support(),
            histogram,
            elapsed: started.elapsed(),
        },
        decisions,
    })
}

/// Timing pair for the naive and incremental enumerators on one matrix.
#[derive(Debug, Clone)]
pub struct BenchComparison {
    pub n: usize,
    /// Median wall time of the naive enumerator.
    pub naive: Duration,
    /// Median wall time of the incremental enumerator.
    pub incremental: Duration,
    /// naive / incremental; above 1 means the incremental algorithm wins.
    pub factor: f64,
    pub posdef_submatrix_count: u64,
}

/// Median wall-clock comparison over `repetitions` timed runs each, after
/// one discarded warm-up of both. The two sides must agree on the count;
/// disagreement aborts the benchmark.
pub fn bench_compare<I: ExactInt>(
    a: &SymmetricIntMatrix,
    repetitions: usize,
    max_n_guard: usize,
) -> Result<BenchComparison> {
    let repetitions = repetitions.max(1);
    let naive_count = oracle_enumerate::<I>(a, max_n_guard)?
        .chambers
        .posdef_submatrix_count;
    let incremental_count = enumerate_posdef::<I, _>(a, &mut CountOnly)?.posdef_submatrix_count;
    if naive_count != incremental_count {
        return Err(Error::Internal(format!(
            "enumerator mismatch: naive found {naive_count}, incremental {incremental_count}"
        )));
    }
    let mut naive_times = Vec::with_capacity(repetitions);
    let mut incremental_times = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let t = Instant::now();
        oracle_enumerate::<I>(a, max_n_guard)?;
        naive_times.push(t.elapsed());
        let t = Instant::now();
        enumerate_posdef::<I, _>(a, &mut CountOnly)?;
        incremental_times.push(t.elapsed());
    }
    let naive = median(&mut naive_times);
    let incremental = median(&mut incremental_times);
    let factor = naive.as_secs_f64() / incremental.as_secs_f64().max(f64::MIN_POSITIVE);
    Ok(BenchComparison {
        n: a.dim(),
        naive,
        incremental,
        factor,
        posdef_submatrix_count: naive_count,
    })
}

fn median(times: &mut [Duration]) -> Duration {
    times.sort_unstable();
    let mid = times.len() / 2;
    if times.len() % 2 == 1 {
        times[mid]
    } else {
        (times[mid - 1] + times[mid]) / 2
    }
}
