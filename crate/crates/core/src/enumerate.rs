//! Backtracking enumeration of positive definite principal submatrices over
//! an incrementally maintained elimination state.
//!
//! The traversal is depth-first lexicographic on sorted index lists
//! ({1}, {1,2}, {1,2,3}, ...), each membership decision is a constant-time
//! sign test after an `O(s^2)` grow, and a branch is pruned as soon as its
//! subset fails the test: positive definiteness is inherited by principal
//! submatrices, so no superset extending past a failed subset can qualify.
//!
//! Chamber counting is the entrywise-negated application: the number of
//! Zariski chambers is one (the nef chamber) plus the number of positive
//! definite principal submatrices of the negated intersection matrix.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use crate::bareiss::EliminationState;
use crate::checkpoint::{Checkpoint, CheckpointPayload};
use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;
use crate::num::ExactInt;

/// Per-cardinality subset counts; index is the support size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    counts: Vec<u64>,
}

impl Histogram {
    pub fn new(dimension: usize) -> Self {
        Self {
            counts: vec![0; dimension + 1],
        }
    }

    pub fn from_counts(counts: Vec<u64>, dimension: usize) -> Result<Self> {
        if counts.len() != dimension + 1 || counts[0] != 0 {
            return Err(Error::CheckpointCorrupt(format!(
                "histogram has {} entries for dimension {dimension}",
                counts.len()
            )));
        }
        Ok(Self { counts })
    }

    pub fn record(&mut self, cardinality: usize) {
        self.counts[cardinality] += 1;
    }

    pub fn merge(&mut self, other: &Histogram) {
        assert_eq!(self.counts.len(), other.counts.len());
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    pub fn get(&self, cardinality: usize) -> u64 {
        self.counts.get(cardinality).copied().unwrap_or(0)
    }

    /// Sum of all counts, i.e. the number of qualifying subsets.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Largest cardinality with a nonzero count; 0 when empty.
    pub fn max_support(&self) -> usize {
        self.counts
            .iter()
            .rposition(|&c| c > 0)
            .unwrap_or(0)
    }

    /// (cardinality, count) pairs with nonzero count, ascending.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(l, &c)| (l, c))
    }

    pub fn as_counts(&self) -> &[u64] {
        &self.counts
    }
}

/// Result of a chamber count or subset enumeration.
#[derive(Debug, Clone)]
pub struct ChamberReport {
    pub matrix_dimension: usize,
    /// Number of positive definite principal submatrices found.
    pub posdef_submatrix_count: u64,
    /// Chamber total: the nef chamber plus one chamber per qualifying subset.
    pub total_chambers: u64,
    pub histogram: Histogram,
    pub max_support: usize,
    pub elapsed: Duration,
}

impl ChamberReport {
    pub(crate) fn from_parts(dimension: usize, histogram: Histogram, elapsed: Duration) -> Self {
        let posdef = histogram.total();
        Self {
            matrix_dimension: dimension,
            posdef_submatrix_count: posdef,
            total_chambers: posdef + 1,
            max_support: histogram.max_support(),
            histogram,
            elapsed,
        }
    }

    /// Equality of everything except wall-clock time.
    pub fn same_counts(&self, other: &ChamberReport) -> bool {
        self.matrix_dimension == other.matrix_dimension
            && self.posdef_submatrix_count == other.posdef_submatrix_count
            && self.total_chambers == other.total_chambers
            && self.histogram == other.histogram
            && self.max_support == other.max_support
    }
}

/// Callback invoked once per qualifying subset, in depth-first lexicographic
/// order for the sequential enumerator. Receives the sorted 1-based index
/// list; must not retain the slice.
pub trait SubsetVisitor {
    fn visit(&mut self, subset: &[usize]);
}

impl<F: FnMut(&[usize])> SubsetVisitor for F {
    fn visit(&mut self, subset: &[usize]) {
        self(subset)
    }
}

/// Pure counting mode: the subset list is never materialized.
#[derive(Debug, Default)]
pub struct CountOnly;

impl SubsetVisitor for CountOnly {
    fn visit(&mut self, _subset: &[usize]) {}
}

/// Knobs for a sequential enumeration run.
#[derive(Default)]
pub struct EnumerationOptions<'a> {
    /// Do not visit subsets with more than this many elements.
    pub max_support: Option<usize>,
    /// Run the full state invariant check after every grow and shrink.
    pub validate_states: bool,
    /// Cooperative interrupt, checked at subset-visit boundaries.
    pub stop: Option<&'a AtomicBool>,
    /// Emit a checkpoint to the sink every this many visited subsets.
    pub checkpoint_interval: Option<u64>,
}

/// How a run ended: complete, or interrupted at a quiescent boundary with a
/// resumable checkpoint.
#[derive(Debug, Clone)]
pub enum RunOutcome {
    Complete(ChamberReport),
    Interrupted {
        checkpoint: Checkpoint,
        partial: ChamberReport,
    },
}

impl RunOutcome {
    pub fn into_complete(self) -> Result<ChamberReport> {
        match self {
            RunOutcome::Complete(r) => Ok(r),
            RunOutcome::Interrupted { .. } => Err(Error::Internal(
                "run interrupted where completion was required".into(),
            )),
        }
    }
}

/// Full-control sequential enumerator: visitor, options, optional resume
/// checkpoint, and a sink for interval checkpoints.
pub fn enumerate_with<I, V, C>(
    a: &SymmetricIntMatrix,
    visitor: &mut V,
    options: &EnumerationOptions,
    resume: Option<&Checkpoint>,
    on_checkpoint: &mut C,
) -> Result<RunOutcome>
where
    I: ExactInt,
    V: SubsetVisitor + ?Sized,
    C: FnMut(&Checkpoint) -> Result<()> + ?Sized,
{
    let n = a.dim();
    let cap = options.max_support.unwrap_or(n).min(n);
    let mut state = EliminationState::<I>::new(a);
    let mut histogram = Histogram::new(n);
    let mut visited: u64 = 0;
    let mut prior_elapsed = Duration::ZERO;
    let mut k: usize = 1;

    if let Some(cp) = resume {
        cp.verify_matrix(a)?;
        let (indices, next_k) = match &cp.payload {
            CheckpointPayload::Sequential { indices, next_k } => (indices.clone(), *next_k),
            CheckpointPayload::Parallel { .. } => {
                return Err(Error::CheckpointCorrupt(
                    "parallel checkpoint passed to the sequential enumerator".into(),
                ))
            }
        };
        for &idx in &indices {
            state.grow(idx)?;
            if !state.is_pos_def() {
                return Err(Error::CheckpointCorrupt(format!(
                    "frontier prefix {:?} is not positive definite",
                    state.indices()
                )));
            }
        }
        if next_k <= state.max_index().unwrap_or(0) {
            return Err(Error::CheckpointCorrupt(format!(
                "frontier index {next_k} does not extend the saved subset"
            )));
        }
        histogram = Histogram::from_counts(cp.histogram.clone(), n)?;
        visited = cp.visited;
        prior_elapsed = Duration::from_millis(cp.elapsed_ms);
        k = next_k;
    }

    let started = Instant::now();
    loop {
        if k <= n && state.len() < cap {
            if options.validate_states {
                state.grow(k)?;
                state.validate()?;
            } else {
                state.grow_deferred(k)?;
            }
            if state.is_pos_def() {
                visited += 1;
                histogram.record(state.len());
                visitor.visit(state.indices());

                // Quiescent boundary: safe to checkpoint or stop.
                let stop_now = options.stop.is_some_and(|s| s.load(Ordering::Relaxed));
                let interval_hit = options
                    .checkpoint_interval
                    .is_some_and(|iv| iv > 0 && visited.is_multiple_of(iv));
                if stop_now || interval_hit {
                    let checkpoint = Checkpoint::new(
                        a,
                        visited,
                        histogram.as_counts().to_vec(),
                        (prior_elapsed + started.elapsed()).as_millis() as u64,
                        CheckpointPayload::Sequential {
                            indices: state.indices().to_vec(),
                            next_k: k + 1,
                        },
                    );
                    if stop_now {
                        let partial = ChamberReport::from_parts(
                            n,
                            histogram,
                            prior_elapsed + started.elapsed(),
                        );
                        return Ok(RunOutcome::Interrupted {
                            checkpoint,
                            partial,
                        });
                    }
                    on_checkpoint(&checkpoint)?;
                }
                k += 1;
            } else {
                state.shrink()?;
                if options.validate_states {
                    state.validate()?;
                }
                k += 1;
            }
        } else {
            match state.max_index() {
                None => break,
                Some(last) => {
                    state.shrink()?;
                    if options.validate_states {
                        state.validate()?;
                    }
                    k = last + 1;
                }
            }
        }
    }
    Ok(RunOutcome::Complete(ChamberReport::from_parts(
        n,
        histogram,
        prior_elapsed + started.elapsed(),
    )))
}

/// Enumerate every nonempty `S` with `A_S` positive definite, invoking the
/// visitor once per subset in depth-first lexicographic order.
pub fn enumerate_posdef<I: ExactInt, V: SubsetVisitor + ?Sized>(
    a: &SymmetricIntMatrix,
    visitor: &mut V,
) -> Result<ChamberReport> {
    enumerate_with::<I, _, _>(
        a,
        visitor,
        &EnumerationOptions::default(),
        None,
        &mut |_: &Checkpoint| Ok(()),
    )?
    .into_complete()
}

/// Number of Zariski chambers supported by subsets of the curves behind the
/// given intersection matrix: the enumerator applied to the entrywise
/// negation, plus one for the nef chamber.
pub fn count_zariski_chambers<I: ExactInt>(
    intersection_matrix: &SymmetricIntMatrix,
) -> Result<ChamberReport> {
    let negated = intersection_matrix.negated()?;
    enumerate_posdef::<I, _>(&negated, &mut CountOnly)
}
