//! Search-tree splitting for the enumerator.
//!
//! The tree is partitioned by a crown pass: a sequential enumeration capped
//! at the split depth counts every qualifying subset of that size or smaller
//! and collects the subsets of exactly that size as task roots. Each task
//! then owns the subtree of extensions of its root (indices beyond the
//! root's maximum), with a private elimination state. Counts and histograms
//! merge by addition, so the aggregate is identical to the sequential result
//! for every worker count.
//!
//! With the `parallel` feature (default) tasks run on a rayon pool sized to
//! the requested worker count; without it the same task decomposition runs
//! on the calling thread, so results are identical either way.
//!
//! Task completions are the quiescent boundaries of a parallel run: a
//! checkpoint records the split depth and the ids of completed tasks, and a
//! resumed run re-derives the task list and skips those.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::bareiss::EliminationState;
use crate::checkpoint::{Checkpoint, CheckpointPayload};
use crate::enumerate::{
    enumerate_with, ChamberReport, EnumerationOptions, Histogram, RunOutcome, SubsetVisitor,
};
use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;
use crate::num::ExactInt;

/// Depth is capped even when the auto rule would split deeper; crowns beyond
/// this are expensive to enumerate and give no additional balance in practice.
const MAX_AUTO_DEPTH: usize = 8;

/// Leaf-task target per worker for the automatic split-depth rule.
const TASKS_PER_WORKER: usize = 8;

#[derive(Default)]
pub struct ParallelOptions<'a> {
    /// Fixed split depth; `None` selects the smallest depth that yields at
    /// least eight tasks per worker.
    pub split_depth: Option<usize>,
    /// Cooperative interrupt. In-flight tasks abort and are not counted;
    /// completed tasks are checkpointed.
    pub stop: Option<&'a AtomicBool>,
    /// Emit a checkpoint every this many completed tasks.
    pub checkpoint_interval_tasks: Option<u64>,
}

/// Unordered per-subset callback shared across workers.
pub type SharedVisit<'a> = &'a (dyn Fn(&[usize]) + Sync);

struct Accumulator {
    histogram: Histogram,
    completed: Vec<u64>,
}

/// Counting-mode parallel enumeration; report identical to the sequential
/// enumerator for every worker count.
pub fn enumerate_parallel<I: ExactInt>(
    a: &SymmetricIntMatrix,
    workers: usize,
) -> Result<ChamberReport> {
    enumerate_parallel_with::<I>(
        a,
        workers,
        &ParallelOptions::default(),
        None,
        &|_| Ok(()),
        &|_, _| {},
    )?
    .into_complete()
}

/// Parallel enumeration with an unordered per-subset callback.
pub fn enumerate_parallel_visit<I: ExactInt>(
    a: &SymmetricIntMatrix,
    workers: usize,
    visit: SharedVisit,
) -> Result<ChamberReport> {
    drive::<I>(
        a,
        workers,
        &ParallelOptions::default(),
        None,
        &|_| Ok(()),
        &|_, _| {},
        Some(visit),
    )?
    .into_complete()
}

/// Full-control parallel enumeration: resumable, checkpointing at task
/// completions, with a completed-task progress callback.
pub fn enumerate_parallel_with<I: ExactInt>(
    a: &SymmetricIntMatrix,
    workers: usize,
    options: &ParallelOptions,
    resume: Option<&Checkpoint>,
    on_checkpoint: &(dyn Fn(&Checkpoint) -> Result<()> + Sync),
    progress: &(dyn Fn(u64, u64) + Sync),
) -> Result<RunOutcome> {
    drive::<I>(a, workers, options, resume, on_checkpoint, progress, None)
}

fn drive<I: ExactInt>(
    a: &SymmetricIntMatrix,
    workers: usize,
    options: &ParallelOptions,
    resume: Option<&Checkpoint>,
    on_checkpoint: &(dyn Fn(&Checkpoint) -> Result<()> + Sync),
    progress: &(dyn Fn(u64, u64) + Sync),
    visit: Option<SharedVisit>,
) -> Result<RunOutcome> {
    let n = a.dim();
    let workers = workers.max(1);
    let started = Instant::now();

    let (depth, roots, base_histogram, completed_ids, prior_elapsed) = match resume {
        Some(cp) => {
            cp.verify_matrix(a)?;
            let (split_depth, task_count, completed) = match &cp.payload {
                CheckpointPayload::Parallel {
                    split_depth,
                    task_count,
                    completed,
                } => (*split_depth, *task_count, completed.clone()),
                CheckpointPayload::Sequential { .. } => {
                    return Err(Error::CheckpointCorrupt(
                        "sequential checkpoint passed to the parallel driver".into(),
                    ))
                }
            };
            if visit.is_some() {
                return Err(Error::CheckpointCorrupt(
                    "resume is counting-mode only; a visitor would re-report crown subsets".into(),
                ));
            }
            let (_, roots) = crown::<I>(a, split_depth, None)?;
            if roots.len() as u64 != task_count {
                return Err(Error::CheckpointCorrupt(format!(
                    "checkpoint expects {task_count} tasks, matrix yields {}",
                    roots.len()
                )));
            }
            let mut seen = vec![false; roots.len()];
            for &id in &completed {
                match usize::try_from(id).ok().filter(|&i| i < roots.len()) {
                    Some(i) if !seen[i] => seen[i] = true,
                    _ => {
                        return Err(Error::CheckpointCorrupt(format!(
                            "completed task id {id} out of range or duplicated"
                        )))
                    }
                }
            }
            let base = Histogram::from_counts(cp.histogram.clone(), n)?;
            (
                split_depth,
                roots,
                base,
                completed,
                Duration::from_millis(cp.elapsed_ms),
            )
        }
        None => {
            let mut depth = options.split_depth.unwrap_or(1).clamp(1, n);
            let auto = options.split_depth.is_none();
            let target = TASKS_PER_WORKER * workers;
            let (mut crown_hist, mut roots) = crown::<I>(a, depth, visit)?;
            if auto {
                while roots.len() < target && !roots.is_empty() && depth < n.min(MAX_AUTO_DEPTH) {
                    depth += 1;
                    // Re-enumerating the crown repeats work, but the crowns in
                    // question are tiny next to the subtrees they split. The
                    // deeper crown must replay the visitor from scratch, so
                    // visitor runs pin the depth on the first pass instead.
                    if visit.is_some() {
                        depth -= 1;
                        break;
                    }
                    let redo = crown::<I>(a, depth, None)?;
                    crown_hist = redo.0;
                    roots = redo.1;
                }
            }
            (depth, roots, crown_hist, Vec::new(), Duration::ZERO)
        }
    };

    let task_count = roots.len() as u64;
    let done: std::collections::HashSet<u64> = completed_ids.iter().copied().collect();
    let pending: Vec<(u64, &[usize])> = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (i as u64, r.as_slice()))
        .filter(|(i, _)| !done.contains(i))
        .collect();

    if pending.is_empty() {
        let report = report_from(n, base_histogram, prior_elapsed + started.elapsed());
        return Ok(RunOutcome::Complete(report));
    }

    let initially_done = completed_ids.len() as u64;
    let acc = Mutex::new(Accumulator {
        histogram: base_histogram,
        completed: completed_ids,
    });
    let stop = options.stop;
    let interval = options.checkpoint_interval_tasks;

    let task_body = |state: &mut EliminationState<I>, (id, root): (u64, &[usize])| -> Result<()> {
        if stop.is_some_and(|s| s.load(Ordering::Relaxed)) {
            return Ok(());
        }
        let Some(histogram) = run_task(state, root, stop, visit)? else {
            return Ok(());
        };
        let mut guard = acc.lock().map_err(|_| {
            Error::Internal("accumulator lock poisoned by a worker panic".into())
        })?;
        guard.histogram.merge(&histogram);
        guard.completed.push(id);
        let done_now = guard.completed.len() as u64;
        if interval.is_some_and(|iv| iv > 0 && (done_now - initially_done).is_multiple_of(iv))
            && done_now < task_count
        {
            let cp = parallel_checkpoint(
                a,
                &guard,
                depth,
                task_count,
                prior_elapsed + started.elapsed(),
            );
            on_checkpoint(&cp)?;
        }
        drop(guard);
        progress(done_now, task_count);
        Ok(())
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Internal(format!("failed to build worker pool: {e}")))?;
        pool.install(|| {
            pending
                .par_iter()
                .try_for_each_init(|| EliminationState::<I>::new(a), |state, &(id, root)| {
                    task_body(state, (id, root))
                })
        })?;
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut state = EliminationState::<I>::new(a);
        for &(id, root) in &pending {
            task_body(&mut state, (id, root))?;
        }
    }

    let guard = acc
        .into_inner()
        .map_err(|_| Error::Internal("accumulator lock poisoned by a worker panic".into()))?;
    if stop.is_some_and(|s| s.load(Ordering::Relaxed)) && (guard.completed.len() as u64) < task_count
    {
        let elapsed = prior_elapsed + started.elapsed();
        let checkpoint = parallel_checkpoint(a, &guard, depth, task_count, elapsed);
        let partial = report_from(n, guard.histogram, elapsed);
        return Ok(RunOutcome::Interrupted {
            checkpoint,
            partial,
        });
    }
    if (guard.completed.len() as u64) != task_count {
        return Err(Error::Internal(format!(
            "only {} of {task_count} tasks completed without a stop request",
            guard.completed.len()
        )));
    }
    Ok(RunOutcome::Complete(report_from(
        n,
        guard.histogram,
        prior_elapsed + started.elapsed(),
    )))
}

fn report_from(n: usize, histogram: Histogram, elapsed: Duration) -> ChamberReport {
    ChamberReport::from_parts(n, histogram, elapsed)
}

fn parallel_checkpoint(
    a: &SymmetricIntMatrix,
    acc: &Accumulator,
    depth: usize,
    task_count: u64,
    elapsed: Duration,
) -> Checkpoint {
    let mut completed = acc.completed.clone();
    completed.sort_unstable();
    Checkpoint::new(
        a,
        acc.histogram.total(),
        acc.histogram.as_counts().to_vec(),
        elapsed.as_millis() as u64,
        CheckpointPayload::Parallel {
            split_depth: depth,
            task_count,
            completed,
        },
    )
}

/// Sequential pass up to the split depth: counts all qualifying subsets of
/// size <= depth and returns those of size == depth as task roots, in
/// depth-first lexicographic order.
fn crown<I: ExactInt>(
    a: &SymmetricIntMatrix,
    depth: usize,
    visit: Option<SharedVisit>,
) -> Result<(Histogram, Vec<Vec<usize>>)> {
    let mut roots: Vec<Vec<usize>> = Vec::new();
    struct Collector<'a> {
        depth: usize,
        roots: &'a mut Vec<Vec<usize>>,
        visit: Option<SharedVisit<'a>>,
    }
    impl SubsetVisitor for Collector<'_> {
        fn visit(&mut self, subset: &[usize]) {
            if let Some(v) = self.visit {
                v(subset);
            }
            if subset.len() == self.depth {
                self.roots.push(subset.to_vec());
            }
        }
    }
    let mut collector = Collector {
        depth,
        roots: &mut roots,
        visit,
    };
    let options = EnumerationOptions {
        max_support: Some(depth),
        ..Default::default()
    };
    let report = enumerate_with::<I, _, _>(a, &mut collector, &options, None, &mut |_: &Checkpoint| {
        Ok(())
    })?
    .into_complete()?;
    Ok((report.histogram, roots))
}

/// Enumerate the strict extensions of `root` by indices past its maximum.
/// Returns `None` if aborted by the stop flag (partial work discarded).
fn run_task<I: ExactInt>(
    state: &mut EliminationState<I>,
    root: &[usize],
    stop: Option<&AtomicBool>,
    visit: Option<SharedVisit>,
) -> Result<Option<Histogram>> {
    state.reset();
    for &idx in root {
        state.grow(idx)?;
        if !state.is_pos_def() {
            return Err(Error::Internal(format!(
                "task root {root:?} is not positive definite"
            )));
        }
    }
    let n = state.matrix().dim();
    let base = root.len();
    let mut histogram = Histogram::new(n);
    let mut k = state.max_index().unwrap_or(0) + 1;
    loop {
        if k <= n {
            state.grow_deferred(k)?;
            if state.is_pos_def() {
                histogram.record(state.len());
                if let Some(v) = visit {
                    v(state.indices());
                }
                if stop.is_some_and(|s| s.load(Ordering::Relaxed)) {
                    return Ok(None);
                }
                k += 1;
            } else {
                state.shrink()?;
                k += 1;
            }
        } else {
            if state.len() == base {
                break;
            }
            let last = state.max_index().expect("state deeper than root");
            state.shrink()?;
            k = last + 1;
        }
    }
    Ok(Some(histogram))
}
