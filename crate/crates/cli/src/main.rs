//! Command-line front end: build or load intersection matrices, count
//! chambers (sequential, parallel, or with the naive reference enumerator),
//! manage checkpoints, export matrices and figures, and run benchmarks.
//!
//! Exit codes: 0 success, 1 usage/input error, 2 overflow, 3 interrupted
//! with a resumable checkpoint written.

mod report;
mod source;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use zariski_core::checkpoint::{Checkpoint, CheckpointPayload};
use zariski_core::enumerate::{
    enumerate_with, CountOnly, EnumerationOptions, RunOutcome, SubsetVisitor,
};
use zariski_core::error::{Error, Result};
use zariski_core::matrix::SymmetricIntMatrix;
use zariski_core::num::ExactInt;
use zariski_core::oracle::{bench_compare, oracle_enumerate_with};
use zariski_core::parallel::{enumerate_parallel_with, ParallelOptions};
use zariski_core::surfaces::{
    build_segre_lines, closed_form_discrepancies, line_on_quartic, same_line,
    segre_named_sublattice,
};
use zariski_core::{det_fraction_free, rank_exact};

use report::Report;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_OVERFLOW: i32 = 2;
const EXIT_INTERRUPTED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "zariski",
    version,
    about = "Zariski chamber counting via incremental fraction-free elimination"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count Zariski chambers of an intersection matrix
    Count(CountArgs),
    /// List the support of every chamber, one subset per line
    Subsets(SubsetsArgs),
    /// Count with the naive from-scratch reference enumerator
    Oracle(OracleArgs),
    /// Time the naive and incremental enumerators; CSV output
    Bench(BenchArgs),
    /// Structural invariants: rank, entry ranges, Segre-Schur cross-checks
    Invariants(InvariantsArgs),
    /// Write the matrix in the text interchange format
    Export(ExportArgs),
    /// Render the matrix as a grid figure (.pgm graymap or text grid)
    Render(RenderArgs),
    /// Resume an interrupted count from a checkpoint file
    Resume(ResumeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Args)]
struct SourceArgs {
    /// Builder name (del-pezzo:<r>, segre-schur, segre-schur:first16,
    /// fermat-tridiag:<n>) or a matrix file path
    #[arg(long)]
    source: String,
    /// Use only the leading k-by-k principal submatrix
    #[arg(long)]
    prefix: Option<usize>,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Worker count; above 1 the search tree is split across a thread pool
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Fixed split depth for the parallel driver (default: automatic)
    #[arg(long)]
    split_depth: Option<usize>,
    /// Use arbitrary-precision integers instead of checked 64-bit
    #[arg(long)]
    big: bool,
    /// Checkpoint file; enables periodic saves and resumable interruption
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Checkpoint cadence: visited subsets (sequential) or completed tasks
    /// (parallel)
    #[arg(long, default_value_t = 1_000_000)]
    checkpoint_interval: u64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Periodic progress lines on stderr
    #[arg(long)]
    progress: bool,
    /// Acknowledge the multi-hour full 64-line Segre-Schur run
    #[arg(long)]
    extended: bool,
}

#[derive(Args)]
struct SubsetsArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Refuse dimensions above this dump limit
    #[arg(long, default_value_t = 24)]
    guard: usize,
    #[arg(long)]
    big: bool,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Refuse dimensions above this guard
    #[arg(long, default_value_t = 24)]
    guard: usize,
    #[arg(long)]
    big: bool,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Timed repetitions per algorithm (one warm-up discarded)
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Guard for the naive enumerator
    #[arg(long, default_value_t = 24)]
    guard: usize,
    #[arg(long)]
    big: bool,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long)]
    big: bool,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Output path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Output path; `.pgm` produces a portable graymap, anything else a
    /// text grid
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ResumeArgs {
    /// Checkpoint file written by an interrupted run
    #[arg(long)]
    checkpoint: PathBuf,
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    big: bool,
    #[arg(long, default_value_t = 1_000_000)]
    checkpoint_interval: u64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[arg(long)]
    progress: bool,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Subsets(args) => cmd_subsets(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Invariants(args) => cmd_invariants(args),
        Command::Export(args) => cmd_export(args),
        Command::Render(args) => cmd_render(args),
        Command::Resume(args) => cmd_resume(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::Overflow { .. }) {
                eprintln!("hint: rerun with --big");
                EXIT_OVERFLOW
            } else {
                EXIT_USAGE
            }
        }
    }
}

/// Sequential progress reporting, rate limited to roughly one line every
/// two seconds.
struct ProgressVisitor {
    visited: u64,
    enabled: bool,
    last: Instant,
}

impl ProgressVisitor {
    fn new(enabled: bool) -> Self {
        Self {
            visited: 0,
            enabled,
            last: Instant::now(),
        }
    }
}

impl SubsetVisitor for ProgressVisitor {
    fn visit(&mut self, subset: &[usize]) {
        self.visited += 1;
        if self.enabled
            && self.visited.is_multiple_of(65_536)
            && self.last.elapsed() >= Duration::from_secs(2)
        {
            eprintln!(
                "progress: {} subsets visited, search prefix {:?}",
                self.visited, subset
            );
            self.last = Instant::now();
        }
    }
}

fn install_stop_handler() -> Arc<AtomicBool> {
    let flag = Arc::new(AtomicBool::new(false));
    let inner = Arc::clone(&flag);
    if let Err(e) = ctrlc::set_handler(move || inner.store(true, Ordering::Relaxed)) {
        eprintln!("warning: could not install interrupt handler: {e}");
    }
    flag
}

fn backend_name(big: bool) -> &'static str {
    if big {
        "bigint"
    } else {
        "i64"
    }
}

fn cmd_count(args: CountArgs) -> Result<i32> {
    let (name, matrix) = source::load(&args.source.source, args.source.prefix)?;
    if source::needs_extended_ack(&args.source.source, &matrix) && !args.extended {
        return Err(Error::UnknownSource(
            "the full 64-line Segre-Schur count enumerates 8.26e9 subsets and takes hours; \
             pass --extended to acknowledge, or --prefix to take a leading block"
                .into(),
        ));
    }
    let negated = matrix.negated()?;
    if args.big {
        count_impl::<BigInt>(&args, &name, &negated)
    } else {
        count_impl::<i64>(&args, &name, &negated)
    }
}

fn count_impl<I: ExactInt>(
    args: &CountArgs,
    name: &str,
    negated: &SymmetricIntMatrix,
) -> Result<i32> {
    let stop = args.checkpoint.as_ref().map(|_| install_stop_handler());
    let wrote_checkpoint = AtomicBool::new(false);
    let outcome = if args.workers <= 1 {
        let mut visitor = ProgressVisitor::new(args.progress);
        let options = EnumerationOptions {
            stop: stop.as_deref(),
            checkpoint_interval: args
                .checkpoint
                .is_some()
                .then_some(args.checkpoint_interval),
            ..Default::default()
        };
        let path = args.checkpoint.clone();
        let wrote = &wrote_checkpoint;
        enumerate_with::<I, _, _>(
            negated,
            &mut visitor,
            &options,
            None,
            &mut move |cp: &Checkpoint| {
                if let Some(p) = &path {
                    cp.write_file(p)?;
                    wrote.store(true, Ordering::Relaxed);
                }
                Ok(())
            },
        )?
    } else {
        let options = ParallelOptions {
            split_depth: args.split_depth,
            stop: stop.as_deref(),
            checkpoint_interval_tasks: args
                .checkpoint
                .is_some()
                .then_some(args.checkpoint_interval),
        };
        let path = args.checkpoint.clone();
        let wrote = &wrote_checkpoint;
        let progress_gate = Mutex::new(Instant::now());
        enumerate_parallel_with::<I>(
            negated,
            args.workers,
            &options,
            None,
            &move |cp| {
                if let Some(p) = &path {
                    cp.write_file(p)?;
                    wrote.store(true, Ordering::Relaxed);
                }
                Ok(())
            },
            &|done, total| {
                if args.progress {
                    let mut gate = progress_gate.lock().unwrap();
                    if gate.elapsed() >= Duration::from_secs(2) || done == total {
                        eprintln!("progress: {done}/{total} tasks complete");
                        *gate = Instant::now();
                    }
                }
            },
        )?
    };
    finish_run(
        outcome,
        "count",
        name,
        negated,
        args.workers.max(1),
        backend_name(args.big),
        args.format,
        args.checkpoint.as_deref(),
        None,
        wrote_checkpoint.load(Ordering::Relaxed),
    )
}

/// Print the report for a completed run, or write the checkpoint and exit
/// with the resumable status for an interrupted one.
#[allow(clippy::too_many_arguments)]
fn finish_run(
    outcome: RunOutcome,
    mode: &'static str,
    name: &str,
    enumerated: &SymmetricIntMatrix,
    workers: usize,
    backend: &'static str,
    format: Format,
    checkpoint_path: Option<&Path>,
    resumed_from: Option<&Path>,
    wrote_checkpoint: bool,
) -> Result<i32> {
    let hash = enumerated.content_hash();
    match outcome {
        RunOutcome::Complete(chambers) => {
            let mut rep = Report::new(mode, name, hash, workers, backend, &chambers);
            rep.resumed_from = resumed_from.map(|p| p.display().to_string());
            rep.checkpoint_written = wrote_checkpoint
                .then(|| checkpoint_path.map(|p| p.display().to_string()))
                .flatten();
            match format {
                Format::Json => rep.print_json(),
                Format::Human => rep.print_human(),
            }
            Ok(EXIT_OK)
        }
        RunOutcome::Interrupted {
            checkpoint,
            partial,
        } => {
            let path = checkpoint_path
                .ok_or_else(|| Error::Internal("interrupted without a checkpoint path".into()))?;
            checkpoint.write_file(path)?;
            eprintln!(
                "interrupted at {} visited subsets; checkpoint written to {}",
                partial.posdef_submatrix_count,
                path.display()
            );
            eprintln!(
                "resume with: zariski resume --checkpoint {} --source <same source>",
                path.display()
            );
            Ok(EXIT_INTERRUPTED)
        }
    }
}

fn cmd_resume(args: ResumeArgs) -> Result<i32> {
    let (name, matrix) = source::load(&args.source.source, args.source.prefix)?;
    let negated = matrix.negated()?;
    let checkpoint = Checkpoint::read_file(&args.checkpoint)?;
    checkpoint.verify_matrix(&negated)?;
    if args.big {
        resume_impl::<BigInt>(&args, &name, &negated, &checkpoint)
    } else {
        resume_impl::<i64>(&args, &name, &negated, &checkpoint)
    }
}

fn resume_impl<I: ExactInt>(
    args: &ResumeArgs,
    name: &str,
    negated: &SymmetricIntMatrix,
    checkpoint: &Checkpoint,
) -> Result<i32> {
    let stop = install_stop_handler();
    let path = args.checkpoint.clone();
    let wrote_checkpoint = AtomicBool::new(false);
    let wrote = &wrote_checkpoint;
    let (outcome, workers) = match &checkpoint.payload {
        CheckpointPayload::Sequential { .. } => {
            if args.workers > 1 {
                eprintln!("note: sequential checkpoint; continuing single-threaded");
            }
            let mut visitor = ProgressVisitor::new(args.progress);
            let options = EnumerationOptions {
                stop: Some(&stop),
                checkpoint_interval: Some(args.checkpoint_interval),
                ..Default::default()
            };
            let sink_path = path.clone();
            let outcome = enumerate_with::<I, _, _>(
                negated,
                &mut visitor,
                &options,
                Some(checkpoint),
                &mut move |cp: &Checkpoint| {
                    cp.write_file(&sink_path)?;
                    wrote.store(true, Ordering::Relaxed);
                    Ok(())
                },
            )?;
            (outcome, 1)
        }
        CheckpointPayload::Parallel { .. } => {
            let options = ParallelOptions {
                split_depth: None,
                stop: Some(&stop),
                checkpoint_interval_tasks: Some(args.checkpoint_interval),
            };
            let sink_path = path.clone();
            let progress_gate = Mutex::new(Instant::now());
            let outcome = enumerate_parallel_with::<I>(
                negated,
                args.workers,
                &options,
                Some(checkpoint),
                &move |cp| {
                    cp.write_file(&sink_path)?;
                    wrote.store(true, Ordering::Relaxed);
                    Ok(())
                },
                &|done, total| {
                    if args.progress {
                        let mut gate = progress_gate.lock().unwrap();
                        if gate.elapsed() >= Duration::from_secs(2) || done == total {
                            eprintln!("progress: {done}/{total} tasks complete");
                            *gate = Instant::now();
                        }
                    }
                },
            )?;
            (outcome, args.workers.max(1))
        }
    };
    finish_run(
        outcome,
        "resume",
        name,
        negated,
        workers,
        backend_name(args.big),
        args.format,
        Some(&args.checkpoint),
        Some(&args.checkpoint),
        wrote_checkpoint.load(Ordering::Relaxed),
    )
}

fn cmd_subsets(args: SubsetsArgs) -> Result<i32> {
    let (name, matrix) = source::load(&args.source.source, args.source.prefix)?;
    if matrix.dim() > args.guard {
        return Err(Error::GuardExceeded {
            n: matrix.dim(),
            guard: args.guard,
        });
    }
    let negated = matrix.negated()?;
    let collect = args.format == Format::Json;
    let mut collected: Vec<Vec<usize>> = Vec::new();
    let mut print_line = |s: &[usize]| {
        if collect {
            collected.push(s.to_vec());
        } else {
            let line: Vec<String> = s.iter().map(usize::to_string).collect();
            println!("{}", line.join(" "));
        }
    };
    let chambers = if args.big {
        zariski_core::enumerate_posdef::<BigInt, _>(&negated, &mut print_line)?
    } else {
        zariski_core::enumerate_posdef::<i64, _>(&negated, &mut print_line)?
    };
    if args.format == Format::Json {
        let mut rep = Report::new(
            "subsets",
            &name,
            negated.content_hash(),
            1,
            backend_name(args.big),
            &chambers,
        );
        rep.subsets = Some(collected);
        rep.print_json();
    }
    Ok(EXIT_OK)
}

fn cmd_oracle(args: OracleArgs) -> Result<i32> {
    let (name, matrix) = source::load(&args.source.source, args.source.prefix)?;
    let negated = matrix.negated()?;
    let report = if args.big {
        oracle_enumerate_with::<BigInt, _>(&negated, args.guard, false, &mut CountOnly)?
    } else {
        oracle_enumerate_with::<i64, _>(&negated, args.guard, false, &mut CountOnly)?
    };
    let rep = Report::new(
        "oracle",
        &name,
        negated.content_hash(),
        1,
        backend_name(args.big),
        &report.chambers,
    );
    match args.format {
        Format::Json => rep.print_json(),
        Format::Human => rep.print_human(),
    }
    Ok(EXIT_OK)
}

fn cmd_bench(args: BenchArgs) -> Result<i32> {
    let (name, matrix) = source::load(&args.source.source, args.source.prefix)?;
    let negated = matrix.negated()?;
    let cmp = if args.big {
        bench_compare::<BigInt>(&negated, args.reps, args.guard)?
    } else {
        bench_compare::<i64>(&negated, args.reps, args.guard)?
    };
    println!("matrix,n,a1_ms,a2_ms,factor");
    println!(
        "{},{},{:.3},{:.3},{:.3}",
        name,
        cmp.n,
        cmp.naive.as_secs_f64() * 1000.0,
        cmp.incremental.as_secs_f64() * 1000.0,
        cmp.factor
    );
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct InvariantsReport {
    schema: u32,
    mode: &'static str,
    source: String,
    matrix_hash: String,
    n: usize,
    integer_backend: &'static str,
    rank: usize,
    diagonal_min: i64,
    diagonal_max: i64,
    offdiagonal_min: i64,
    offdiagonal_max: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    named_sublattice_discriminant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form_discrepancies: Option<Vec<BTreeMap<&'static str, i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lines_on_quartic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lines_pairwise_distinct: Option<bool>,
}

fn cmd_invariants(args: InvariantsArgs) -> Result<i32> {
    let (name, matrix) = source::load(&args.source.source, args.source.prefix)?;
    let n = matrix.dim();
    // i64 first, escalating to arbitrary precision on overflow
    let (rank, backend) = if args.big {
        (rank_exact::<BigInt>(matrix.as_square())?, "bigint")
    } else {
        match rank_exact::<i64>(matrix.as_square()) {
            Ok(r) => (r, "i64"),
            Err(Error::Overflow { .. }) => (rank_exact::<BigInt>(matrix.as_square())?, "bigint"),
            Err(e) => return Err(e),
        }
    };
    let mut diag = (i64::MAX, i64::MIN);
    let mut off = (i64::MAX, i64::MIN);
    for i in 1..=n {
        for j in 1..=n {
            let v = matrix.get(i, j);
            let slot = if i == j { &mut diag } else { &mut off };
            slot.0 = slot.0.min(v);
            slot.1 = slot.1.max(v);
        }
    }
    if n == 1 {
        off = (0, 0);
    }

    let is_full_segre = args.source.source == "segre-schur" && n == 64;
    let mut rep = InvariantsReport {
        schema: report::SCHEMA_VERSION,
        mode: "invariants",
        source: name.clone(),
        matrix_hash: format!("{:016x}", matrix.content_hash()),
        n,
        integer_backend: backend,
        rank,
        diagonal_min: diag.0,
        diagonal_max: diag.1,
        offdiagonal_min: off.0,
        offdiagonal_max: off.1,
        named_sublattice_discriminant: None,
        closed_form_agreement: None,
        closed_form_discrepancies: None,
        lines_on_quartic: None,
        lines_pairwise_distinct: None,
    };
    if is_full_segre {
        let gram = matrix.principal(&segre_named_sublattice())?;
        let disc = match det_fraction_free::<i64>(&gram) {
            Ok(d) => d.to_string(),
            Err(Error::Overflow { .. }) => det_fraction_free::<BigInt>(&gram)?.to_string(),
            Err(e) => return Err(e),
        };
        rep.named_sublattice_discriminant = Some(disc);
        let lines = build_segre_lines();
        let discrepancies = closed_form_discrepancies(&lines);
        rep.closed_form_agreement = Some(discrepancies.is_empty());
        rep.closed_form_discrepancies = Some(
            discrepancies
                .iter()
                .map(|d| {
                    BTreeMap::from([
                        ("p", d.p as i64),
                        ("q", d.q as i64),
                        ("determinant", d.determinant_entry),
                        ("closed_form", d.closed_form_entry),
                    ])
                })
                .collect(),
        );
        rep.lines_on_quartic = Some(lines.iter().all(line_on_quartic));
        let mut distinct = true;
        for p in 0..lines.len() {
            for q in p + 1..lines.len() {
                if same_line(&lines[p], &lines[q]) {
                    distinct = false;
                }
            }
        }
        rep.lines_pairwise_distinct = Some(distinct);
    }

    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&rep).expect("serializable")
        ),
        Format::Human => {
            println!(
                "source: {}  (n = {}, hash = {})",
                rep.source, rep.n, rep.matrix_hash
            );
            println!("rank: {}", rep.rank);
            println!(
                "diagonal: {}",
                if diag.0 == diag.1 {
                    format!("all {}", diag.0)
                } else {
                    format!("in [{}, {}]", diag.0, diag.1)
                }
            );
            println!("off-diagonal: in [{}, {}]", off.0, off.1);
            if let Some(d) = &rep.named_sublattice_discriminant {
                println!("named 20-line sublattice discriminant: {d}");
            }
            if let Some(ok) = rep.closed_form_agreement {
                if ok {
                    println!("closed-form vs determinant entries: OK (2016 pairs)");
                } else {
                    let list = rep.closed_form_discrepancies.as_ref().unwrap();
                    println!(
                        "closed-form vs determinant entries: {} DISAGREEMENTS",
                        list.len()
                    );
                    for d in list {
                        println!(
                            "  pair ({}, {}): determinant {} vs closed form {}",
                            d["p"], d["q"], d["determinant"], d["closed_form"]
                        );
                    }
                }
            }
            if let Some(ok) = rep.lines_on_quartic {
                println!(
                    "lines on the quartic (symbolic): {}",
                    if ok { "64/64" } else { "FAILED" }
                );
            }
            if let Some(ok) = rep.lines_pairwise_distinct {
                println!("lines pairwise distinct: {}", if ok { "yes" } else { "NO" });
            }
            println!("backend: {}", rep.integer_backend);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_export(args: ExportArgs) -> Result<i32> {
    let (_, matrix) = source::load(&args.source.source, args.source.prefix)?;
    matrix.write_file(&args.out)?;
    Ok(EXIT_OK)
}

fn cmd_render(args: RenderArgs) -> Result<i32> {
    let (_, matrix) = source::load(&args.source.source, args.source.prefix)?;
    let n = matrix.dim();
    let pgm = args
        .out
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("pgm"));
    let mut out = String::new();
    if pgm {
        // Portable graymap: negative entries black, zero grey, positive
        // white.
        out.push_str("P2\n");
        out.push_str(&format!("{n} {n}\n255\n"));
        for i in 1..=n {
            let row: Vec<&str> = (1..=n)
                .map(|j| match matrix.get(i, j) {
                    v if v < 0 => "0",
                    0 => "128",
                    _ => "255",
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    } else {
        for i in 1..=n {
            for j in 1..=n {
                out.push(match matrix.get(i, j) {
                    v if v < 0 => '#',
                    0 => '.',
                    _ => '*',
                });
            }
            out.push('\n');
        }
    }
    std::fs::write(&args.out, out)?;
    Ok(EXIT_OK)
}
