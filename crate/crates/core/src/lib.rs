//! Exact-integer enumeration of positive definite principal submatrices of
//! symmetric matrices, and Zariski chamber counts built on it.
//!
//! The enumerator maintains a Bareiss trigonalization incrementally across
//! the backtracking search, so each definiteness test is a constant-time
//! sign check after an `O(s^2)` update instead of an `O(s^3)` determinant
//! from scratch. A naive from-scratch enumerator is kept alongside as the
//! correctness oracle and benchmark baseline.
//!
//! The `surfaces` module constructs the intersection matrices the counts are
//! applied to: Del Pezzo exceptional-curve configurations, tridiagonal
//! Fermat-type configurations, and the 64 lines on the Segre-Schur quartic
//! rebuilt from exact cyclotomic line equations.

pub mod bareiss;
pub mod checkpoint;
pub mod cyclotomic;
pub mod enumerate;
pub mod error;
pub mod matrix;
pub mod num;
pub mod oracle;
pub mod parallel;
pub mod surfaces;

pub use bareiss::{
    det_fraction_free, lattice_invariants, leading_minors_all_positive, rank_exact,
    EliminationState, LatticeInvariants,
};
pub use checkpoint::{Checkpoint, CheckpointPayload, CHECKPOINT_VERSION};
pub use enumerate::{
    count_zariski_chambers, enumerate_posdef, enumerate_with, ChamberReport, CountOnly,
    EnumerationOptions, Histogram, RunOutcome, SubsetVisitor,
};
pub use error::{Error, Result};
pub use matrix::{SquareIntMatrix, SymmetricIntMatrix};
pub use num::ExactInt;
pub use oracle::{bench_compare, oracle_enumerate, BenchComparison, OracleReport};
pub use parallel::{enumerate_parallel, enumerate_parallel_with, ParallelOptions};
