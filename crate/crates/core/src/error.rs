use thiserror::Error;

/// Errors surfaced by matrix construction, elimination, enumeration and
/// checkpointing. Overflow is always reported, never wrapped around.
#[derive(Debug, Error)]
pub enum Error {
    #[error("integer overflow in {context}; rerun with arbitrary-precision integers")]
    Overflow { context: &'static str },

    /// A Bareiss division left a nonzero remainder, a zero pivot appeared on
    /// the incremental path, or a state invariant failed. Signals a bug or a
    /// violated precondition, never a property of valid input.
    #[error("internal consistency violation: {0}")]
    Internal(String),

    #[error("shrink called on an empty index set")]
    EmptyShrink,

    #[error("grow index {k} invalid: must satisfy max(S) = {max} < k <= n = {n}")]
    GrowIndex { k: usize, max: usize, n: usize },

    #[error("matrix dimension must be >= 1, got {0}")]
    Dimension(usize),

    #[error("matrix is not symmetric: entry ({i},{j}) = {a} but ({j},{i}) = {b}")]
    NotSymmetric { i: usize, j: usize, a: i64, b: i64 },

    #[error("matrix parse error: {0}")]
    Parse(String),

    #[error("dimension {n} exceeds guard limit {guard}; raise the guard to proceed")]
    GuardExceeded { n: usize, guard: usize },

    #[error("unknown matrix source `{0}`")]
    UnknownSource(String),

    #[error("checkpoint matrix hash mismatch: checkpoint has {expected:016x}, matrix has {actual:016x}")]
    CheckpointMismatch { expected: u64, actual: u64 },

    #[error("unsupported checkpoint format version {0}")]
    CheckpointVersion(u32),

    #[error("corrupt checkpoint: {0}")]
    CheckpointCorrupt(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
