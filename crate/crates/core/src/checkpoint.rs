//! Resumable run state. A checkpoint binds a hash of the input matrix to a
//! frontier taken at a quiescent boundary, plus the partial histogram, so a
//! resumed run finishes with a report identical to an uninterrupted one.
//! Resumption against a different matrix is refused.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;

pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckpointPayload {
    /// Sequential frontier: the subset just visited and the next candidate
    /// index at that level.
    Sequential { indices: Vec<usize>, next_k: usize },
    /// Parallel task ledger: the split depth that generated the task roots
    /// and the ids of tasks whose subtrees are fully counted. The shared
    /// histogram covers the crown (subsets up to the split depth) plus all
    /// completed tasks.
    Parallel {
        split_depth: usize,
        task_count: u64,
        completed: Vec<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub version: u32,
    /// FNV-1a hash of the matrix the run was started on.
    pub matrix_hash: u64,
    pub dimension: usize,
    /// Qualifying subsets counted so far.
    pub visited: u64,
    /// Partial histogram, indexed by cardinality (entry 0 unused).
    pub histogram: Vec<u64>,
    /// Wall-clock milliseconds accumulated across all run segments.
    pub elapsed_ms: u64,
    pub payload: CheckpointPayload,
}

impl Checkpoint {
    pub fn new(
        matrix: &SymmetricIntMatrix,
        visited: u64,
        histogram: Vec<u64>,
        elapsed_ms: u64,
        payload: CheckpointPayload,
    ) -> Self {
        Self {
            version: CHECKPOINT_VERSION,
            matrix_hash: matrix.content_hash(),
            dimension: matrix.dim(),
            visited,
            histogram,
            elapsed_ms,
            payload,
        }
    }

    /// Checkpoint equivalent to not having started: resuming from it is a
    /// fresh run.
    pub fn at_start(matrix: &SymmetricIntMatrix) -> Self {
        Self::new(
            matrix,
            0,
            vec![0; matrix.dim() + 1],
            0,
            CheckpointPayload::Sequential {
                indices: Vec::new(),
                next_k: 1,
            },
        )
    }

    /// Refuse resumption against a matrix other than the one checkpointed.
    pub fn verify_matrix(&self, matrix: &SymmetricIntMatrix) -> Result<()> {
        if self.version != CHECKPOINT_VERSION {
            return Err(Error::CheckpointVersion(self.version));
        }
        let actual = matrix.content_hash();
        if self.matrix_hash != actual || self.dimension != matrix.dim() {
            return Err(Error::CheckpointMismatch {
                expected: self.matrix_hash,
                actual,
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("checkpoint serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cp: Checkpoint = serde_json::from_str(text)
            .map_err(|e| Error::CheckpointCorrupt(e.to_string()))?;
        if cp.version != CHECKPOINT_VERSION {
            return Err(Error::CheckpointVersion(cp.version));
        }
        Ok(cp)
    }

    /// Atomic write: temp file in the same directory, then rename.
    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, self.to_json())?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix() -> SymmetricIntMatrix {
        SymmetricIntMatrix::from_rows(vec![vec![2, 1], vec![1, 2]]).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let m = matrix();
        let cp = Checkpoint::new(
            &m,
            7,
            vec![0, 2, 5],
            123,
            CheckpointPayload::Sequential {
                indices: vec![1, 2],
                next_k: 3,
            },
        );
        let again = Checkpoint::from_json(&cp.to_json()).unwrap();
        assert_eq!(cp, again);
    }

    #[test]
    fn mismatched_matrix_is_refused() {
        let m = matrix();
        let cp = Checkpoint::at_start(&m);
        cp.verify_matrix(&m).unwrap();
        let other = SymmetricIntMatrix::from_rows(vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert!(matches!(
            cp.verify_matrix(&other),
            Err(Error::CheckpointMismatch { .. })
        ));
    }

    #[test]
    fn unknown_version_is_refused() {
        let m = matrix();
        let mut cp = Checkpoint::at_start(&m);
        cp.version = 99;
        assert!(matches!(
            Checkpoint::from_json(&cp.to_json()),
            Err(Error::CheckpointVersion(99))
        ));
    }

    #[test]
    fn corrupt_text_is_an_error() {
        assert!(matches!(
            Checkpoint::from_json("{not json"),
            Err(Error::CheckpointCorrupt(_))
        ));
    }
}
