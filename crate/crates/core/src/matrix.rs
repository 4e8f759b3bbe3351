//! Dense square and symmetric integer matrices, with the text interchange
//! format: first line `n`, then `n` rows of `n` whitespace-separated signed
//! decimal integers. Symmetry is validated on load; indices are 1-based at
//! the API level.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// Dense square matrix of `i64` entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareIntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SquareIntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Dimension(0));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "expected {n} entries per row, found a row with {}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension(0));
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        Ok(Self { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Principal submatrix on the 1-based index set `indices` (sorted or not;
    /// order of `indices` becomes the row/column order of the result).
    pub fn principal(&self, indices: &[usize]) -> Result<SquareIntMatrix> {
        if indices.is_empty() {
            return Err(Error::Dimension(0));
        }
        for &i in indices {
            assert!(i >= 1 && i <= self.n, "index {i} out of range 1..={}", self.n);
        }
        let s = indices.len();
        let mut entries = Vec::with_capacity(s * s);
        for &i in indices {
            for &j in indices {
                entries.push(self.get(i, j));
            }
        }
        Ok(SquareIntMatrix { n: s, entries })
    }

    /// Leading `k`-by-`k` principal submatrix.
    pub fn leading(&self, k: usize) -> Result<SquareIntMatrix> {
        if k == 0 || k > self.n {
            return Err(Error::Dimension(k));
        }
        let indices: Vec<usize> = (1..=k).collect();
        self.principal(&indices)
    }
}

/// Symmetric integer matrix; the input of the enumeration algorithms and the
/// form all intersection matrices take. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIntMatrix {
    inner: SquareIntMatrix,
}

impl SymmetricIntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::from_square(SquareIntMatrix::from_rows(rows)?)
    }

    pub fn from_square(m: SquareIntMatrix) -> Result<Self> {
        for i in 1..=m.n {
            for j in (i + 1)..=m.n {
                let a = m.get(i, j);
                let b = m.get(j, i);
                if a != b {
                    return Err(Error::NotSymmetric { i, j, a, b });
                }
            }
        }
        Ok(Self { inner: m })
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> i64) -> Result<Self> {
        Self::from_square(SquareIntMatrix::from_fn(n, f)?)
    }

    pub fn dim(&self) -> usize {
        self.inner.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.inner.get(i, j)
    }

    pub fn as_square(&self) -> &SquareIntMatrix {
        &self.inner
    }

    pub fn principal(&self, indices: &[usize]) -> Result<SquareIntMatrix> {
        self.inner.principal(indices)
    }

    /// Leading `k`-by-`k` block, still symmetric.
    pub fn leading(&self, k: usize) -> Result<SymmetricIntMatrix> {
        Ok(Self {
            inner: self.inner.leading(k)?,
        })
    }

    /// Entrywise negation. The chamber-counting reduction applies the
    /// positive-definite enumerator to the negative of an intersection matrix.
    pub fn negated(&self) -> Result<SymmetricIntMatrix> {
        let mut entries = Vec::with_capacity(self.inner.entries.len());
        for &e in &self.inner.entries {
            entries.push(e.checked_neg().ok_or(Error::Overflow {
                context: "matrix negation",
            })?);
        }
        Ok(Self {
            inner: SquareIntMatrix {
                n: self.inner.n,
                entries,
            },
        })
    }

    /// FNV-1a hash of the dimension and entries; stable across runs and
    /// platforms. Used to bind checkpoints to their matrix.
    pub fn content_hash(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |v: u64| {
            for b in v.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        eat(self.inner.n as u64);
        for &e in &self.inner.entries {
            eat(e as u64);
        }
        h
    }

    pub fn to_text(&self) -> String {
        let n = self.inner.n;
        let mut out = String::new();
        let _ = writeln!(out, "{n}");
        for i in 1..=n {
            for j in 1..=n {
                if j > 1 {
                    out.push(' ');
                }
                let _ = write!(out, "{}", self.get(i, j));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad dimension line: {e}")))?;
        if n == 0 {
            return Err(Error::Dimension(0));
        }
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n * n {
            let tok = tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {} entries, file ended early", n * n)))?;
            let v: i64 = tok
                .parse()
                .map_err(|e| Error::Parse(format!("bad entry `{tok}`: {e}")))?;
            entries.push(v);
        }
        if tokens.next().is_some() {
            return Err(Error::Parse(format!("trailing data after {} entries", n * n)));
        }
        Self::from_square(SquareIntMatrix { n, entries })
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_text(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetry_is_validated() {
        let err = SymmetricIntMatrix::from_rows(vec![vec![1, 2], vec![3, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric { i: 1, j: 2, a: 2, b: 3 }));
        assert!(SymmetricIntMatrix::from_rows(vec![vec![1, 2], vec![2, 1]]).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let m = SymmetricIntMatrix::from_rows(vec![
            vec![-2, 1, 0],
            vec![1, -2, 1],
            vec![0, 1, -2],
        ])
        .unwrap();
        let again = SymmetricIntMatrix::from_text(&m.to_text()).unwrap();
        assert_eq!(m, again);
        assert_eq!(m.content_hash(), again.content_hash());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(SymmetricIntMatrix::from_text("").is_err());
        assert!(SymmetricIntMatrix::from_text("2\n1 0\n0").is_err());
        assert!(SymmetricIntMatrix::from_text("2\n1 0\n0 1\n7").is_err());
        assert!(SymmetricIntMatrix::from_text("1\nx").is_err());
        // asymmetric file is a hard error
        assert!(SymmetricIntMatrix::from_text("2\n0 1\n2 0").is_err());
    }

    #[test]
    fn principal_and_leading() {
        let m = SymmetricIntMatrix::from_fn(4, |i, j| (i * 10 + j) as i64 + (j * 10 + i) as i64).unwrap();
        let p = m.principal(&[1, 3]).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.get(1, 2), m.get(1, 3));
        let l = m.leading(2).unwrap();
        assert_eq!(l.get(2, 2), m.get(2, 2));
        assert!(m.leading(0).is_err());
        assert!(m.leading(5).is_err());
    }

    #[test]
    fn hash_distinguishes_matrices() {
        let a = SymmetricIntMatrix::from_rows(vec![vec![2, 1], vec![1, 2]]).unwrap();
        let b = SymmetricIntMatrix::from_rows(vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert_ne!(a.content_hash(), b.content_hash());
    }
}
