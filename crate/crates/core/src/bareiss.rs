//! Fraction-free elimination, one-shot and incremental.
//!
//! [`EliminationState`] maintains, for a growing index set `S`, the Bareiss
//! trigonalization `B` of the principal submatrix `A_S` together with the
//! lower-triangular transformation `T` satisfying `B = T * A_S`. Growing `S`
//! by one index costs `O(s^2)` exact-integer operations instead of the
//! `O(s^3)` of a from-scratch elimination; shrinking discards the last row
//! and column of `B` and `T`. In Bareiss form the i-th diagonal entry of `B`
//! is the i-th leading principal minor of `A_S`, so positive definiteness of
//! `A_S` is a sign test on the last diagonal entry once the prefix is known
//! positive definite.
//!
//! Every division is the Bareiss division: exact by Sylvester's identity,
//! and verified exact at runtime — a nonzero remainder aborts the run.

use crate::error::{Error, Result};
use crate::matrix::{SquareIntMatrix, SymmetricIntMatrix};
use crate::num::{add, exact_div, mul, sub, ExactInt};

/// Rank and discriminant of the lattice spanned by a set of classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeInvariants<I: ExactInt> {
    /// Rank over the rationals of the full Gram matrix.
    pub rank: usize,
    /// Dimension of the ambient Gram matrix.
    pub dimension: usize,
    /// Determinant of the supplied full-rank Gram submatrix, when its size
    /// equals the rank.
    pub discriminant: Option<I>,
}

/// Incremental Bareiss elimination state over a fixed symmetric matrix.
///
/// Single-owner mutable value: grow and shrink mutate in place. The backing
/// matrix is shared read-only.
#[derive(Debug, Clone)]
pub struct EliminationState<'a, I: ExactInt> {
    matrix: &'a SymmetricIntMatrix,
    /// The index set S: 1-based indices into the matrix, strictly increasing.
    indices: Vec<usize>,
    /// Bareiss form of A_S, row-major with stride `n`; active window s-by-s.
    b: Vec<I>,
    /// Transformation with B = T * A_S, same layout.
    t: Vec<I>,
    /// Elimination factors of a grow whose T-row update is still pending.
    /// The enumerator defers that update until a subset is accepted, since a
    /// rejected candidate is shrunk away before T is ever read.
    pending_factors: Vec<I>,
    t_pending: bool,
    n: usize,
}

impl<'a, I: ExactInt> EliminationState<'a, I> {
    /// Fresh state with S empty: B and T are 0-by-0.
    pub fn new(matrix: &'a SymmetricIntMatrix) -> Self {
        let n = matrix.dim();
        Self {
            matrix,
            indices: Vec::with_capacity(n),
            b: vec![I::zero(); n * n],
            t: vec![I::zero(); n * n],
            pending_factors: vec![I::zero(); n],
            t_pending: false,
            n,
        }
    }

    pub fn matrix(&self) -> &SymmetricIntMatrix {
        self.matrix
    }

    /// The current index set S, sorted ascending, 1-based.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.indices.last().copied()
    }

    /// Entry of B at 1-based `(i, j)` within the active window.
    pub fn b_entry(&self, i: usize, j: usize) -> &I {
        let s = self.len();
        assert!(i >= 1 && i <= s && j >= 1 && j <= s);
        &self.b[(i - 1) * self.n + (j - 1)]
    }

    /// Entry of T at 1-based `(i, j)` within the active window.
    pub fn t_entry(&self, i: usize, j: usize) -> &I {
        let s = self.len();
        assert!(i >= 1 && i <= s && j >= 1 && j <= s);
        &self.t[(i - 1) * self.n + (j - 1)]
    }

    /// `B[s][s]`, the determinant of `A_S`.
    pub fn last_pivot(&self) -> &I {
        let s = self.len();
        assert!(s >= 1, "last_pivot on empty state");
        &self.b[(s - 1) * self.n + (s - 1)]
    }

    /// Reset to the empty state without reallocating.
    pub fn reset(&mut self) {
        self.indices.clear();
        self.t_pending = false;
    }

    /// Whether `A_S` is positive definite. Valid when the prefix
    /// `A_{S \ max S}` is positive definite, which the enumerator guarantees:
    /// then `A_S` is positive definite iff `det(A_S) = B[s][s] > 0`.
    pub fn is_pos_def(&self) -> bool {
        self.last_pivot().is_positive()
    }

    /// Include index `k > max(S)` and restore the invariants in `O(s^2)`
    /// exact-integer operations.
    pub fn grow(&mut self, k: usize) -> Result<()> {
        self.grow_deferred(k)?;
        self.commit_t()
    }

    /// Grow with only B brought to Bareiss form; the update of the new T row
    /// is recorded as pending. `is_pos_def` is already valid afterwards, so
    /// the enumerator rejects candidates without paying for T and calls
    /// [`Self::commit_t`] on acceptance.
    pub(crate) fn grow_deferred(&mut self, k: usize) -> Result<()> {
        self.commit_t()?;
        let max = self.max_index().unwrap_or(0);
        if k <= max || k > self.n {
            return Err(Error::GrowIndex { k, max, n: self.n });
        }
        self.indices.push(k);
        let s = self.len();
        let n = self.n;
        let row = (s - 1) * n;

        // Attach the last row and column of A_S to B, and the unit row and
        // column to T.
        for (j, &idx) in self.indices.iter().enumerate() {
            self.b[row + j] = I::from_i64(self.matrix.get(k, idx));
        }
        for i in 0..s - 1 {
            self.b[i * n + (s - 1)] = I::from_i64(self.matrix.get(self.indices[i], k));
            self.t[i * n + (s - 1)] = I::zero();
        }
        for j in 0..s - 1 {
            self.t[row + j] = I::zero();
        }
        self.t[row + (s - 1)] = I::one();

        // Replace the last column b of B by T*b. T is lower triangular, so
        // processing rows bottom-up updates each entry from still-old values.
        for i in (0..s - 1).rev() {
            let mut acc = I::zero();
            for j in 0..=i {
                let term = mul(&self.t[i * n + j], &self.b[j * n + (s - 1)], "Bareiss grow")?;
                acc = add(&acc, &term, "Bareiss grow")?;
            }
            self.b[i * n + (s - 1)] = acc;
        }

        // Clear the last row of B by fraction-free elimination against rows
        // 1..s-1, dividing by the previous pivot at each step. The factor at
        // each step is kept for the deferred T update.
        for i in 0..s - 1 {
            let pivot = self.b[i * n + i].clone();
            let factor = self.b[row + i].clone();
            if i == 0 {
                for j in i + 1..s {
                    let lhs = mul(&self.b[row + j], &pivot, "Bareiss grow")?;
                    let rhs = mul(&self.b[i * n + j], &factor, "Bareiss grow")?;
                    self.b[row + j] = sub(&lhs, &rhs, "Bareiss grow")?;
                }
            } else {
                let d = self.b[(i - 1) * n + (i - 1)].clone();
                for j in i + 1..s {
                    let lhs = mul(&self.b[row + j], &pivot, "Bareiss grow")?;
                    let rhs = mul(&self.b[i * n + j], &factor, "Bareiss grow")?;
                    self.b[row + j] =
                        exact_div(&sub(&lhs, &rhs, "Bareiss grow")?, &d, "Bareiss grow")?;
                }
            }
            self.pending_factors[i] = factor;
            self.b[row + i] = I::zero();
        }
        self.t_pending = s > 1;
        Ok(())
    }

    /// Apply a pending T-row update, replaying the elimination steps of the
    /// last grow on the unit row attached to T. Entries strictly between the
    /// step column and the diagonal provably stay zero and are skipped.
    pub(crate) fn commit_t(&mut self) -> Result<()> {
        if !self.t_pending {
            return Ok(());
        }
        self.t_pending = false;
        let s = self.len();
        let n = self.n;
        let row = (s - 1) * n;
        for i in 0..s - 1 {
            let pivot = self.b[i * n + i].clone();
            let factor = &self.pending_factors[i];
            if i == 0 {
                for j in 0..=i {
                    let lhs = mul(&self.t[row + j], &pivot, "Bareiss grow")?;
                    let rhs = mul(&self.t[i * n + j], factor, "Bareiss grow")?;
                    self.t[row + j] = sub(&lhs, &rhs, "Bareiss grow")?;
                }
                self.t[row + (s - 1)] = pivot;
            } else {
                let d = self.b[(i - 1) * n + (i - 1)].clone();
                for j in 0..=i {
                    let lhs = mul(&self.t[row + j], &pivot, "Bareiss grow")?;
                    let rhs = mul(&self.t[i * n + j], factor, "Bareiss grow")?;
                    self.t[row + j] =
                        exact_div(&sub(&lhs, &rhs, "Bareiss grow")?, &d, "Bareiss grow")?;
                }
                // diagonal: T[s][s] * B[i][i] / B[i-1][i-1] = B[i][i], exactly
                self.t[row + (s - 1)] = pivot;
            }
        }
        Ok(())
    }

    /// Remove the maximal element of S by discarding the last row and column
    /// of B and T. Constant time.
    pub fn shrink(&mut self) -> Result<()> {
        if self.indices.pop().is_none() {
            return Err(Error::EmptyShrink);
        }
        self.t_pending = false;
        Ok(())
    }

    /// Full invariant check: B upper triangular, T lower triangular,
    /// B = T * A_S, and each diagonal entry of B equal to the corresponding
    /// leading principal minor of A_S recomputed from scratch. Intended for
    /// tests and validation runs; cost is O(s^4).
    pub fn validate(&self) -> Result<()> {
        if self.t_pending {
            return Err(Error::Internal(
                "validate called while a T-row update is pending".into(),
            ));
        }
        let s = self.len();
        let n = self.n;
        for i in 0..s {
            for j in 0..s {
                if i > j && !self.b[i * n + j].is_zero() {
                    return Err(Error::Internal(format!(
                        "B not upper triangular at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
                if j > i && !self.t[i * n + j].is_zero() {
                    return Err(Error::Internal(format!(
                        "T not lower triangular at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if s == 0 {
            return Ok(());
        }
        let sub_matrix = self.matrix.principal(&self.indices)?;
        for i in 0..s {
            for j in 0..s {
                let mut acc = I::zero();
                for l in 0..s {
                    let a = I::from_i64(sub_matrix.get(l + 1, j + 1));
                    acc = add(&acc, &mul(&self.t[i * n + l], &a, "state validation")?, "state validation")?;
                }
                if acc != self.b[i * n + j] {
                    return Err(Error::Internal(format!(
                        "B != T*A_S at ({},{}): {} vs {}",
                        i + 1,
                        j + 1,
                        self.b[i * n + j],
                        acc
                    )));
                }
            }
        }
        for i in 1..=s {
            let minor: I = det_fraction_free(&sub_matrix.leading(i)?)?;
            if &minor != self.b_entry(i, i) {
                return Err(Error::Internal(format!(
                    "B[{i}][{i}] = {} differs from leading minor {minor}",
                    self.b_entry(i, i)
                )));
            }
        }
        Ok(())
    }
}

/// Determinant by one-shot fraction-free elimination with row pivoting.
/// Row pivoting (with sign tracking) is required here because arbitrary
/// inputs may hit zero pivots; the incremental path never pivots.
pub fn det_fraction_free<I: ExactInt>(m: &SquareIntMatrix) -> Result<I> {
    let n = m.dim();
    let mut w: Vec<I> = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            w.push(I::from_i64(m.get(i, j)));
        }
    }
    let mut negate = false;
    let mut prev = I::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !w[r * n + col].is_zero()) {
            Some(r) => r,
            None => return Ok(I::zero()),
        };
        if pivot_row != col {
            for j in 0..n {
                w.swap(pivot_row * n + j, col * n + j);
            }
            negate = !negate;
        }
        let pivot = w[col * n + col].clone();
        for row in col + 1..n {
            let factor = w[row * n + col].clone();
            for j in col + 1..n {
                let lhs = mul(&w[row * n + j], &pivot, "determinant")?;
                let rhs = mul(&w[col * n + j], &factor, "determinant")?;
                w[row * n + j] = exact_div(&sub(&lhs, &rhs, "determinant")?, &prev, "determinant")?;
            }
            w[row * n + col] = I::zero();
        }
        prev = pivot;
    }
    let det = w[(n - 1) * n + (n - 1)].clone();
    if negate {
        det.checked_neg().ok_or(Error::Overflow { context: "determinant" })
    } else {
        Ok(det)
    }
}

/// Sylvester criterion: true iff every leading principal minor is strictly
/// positive, i.e. the symmetric matrix is positive definite. One-shot
/// fraction-free elimination without pivoting; stops at the first
/// non-positive minor.
pub fn leading_minors_all_positive<I: ExactInt>(m: &SquareIntMatrix) -> Result<bool> {
    let n = m.dim();
    let mut w: Vec<I> = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            w.push(I::from_i64(m.get(i, j)));
        }
    }
    let mut prev = I::one();
    for col in 0..n {
        let pivot = w[col * n + col].clone();
        if !pivot.is_positive() {
            return Ok(false);
        }
        for row in col + 1..n {
            let factor = w[row * n + col].clone();
            for j in col + 1..n {
                let lhs = mul(&w[row * n + j], &pivot, "Sylvester test")?;
                let rhs = mul(&w[col * n + j], &factor, "Sylvester test")?;
                w[row * n + j] = exact_div(&sub(&lhs, &rhs, "Sylvester test")?, &prev, "Sylvester test")?;
            }
        }
        prev = pivot;
    }
    Ok(true)
}

/// Rank over the rationals by fraction-free elimination with full pivoting.
pub fn rank_exact<I: ExactInt>(m: &SquareIntMatrix) -> Result<usize> {
    let n = m.dim();
    let mut w: Vec<I> = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            w.push(I::from_i64(m.get(i, j)));
        }
    }
    let mut prev = I::one();
    let mut rank = 0;
    for step in 0..n {
        let mut found = None;
        'search: for r in step..n {
            for c in step..n {
                if !w[r * n + c].is_zero() {
                    found = Some((r, c));
                    break 'search;
                }
            }
        }
        let (r, c) = match found {
            Some(rc) => rc,
            None => break,
        };
        if r != step {
            for j in 0..n {
                w.swap(r * n + j, step * n + j);
            }
        }
        if c != step {
            for i in 0..n {
                w.swap(i * n + c, i * n + step);
            }
        }
        rank += 1;
        let pivot = w[step * n + step].clone();
        for row in step + 1..n {
            let factor = w[row * n + step].clone();
            for j in step + 1..n {
                let lhs = mul(&w[row * n + j], &pivot, "rank")?;
                let rhs = mul(&w[step * n + j], &factor, "rank")?;
                w[row * n + j] = exact_div(&sub(&lhs, &rhs, "rank")?, &prev, "rank")?;
            }
            w[row * n + step] = I::zero();
        }
        prev = pivot;
    }
    Ok(rank)
}

/// Rank of the full Gram matrix plus the determinant of the principal
/// submatrix on `basis` when that submatrix is square of size `rank`.
pub fn lattice_invariants<I: ExactInt>(
    gram: &SymmetricIntMatrix,
    basis: &[usize],
) -> Result<LatticeInvariants<I>> {
    let rank = rank_exact::<I>(gram.as_square())?;
    let discriminant = if basis.len() == rank {
        Some(det_fraction_free::<I>(&gram.principal(basis)?)?)
    } else {
        None
    };
    Ok(LatticeInvariants {
        rank,
        dimension: gram.dim(),
        discriminant,
    })
}
