//! Property tests for the elimination state and the enumerators: the
//! incremental path is replayed against independent from-scratch oracles.

use proptest::prelude::*;

use zariski_core::bareiss::{det_fraction_free, leading_minors_all_positive, EliminationState};
use zariski_core::enumerate::{enumerate_posdef, enumerate_with, EnumerationOptions};
use zariski_core::matrix::{SquareIntMatrix, SymmetricIntMatrix};
use zariski_core::Checkpoint;

/// Independent determinant oracle: cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut det = 0i128;
    for col in 0..n {
        if m[0][col] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != col)
                    .map(|c| m[r][c])
                    .collect()
            })
            .collect();
        let term = m[0][col] * cofactor_det(&minor);
        if col % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn square_matrix(max_n: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, n), n)
    })
}

fn symmetric_matrix(max_n: usize, bound: i64) -> impl Strategy<Value = SymmetricIntMatrix> {
    square_matrix(max_n, bound).prop_map(|rows| {
        let n = rows.len();
        SymmetricIntMatrix::from_fn(n, |i, j| {
            if i <= j {
                rows[i - 1][j - 1]
            } else {
                rows[j - 1][i - 1]
            }
        })
        .unwrap()
    })
}

proptest! {
    #[test]
    fn fraction_free_determinant_matches_cofactor_expansion(rows in square_matrix(5, 6)) {
        let n = rows.len();
        let m = SquareIntMatrix::from_rows(rows.clone()).unwrap();
        let expected = cofactor_det(
            &rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect::<Vec<_>>(),
        );
        let got = det_fraction_free::<i64>(&m).unwrap();
        prop_assert_eq!(got as i128, expected, "n = {}", n);
    }

    #[test]
    fn grow_then_shrink_is_the_identity_along_enumerator_paths(a in symmetric_matrix(7, 3)) {
        let n = a.dim();
        // Depth-first replay over positive definite states, checking at each
        // state that grow(k) followed by shrink restores (S, B, T) exactly.
        fn explore(state: &mut EliminationState<i64>, n: usize, from: usize) {
            for k in from..=n {
                let before_s = state.indices().to_vec();
                let s = state.len();
                let before: Vec<(i64, i64)> = (1..=s)
                    .flat_map(|i| (1..=s).map(move |j| (i, j)))
                    .map(|(i, j)| (*state.b_entry(i, j), *state.t_entry(i, j)))
                    .collect();
                state.grow(k).unwrap();
                let accepted = state.is_pos_def();
                if accepted {
                    explore(state, n, k + 1);
                }
                state.shrink().unwrap();
                let after: Vec<(i64, i64)> = (1..=s)
                    .flat_map(|i| (1..=s).map(move |j| (i, j)))
                    .map(|(i, j)| (*state.b_entry(i, j), *state.t_entry(i, j)))
                    .collect();
                assert_eq!(state.indices(), before_s.as_slice());
                assert_eq!(before, after, "grow({k})+shrink changed the window");
            }
        }
        let mut state = EliminationState::<i64>::new(&a);
        explore(&mut state, n, 1);
    }

    #[test]
    fn sign_test_agrees_with_sylvester_on_enumerator_paths(a in symmetric_matrix(7, 3)) {
        // At every reachable state (positive definite prefix), is_pos_def
        // must equal the from-scratch leading-minor criterion, for accepted
        // and rejected candidates alike.
        fn explore(state: &mut EliminationState<i64>, a: &SymmetricIntMatrix, from: usize) {
            for k in from..=a.dim() {
                state.grow(k).unwrap();
                let sub = a.principal(state.indices()).unwrap();
                let oracle = leading_minors_all_positive::<i64>(&sub).unwrap();
                assert_eq!(state.is_pos_def(), oracle, "S = {:?}", state.indices());
                if state.is_pos_def() {
                    explore(state, a, k + 1);
                }
                state.shrink().unwrap();
            }
        }
        let mut state = EliminationState::<i64>::new(&a);
        explore(&mut state, &a, 1);
    }

    #[test]
    fn diagonal_of_b_holds_the_leading_minors(a in symmetric_matrix(6, 3)) {
        // Full state validation (B = T*A_S, triangularity, diagonal equal to
        // leading minors recomputed by the one-shot eliminator) after every
        // grow and shrink of a complete enumeration.
        let opts = EnumerationOptions {
            validate_states: true,
            ..Default::default()
        };
        let mut count = 0u64;
        enumerate_with::<i64, _, _>(
            &a,
            &mut |_: &[usize]| count += 1,
            &opts,
            None,
            &mut |_: &Checkpoint| Ok(()),
        )
        .unwrap()
        .into_complete()
        .unwrap();
    }

    #[test]
    fn histogram_is_consistent_and_bounded(a in symmetric_matrix(8, 3)) {
        let report = enumerate_posdef::<i64, _>(&a, &mut zariski_core::CountOnly).unwrap();
        prop_assert_eq!(report.histogram.total(), report.posdef_submatrix_count);
        prop_assert_eq!(report.total_chambers, report.posdef_submatrix_count + 1);
        let n = a.dim() as u64;
        let mut binom = 1u64;
        for l in 1..=a.dim() as u64 {
            binom = binom * (n - l + 1) / l;
            prop_assert!(report.histogram.get(l as usize) <= binom, "l = {l}");
        }
    }

    #[test]
    fn no_emitted_subset_extends_a_failed_one(a in symmetric_matrix(8, 3)) {
        let mut emitted: Vec<Vec<usize>> = Vec::new();
        enumerate_posdef::<i64, _>(&a, &mut |s: &[usize]| emitted.push(s.to_vec())).unwrap();
        // Sample non-positive-definite subsets and check monotonicity.
        let n = a.dim();
        for mask in 1u32..(1 << n).min(1 << 8) {
            let subset: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let posdef =
                leading_minors_all_positive::<i64>(&a.principal(&subset).unwrap()).unwrap();
            if posdef {
                continue;
            }
            for e in &emitted {
                let superset = subset.iter().all(|i| e.contains(i));
                prop_assert!(!superset, "{e:?} extends failed {subset:?}");
            }
        }
    }

    #[test]
    fn minus_two_diagonal_zero_one_offdiagonal_forces_first_two_rows(
        rows in square_matrix(7, 1),
    ) {
        // Negated intersection matrices with diagonal -2 and off-diagonal in
        // {0, 1}: every singleton and every pair is positive definite, so
        // histogram[1] = n and histogram[2] = C(n, 2).
        let n = rows.len();
        let a = SymmetricIntMatrix::from_fn(n, |i, j| {
            if i == j {
                2
            } else {
                -(rows[i.min(j) - 1][i.max(j) - 1] & 1)
            }
        })
        .unwrap();
        let report = enumerate_posdef::<i64, _>(&a, &mut zariski_core::CountOnly).unwrap();
        prop_assert_eq!(report.histogram.get(1), n as u64);
        prop_assert_eq!(report.histogram.get(2), (n * (n - 1) / 2) as u64);
    }
}
