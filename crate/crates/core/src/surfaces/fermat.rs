use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;

/// Tridiagonal configuration matrix: diagonal -2, super- and subdiagonal 1,
/// all other entries 0. A chain of this shape can be picked out of the
/// first-type lines on a Fermat-type surface; it is negative definite, which
/// makes it the stress case for the enumerators (every subset qualifies).
pub fn build_fermat_tridiagonal(n: usize) -> Result<SymmetricIntMatrix> {
    if n < 1 {
        return Err(Error::Dimension(n));
    }
    SymmetricIntMatrix::from_fn(n, |i, j| {
        if i == j {
            -2
        } else if i.abs_diff(j) == 1 {
            1
        } else {
            0
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::count_zariski_chambers;

    #[test]
    fn smallest_case_is_single_minus_two() {
        let m = build_fermat_tridiagonal(1).unwrap();
        assert_eq!(m.get(1, 1), -2);
        assert!(build_fermat_tridiagonal(0).is_err());
    }

    #[test]
    fn three_by_three_shape_and_count() {
        let m = build_fermat_tridiagonal(3).unwrap();
        let expect = SymmetricIntMatrix::from_rows(vec![
            vec![-2, 1, 0],
            vec![1, -2, 1],
            vec![0, 1, -2],
        ])
        .unwrap();
        assert_eq!(m, expect);
        // all 7 nonempty subsets are negative definite
        let report = count_zariski_chambers::<i64>(&m).unwrap();
        assert_eq!(report.total_chambers, 8);
    }

    #[test]
    fn negation_is_positive_definite_so_counts_are_powers_of_two() {
        let m = build_fermat_tridiagonal(15).unwrap();
        let report = count_zariski_chambers::<i64>(&m).unwrap();
        assert_eq!(report.total_chambers, 1 << 15);
    }
}
