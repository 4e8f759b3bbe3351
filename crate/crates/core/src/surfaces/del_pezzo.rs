//! Exceptional-curve configurations on Del Pezzo surfaces.
//!
//! The blow-up of the plane in r general points (1 <= r <= 8) carries
//! finitely many (-1)-curves. In the Picard basis H, E_1..E_r with
//! intersection form diag(+1, -1, ..., -1), their classes d*H - sum m_i E_i
//! are exactly the integer solutions of d^2 - sum m_i^2 = -1 and
//! 3d - sum m_i = 1, which fall into seven classical types enumerated
//! explicitly below. Pairwise intersection numbers come from the signature
//! (1, r) form; diagonal entries are all -1.

use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;

/// Class vector (d; m_1..m_r) of a curve d*H - sum m_i E_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelPezzoCurveClass {
    pub degree: i64,
    pub multiplicities: Vec<i64>,
}

impl DelPezzoCurveClass {
    pub fn self_intersection(&self) -> i64 {
        self.intersect(self)
    }

    /// Intersection number under diag(+1, -1, ..., -1):
    /// d*d' - sum m_i * m_i'.
    pub fn intersect(&self, other: &DelPezzoCurveClass) -> i64 {
        let mm: i64 = self
            .multiplicities
            .iter()
            .zip(&other.multiplicities)
            .map(|(a, b)| a * b)
            .sum();
        self.degree * other.degree - mm
    }

    /// The two defining conditions of a (-1)-class:
    /// d^2 - sum m_i^2 = -1 and 3d - sum m_i = 1.
    pub fn is_minus_one_class(&self) -> bool {
        let msum: i64 = self.multiplicities.iter().sum();
        self.self_intersection() == -1 && 3 * self.degree - msum == 1
    }
}

/// All k-element subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] < n - (k - pos) {
                idx[pos] += 1;
                for later in pos + 1..k {
                    idx[later] = idx[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

fn class(r: usize, degree: i64, assignments: &[(usize, i64)]) -> DelPezzoCurveClass {
    let mut multiplicities = vec![0i64; r];
    for &(i, m) in assignments {
        multiplicities[i] = m;
    }
    DelPezzoCurveClass {
        degree,
        multiplicities,
    }
}

/// The (-1)-classes for r blown-up points, enumerated by the seven classical
/// types in a fixed deterministic order.
pub fn del_pezzo_classes(r: usize) -> Result<Vec<DelPezzoCurveClass>> {
    if !(1..=8).contains(&r) {
        return Err(Error::Dimension(r));
    }
    let mut classes = Vec::new();
    // E_i
    for i in 0..r {
        classes.push(class(r, 0, &[(i, -1)]));
    }
    // H - E_i - E_j
    for pair in combinations(r, 2) {
        classes.push(class(r, 1, &[(pair[0], 1), (pair[1], 1)]));
    }
    // 2H - E_{i1..i5}
    for five in combinations(r, 5) {
        let a: Vec<(usize, i64)> = five.iter().map(|&i| (i, 1)).collect();
        classes.push(class(r, 2, &a));
    }
    // 3H - 2E_a - E_{b1..b6}
    for a in 0..r {
        let rest: Vec<usize> = (0..r).filter(|&i| i != a).collect();
        for six in combinations(rest.len(), 6) {
            let mut asg = vec![(a, 2i64)];
            asg.extend(six.iter().map(|&i| (rest[i], 1)));
            classes.push(class(r, 3, &asg));
        }
    }
    // 4H - 2E_{a1,a2,a3} - E_{b1..b5}
    for three in combinations(r, 3) {
        let rest: Vec<usize> = (0..r).filter(|i| !three.contains(i)).collect();
        for five in combinations(rest.len(), 5) {
            let mut asg: Vec<(usize, i64)> = three.iter().map(|&i| (i, 2)).collect();
            asg.extend(five.iter().map(|&i| (rest[i], 1)));
            classes.push(class(r, 4, &asg));
        }
    }
    // 5H - 2E_{a1..a6} - E_{b1,b2}
    for six in combinations(r, 6) {
        let rest: Vec<usize> = (0..r).filter(|i| !six.contains(i)).collect();
        for two in combinations(rest.len(), 2) {
            let mut asg: Vec<(usize, i64)> = six.iter().map(|&i| (i, 2)).collect();
            asg.extend(two.iter().map(|&i| (rest[i], 1)));
            classes.push(class(r, 5, &asg));
        }
    }
    // 6H - 3E_a - 2E_{rest of 7}
    for a in 0..r {
        let rest: Vec<usize> = (0..r).filter(|&i| i != a).collect();
        for seven in combinations(rest.len(), 7) {
            let mut asg = vec![(a, 3i64)];
            asg.extend(seven.iter().map(|&i| (rest[i], 2)));
            classes.push(class(r, 6, &asg));
        }
    }
    debug_assert!(classes.iter().all(DelPezzoCurveClass::is_minus_one_class));
    Ok(classes)
}

/// Intersection matrix of all (-1)-classes on the Del Pezzo surface X_r.
pub fn build_del_pezzo(r: usize) -> Result<SymmetricIntMatrix> {
    let classes = del_pezzo_classes(r)?;
    SymmetricIntMatrix::from_fn(classes.len(), |i, j| {
        classes[i - 1].intersect(&classes[j - 1])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_the_known_dimensions() {
        let expected = [1, 3, 6, 10, 16, 27, 56, 240];
        for (r, &n) in (1..=8).zip(&expected) {
            assert_eq!(del_pezzo_classes(r).unwrap().len(), n, "r = {r}");
        }
        assert!(del_pezzo_classes(0).is_err());
        assert!(del_pezzo_classes(9).is_err());
    }

    #[test]
    fn every_class_is_a_minus_one_class() {
        for r in 1..=8 {
            for c in del_pezzo_classes(r).unwrap() {
                assert!(c.is_minus_one_class(), "{c:?}");
            }
        }
    }

    #[test]
    fn matrices_have_minus_one_diagonal_and_nonnegative_off_diagonal() {
        for r in 1..=6 {
            let m = build_del_pezzo(r).unwrap();
            for i in 1..=m.dim() {
                assert_eq!(m.get(i, i), -1);
                for j in 1..=m.dim() {
                    if i != j {
                        assert!(m.get(i, j) >= 0, "r={r} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn single_blow_up_is_one_exceptional_curve() {
        let m = build_del_pezzo(1).unwrap();
        assert_eq!(m, SymmetricIntMatrix::from_rows(vec![vec![-1]]).unwrap());
    }

    #[test]
    fn combinations_are_lexicographic_and_complete() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(4, 2)[0], vec![0, 1]);
        assert_eq!(combinations(4, 2)[5], vec![2, 3]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
