//! Intersection-matrix builders: Del Pezzo exceptional-curve configurations,
//! the 64 lines on the Segre-Schur quartic, and the Fermat-type tridiagonal
//! family. All builders are pure and their outputs immutable.

pub mod del_pezzo;
pub mod fermat;
pub mod segre;

pub use del_pezzo::{build_del_pezzo, del_pezzo_classes, DelPezzoCurveClass};
pub use fermat::build_fermat_tridiagonal;
pub use segre::{
    automorphism_table, build_segre_lines, build_segre_matrix, closed_form_discrepancies,
    intersection_determinant, line_index, line_on_quartic, lines_intersect, same_line,
    segre_entry_closed_form, segre_named_sublattice, Automorphism, FormulaDiscrepancy, LineInP3,
    LineTag,
};

use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;

/// Build a matrix from its CLI-facing source name: `del-pezzo:<r>`,
/// `segre-schur`, `segre-schur:first16`, or `fermat-tridiag:<n>`.
pub fn build_named(name: &str) -> Result<SymmetricIntMatrix> {
    if name == "segre-schur" {
        return Ok(build_segre_matrix());
    }
    if name == "segre-schur:first16" {
        return build_segre_matrix().leading(16);
    }
    if let Some(arg) = name.strip_prefix("del-pezzo:") {
        let r: usize = arg
            .parse()
            .map_err(|_| Error::UnknownSource(name.to_string()))?;
        return build_del_pezzo(r);
    }
    if let Some(arg) = name.strip_prefix("fermat-tridiag:") {
        let n: usize = arg
            .parse()
            .map_err(|_| Error::UnknownSource(name.to_string()))?;
        return build_fermat_tridiagonal(n);
    }
    Err(Error::UnknownSource(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_sources_resolve() {
        assert_eq!(build_named("del-pezzo:3").unwrap().dim(), 6);
        assert_eq!(build_named("fermat-tridiag:5").unwrap().dim(), 5);
        assert_eq!(build_named("segre-schur:first16").unwrap().dim(), 16);
        assert!(matches!(
            build_named("moebius"),
            Err(Error::UnknownSource(_))
        ));
        assert!(matches!(
            build_named("del-pezzo:nine"),
            Err(Error::UnknownSource(_))
        ));
    }
}
