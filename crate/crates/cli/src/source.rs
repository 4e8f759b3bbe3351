use std::path::Path;

use zariski_core::error::{Error, Result};
use zariski_core::matrix::SymmetricIntMatrix;
use zariski_core::surfaces;

/// Resolve `--source`: a builder name (`del-pezzo:<r>`, `segre-schur`,
/// `segre-schur:first16`, `fermat-tridiag:<n>`) or a matrix file path, with
/// `--prefix k` cutting the leading k-by-k principal submatrix.
pub fn load(source: &str, prefix: Option<usize>) -> Result<(String, SymmetricIntMatrix)> {
    let matrix = match surfaces::build_named(source) {
        Ok(m) => m,
        Err(Error::UnknownSource(_)) if Path::new(source).exists() => {
            SymmetricIntMatrix::read_file(source)?
        }
        Err(Error::UnknownSource(_)) => {
            return Err(Error::UnknownSource(format!(
                "{source} (not a builder name, and no such file)"
            )))
        }
        Err(e) => return Err(e),
    };
    match prefix {
        None => Ok((source.to_string(), matrix)),
        Some(k) => Ok((format!("{source}[1..{k}]"), matrix.leading(k)?)),
    }
}

/// The full 64-line Segre-Schur run is multi-hour work and must be
/// acknowledged explicitly.
pub fn needs_extended_ack(source: &str, matrix: &SymmetricIntMatrix) -> bool {
    source == "segre-schur" && matrix.dim() == 64
}
