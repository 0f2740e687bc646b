//! Positive semidefiniteness check by dense symmetric eigendecomposition.

use nalgebra::{DMatrix, SymmetricEigen};
use tgraphlet_core::kernel::GramMatrix;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PsdReport {
    pub min_eigenvalue: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Smallest eigenvalue of `values` (row-major `n × n`); the matrix must be
/// exactly symmetric.
pub fn min_eigenvalue(values: &[f64], n: usize) -> Result<f64> {
    if values.len() != n * n {
        return Err(Error::Failed(format!("{} values do not form a {n}x{n} matrix", values.len())));
    }
    for i in 0..n {
        for j in i + 1..n {
            if values[i * n + j] != values[j * n + i] {
                return Err(Error::Failed(format!("matrix is not symmetric at ({i}, {j})")));
            }
        }
    }
    if n == 0 {
        return Ok(0.0);
    }
    let m = DMatrix::from_row_slice(n, n, values);
    Ok(SymmetricEigen::new(m).eigenvalues.iter().copied().fold(f64::INFINITY, f64::min))
}

pub fn check_psd(k: &GramMatrix, tolerance: f64) -> Result<PsdReport> {
    let min = min_eigenvalue(k.values(), k.n())?;
    Ok(PsdReport { min_eigenvalue: min, tolerance, passed: min >= -tolerance })
}
