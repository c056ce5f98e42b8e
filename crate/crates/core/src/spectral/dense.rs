use crate::error::{Error, Result};
use nalgebra::{DMatrix, SymmetricEigen};

/// Eigenvalues of a real symmetric matrix, ascending.
///
/// `tol` is the convergence threshold on off-diagonal entries and
/// `max_sweeps` caps the work at `max_sweeps * n` implicit QR steps.
pub fn symmetric_eigenvalues(a: Vec<Vec<f64>>, tol: f64, max_sweeps: usize) -> Result<Vec<f64>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    if n == 0 {
        return Ok(Vec::new());
    }
    let m = DMatrix::from_fn(n, n, |i, j| a[i][j]);
    // nalgebra treats 0 as "no cap"; keep at least one step so a zero cap
    // stays a cap
    let cap = (max_sweeps * n).max(1);
    let eig = SymmetricEigen::try_new(m, tol, cap).ok_or_else(|| {
        Error::Numeric(format!(
            "symmetric eigensolver did not converge within {cap} iterations (n={n})"
        ))
    })?;
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}
