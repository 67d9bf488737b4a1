use nalgebra::DMatrix;
use num_complex::Complex64;

use super::operator::UnitaryOp;
use crate::error::{Error, Result};

/// Max elementwise `|a - e^{iγ} b|`, with `γ` chosen to line up the phases
/// of the two matrices at the position of `b`'s largest-magnitude entry.
///
/// Returns `f64::INFINITY` on a shape mismatch.
pub fn phase_aligned_deviation(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    let (mut best, mut best_mag) = (0, -1.0);
    for (k, v) in b.iter().enumerate() {
        if v.norm() > best_mag {
            best = k;
            best_mag = v.norm();
        }
    }
    let phase = if best_mag > 0.0 && a[best].norm() > 0.0 {
        let z = a[best] * b[best].conj();
        z / z.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - phase * y).norm())
        .fold(0.0, f64::max)
}

/// Max deviation between `u` and `v` restricted to the given basis indices,
/// up to a global phase. Zero means equal.
pub fn equiv_on_subspace(u: &UnitaryOp, v: &UnitaryOp, subspace_basis: &[usize]) -> Result<f64> {
    if subspace_basis.is_empty() {
        return Err(Error::EmptySubspace);
    }
    if u.register() != v.register() {
        return Err(Error::RegisterMismatch);
    }
    let dim = u.dim();
    if let Some(&bad) = subspace_basis.iter().find(|&&i| i >= dim) {
        return Err(Error::IndexOutOfRange { index: bad, dim });
    }
    Ok(phase_aligned_deviation(
        &u.submatrix(subspace_basis),
        &v.submatrix(subspace_basis),
    ))
}
