//! Secrecy-rate evaluation for a fixed transmit covariance.

use crate::DesignError;
use channel_model::ChannelInstance;
use hermitian_linalg::{hermitian_eig, ComplexMatrix, Cx, HermitianMatrix};

/// Worst-case secrecy rate of covariance `w` on `instance`, in bits/s/Hz:
/// min over eavesdroppers of log2(1 + h^H W h) - log2 det(I + G_k^H W G_k).
/// The determinant is evaluated exactly through the eigenvalues of
/// G_k^H W G_k; tiny negative eigenvalues from a numerically near-psd W are
/// clamped at zero.
pub fn secrecy_rate(w: &HermitianMatrix, instance: &ChannelInstance) -> Result<f64, DesignError> {
    if w.dim() != instance.n_t() {
        return Err(DesignError::DimensionMismatch {
            expected: instance.n_t(),
            got: w.dim(),
        });
    }
    rate_against(w, instance.h(), instance.eves())
}

/// Rate without an instance wrapper; `eves` may be empty (no leakage term).
pub(crate) fn rate_against(
    w: &HermitianMatrix,
    h: &[Cx],
    eves: &[ComplexMatrix],
) -> Result<f64, DesignError> {
    let bob = (1.0 + w.quadratic_form(h).max(0.0)).log2();
    let mut worst_leak = 0.0f64;
    for g in eves {
        worst_leak = worst_leak.max(leak_bits(w, g)?);
    }
    Ok(bob - worst_leak)
}

/// log2 det(I + G^H W G), always nonnegative for psd W.
pub(crate) fn leak_bits(w: &HermitianMatrix, g: &ComplexMatrix) -> Result<f64, DesignError> {
    let gwg = g.adjoint().mul(&w.as_matrix().mul(g));
    let herm = HermitianMatrix::new(&gwg)?;
    let (vals, _) = hermitian_eig(&herm)?;
    Ok(vals.iter().map(|&l| (1.0 + l.max(0.0)).log2()).sum())
}
