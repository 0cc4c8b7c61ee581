//! Dense complex linear algebra for small Hermitian problems.
//!
//! Everything here targets matrices of dimension up to a few dozen: cyclic
//! Jacobi eigendecomposition, generalized principal eigenvectors, a one-sided
//! Jacobi SVD used for orthogonal-complement projectors, Kronecker/vec
//! utilities, and the complex-to-real symmetric embedding
//! `[[Re A, -Im A], [Im A, Re A]]` consumed by real-valued cone solvers.
//!
//! All operations are pure functions over immutable values.

mod embed;
mod eig;
mod matrix;
mod svd;

pub use embed::{embed_hermitian_triplets, from_real_embedding, real_embedding};
pub use eig::{hermitian_eig, principal_generalized_eigvec};
pub use matrix::{kron, vec_matrix, ComplexMatrix, HermitianMatrix};
pub use svd::orthogonal_complement_projector;

use num_complex::Complex64;

/// Complex scalar used throughout: an IEEE double pair (re, im).
pub type Cx = Complex64;

/// Errors reported by the linear-algebra layer.
#[derive(Debug, thiserror::Error)]
pub enum LinalgError {
    /// An input entry was NaN or infinite.
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    /// Incompatible shapes for the requested operation.
    #[error("dimension mismatch: {context} ({lhs} vs {rhs})")]
    DimMismatch {
        context: &'static str,
        lhs: String,
        rhs: String,
    },
    /// A matrix required to be positive definite was not.
    #[error("matrix not positive definite (min eigenvalue {min_eig:.3e})")]
    NotPositiveDefinite { min_eig: f64 },
    /// An iterative kernel hit its sweep cap before reaching tolerance.
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

/// Conjugated inner product `a^H b`.
pub fn cdot(a: &[Cx], b: &[Cx]) -> Cx {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Squared Euclidean norm of a complex vector.
pub fn norm_sq(v: &[Cx]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// Euclidean norm of a complex vector.
pub fn norm(v: &[Cx]) -> f64 {
    norm_sq(v).sqrt()
}

/// Outer product `a b^H` as a dense matrix.
pub fn outer(a: &[Cx], b: &[Cx]) -> ComplexMatrix {
    ComplexMatrix::from_fn(a.len(), b.len(), |i, j| a[i] * b[j].conj())
}

/// Rescale a vector so its first component of modulus above `1e-12` is real
/// and nonnegative. Vectors that are numerically zero are returned unchanged.
///
/// This is the phase convention used for every eigenvector and beamformer
/// reported by this workspace, so repeated runs compare bitwise.
pub fn normalize_phase(v: &mut [Cx]) {
    if let Some(z) = v.iter().find(|z| z.norm() > 1e-12) {
        let phase = z.conj() / z.norm();
        for x in v.iter_mut() {
            *x *= phase;
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cdot_conjugates_left_argument() {
        let a = [Cx::new(0.0, 1.0)];
        let b = [Cx::new(0.0, 1.0)];
        let d = cdot(&a, &b);
        assert!((d.re - 1.0).abs() < 1e-15 && d.im.abs() < 1e-15);
    }

    #[test]
    fn phase_normalization_makes_leading_entry_real() {
        let mut v = vec![Cx::new(0.0, 0.5), Cx::new(1.0, -2.0)];
        normalize_phase(&mut v);
        assert!(v[0].im.abs() < 1e-15);
        assert!(v[0].re > 0.0);
        assert!((norm_sq(&v) - (0.25 + 5.0)).abs() < 1e-12);
    }

    #[test]
    fn phase_normalization_skips_zero_vector() {
        let mut v = vec![Cx::new(0.0, 0.0); 3];
        normalize_phase(&mut v);
        assert!(v.iter().all(|z| z.norm() == 0.0));
    }
}
