//! One-sided Jacobi SVD, used to build orthogonal-complement projectors.

use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::{cdot, norm, Cx, LinalgError};

const MAX_SWEEPS: usize = 60;
const RANK_TOL: f64 = 1e-10; // singular values below RANK_TOL·σ_max count as zero

/// Orthonormal basis of the column space of G, with singular values below
/// `1e-10 · σ_max` truncated. Returns the basis vectors.
fn range_basis(g: &ComplexMatrix) -> Vec<Vec<Cx>> {
    let m = g.cols();
    let mut cols: Vec<Vec<Cx>> = (0..m).map(|j| g.col(j)).collect();

    // One-sided Jacobi: rotate column pairs until all are mutually orthogonal.
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..m {
            for j in (i + 1)..m {
                let a = crate::norm_sq(&cols[i]);
                let b = crate::norm_sq(&cols[j]);
                if a == 0.0 || b == 0.0 {
                    continue;
                }
                let c_ij = cdot(&cols[i], &cols[j]);
                let r = c_ij.norm();
                if r <= 1e-14 * (a * b).sqrt() {
                    continue;
                }
                rotated = true;
                // Diagonalize the 2x2 Gram block [[a, c],[c̄, b]].
                let phase = c_ij / r;
                let tau = (a - b) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let sp = Cx::new(s, 0.0) * phase.conj();
                let sq = Cx::new(s, 0.0) * phase;
                for k in 0..cols[i].len() {
                    let gi = cols[i][k];
                    let gj = cols[j][k];
                    cols[i][k] = gi * c + gj * sp;
                    cols[j][k] = gj * c - gi * sq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let sigmas: Vec<f64> = cols.iter().map(|c| norm(c)).collect();
    let sigma_max = sigmas.iter().cloned().fold(0.0_f64, f64::max);
    if sigma_max == 0.0 {
        return Vec::new();
    }
    let mut basis = Vec::new();
    for (c, &sigma) in cols.iter().zip(&sigmas) {
        if sigma > RANK_TOL * sigma_max {
            basis.push(c.iter().map(|z| z / sigma).collect());
        }
    }
    basis
}

/// Projector onto the orthogonal complement of the column space of G:
/// `Π = I − G (G^H G)^† G^H`, Hermitian and idempotent, with `Π G = 0`.
pub fn orthogonal_complement_projector(g: &ComplexMatrix) -> Result<HermitianMatrix, LinalgError> {
    if let Some((row, col)) = g.find_non_finite() {
        return Err(LinalgError::NonFinite { row, col });
    }
    let n = g.rows();
    let mut pi = ComplexMatrix::identity(n);
    for u in range_basis(g) {
        pi = pi.sub(&crate::outer(&u, &u));
    }
    HermitianMatrix::new(&pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{random_complex_matrix, rng};
    use crate::hermitian_eig;

    #[test]
    fn coordinate_axis() {
        // G = e2 in C^2 → Π = diag(1, 0).
        let g = ComplexMatrix::from_vec(2, 1, vec![Cx::new(0.0, 0.0), Cx::new(1.0, 0.0)]);
        let pi = orthogonal_complement_projector(&g).unwrap();
        assert!((pi.entry(0, 0).re - 1.0).abs() < 1e-14);
        assert!(pi.entry(1, 1).norm() < 1e-14);
        assert!(pi.entry(0, 1).norm() < 1e-14);
    }

    #[test]
    fn full_span_gives_zero() {
        let mut r = rng(5);
        // Random invertible 3x3 (full row rank with probability 1).
        let g = random_complex_matrix(&mut r, 3, 3);
        let pi = orthogonal_complement_projector(&g).unwrap();
        assert!(pi.frobenius_norm() < 1e-10, "{}", pi.frobenius_norm());
    }

    #[test]
    fn random_tall_matrix_properties() {
        let mut r = rng(23);
        let g = random_complex_matrix(&mut r, 5, 2);
        let pi = orthogonal_complement_projector(&g).unwrap();

        // Idempotent within 1e-10.
        let pi2 = pi.as_matrix().mul(pi.as_matrix());
        assert!(pi2.sub(pi.as_matrix()).frobenius_norm() < 1e-10);

        // Π G = 0 within 1e-10.
        assert!(pi.as_matrix().mul(&g).frobenius_norm() < 1e-10);

        // rank(Π) = 5 − 2 = 3, counted as eigenvalues near 1.
        let (vals, _) = hermitian_eig(&pi).unwrap();
        let near_one = vals.iter().filter(|&&v| (v - 1.0).abs() < 1e-8).count();
        let near_zero = vals.iter().filter(|&&v| v.abs() < 1e-8).count();
        assert_eq!((near_one, near_zero), (3, 2));
    }

    #[test]
    fn wide_rank_deficient_aggregate() {
        let mut r = rng(31);
        // 3 rows, 5 columns: the complement is empty when rank hits 3.
        let g = random_complex_matrix(&mut r, 3, 5);
        let pi = orthogonal_complement_projector(&g).unwrap();
        assert!(pi.frobenius_norm() < 1e-9);
    }

    #[test]
    fn zero_matrix_gives_identity() {
        let g = ComplexMatrix::zeros(4, 2);
        let pi = orthogonal_complement_projector(&g).unwrap();
        assert!(
            pi.as_matrix()
                .sub(&ComplexMatrix::identity(4))
                .frobenius_norm()
                == 0.0
        );
    }

    #[test]
    fn near_dependent_columns_are_truncated() {
        // Second column is a tiny perturbation of the first; the projector
        // must still kill both (their span is numerically one-dimensional
        // plus a rank-tol direction).
        let a = [Cx::new(1.0, 0.0), Cx::new(0.0, 1.0), Cx::new(0.5, 0.0)];
        let b: Vec<Cx> = a.iter().map(|z| z * 2.0).collect();
        let mut g = ComplexMatrix::zeros(3, 2);
        for i in 0..3 {
            g[(i, 0)] = a[i];
            g[(i, 1)] = b[i];
        }
        let pi = orthogonal_complement_projector(&g).unwrap();
        let (vals, _) = hermitian_eig(&pi).unwrap();
        let rank: usize = vals.iter().filter(|&&v| v > 0.5).count();
        assert_eq!(rank, 2); // exactly one direction removed
        assert!(pi.as_matrix().mul(&g).frobenius_norm() < 1e-9);
    }
}
