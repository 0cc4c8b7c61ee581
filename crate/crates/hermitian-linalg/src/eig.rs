//! Cyclic Jacobi eigendecomposition for complex Hermitian matrices, and the
//! generalized principal eigenvector built on top of it.
//!
//! Jacobi is quadratic-convergent and unconditionally stable at the small
//! dimensions used here (≤ ~64); each rotation annihilates one off-diagonal
//! entry with a unitary similarity that also carries a phase factor.

use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::{Cx, LinalgError};

const MAX_SWEEPS: usize = 60;

/// Full eigendecomposition `A = V Λ V^H` of a Hermitian matrix.
///
/// Returns eigenvalues sorted descending and the matching unit eigenvectors
/// as the columns of the returned matrix (phase-normalized so the first
/// component of modulus above 1e-12 is real nonnegative).
pub fn hermitian_eig(a: &HermitianMatrix) -> Result<(Vec<f64>, ComplexMatrix), LinalgError> {
    let n = a.dim();
    if n == 0 {
        return Ok((Vec::new(), ComplexMatrix::zeros(0, 0)));
    }
    let mut m = a.as_matrix().clone();
    let mut v = ComplexMatrix::identity(n);
    let scale = 1.0 + a.frobenius_norm();
    let tol = 1e-15 * scale;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&m);
        if off <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&m) > tol * 10.0 {
        return Err(LinalgError::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap().then(i.cmp(&j)));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        let mut column = v.col(old_col);
        crate::normalize_phase(&mut column);
        for i in 0..n {
            vectors[(i, new_col)] = column[i];
        }
    }
    Ok((eigenvalues, vectors))
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += 2.0 * m[(i, j)].norm_sqr();
        }
    }
    s.sqrt()
}

/// One Jacobi rotation annihilating entry (p, q).
///
/// With a_pq = r e^{iφ}, the unitary is U = [[c, -s e^{iφ}], [s e^{-iφ}, c]]
/// acting on columns (p, q); tan(2θ) = 2r / (a_pp − a_qq).
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{iφ}
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;

    let tau = (app - aqq) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Column factors: col_p ← c·col_p + s e^{-iφ}·col_q,
    //                 col_q ← -s e^{iφ}·col_p + c·col_q.
    let sp = Cx::new(s, 0.0) * phase.conj();
    let sq = Cx::new(s, 0.0) * phase;

    let n = m.rows();
    // Right-multiply rows of A by U.
    for i in 0..n {
        let aip = m[(i, p)];
        let aiq = m[(i, q)];
        m[(i, p)] = aip * c + aiq * sp;
        m[(i, q)] = aiq * c - aip * sq;
    }
    // Left-multiply by U^H (conjugate action on rows p, q).
    for j in 0..n {
        let apj = m[(p, j)];
        let aqj = m[(q, j)];
        m[(p, j)] = apj * c + aqj * sp.conj();
        m[(q, j)] = aqj * c - apj * sq.conj();
    }
    // Restore exact symmetry on the affected entries.
    m[(p, q)] = Cx::new(0.0, 0.0);
    m[(q, p)] = Cx::new(0.0, 0.0);
    m[(p, p)] = Cx::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Cx::new(m[(q, q)].re, 0.0);

    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * c + viq * sp;
        v[(i, q)] = viq * c - vip * sq;
    }
}

/// Unit-norm vector q maximizing the generalized Rayleigh quotient
/// `q^H A q / q^H B q` for Hermitian A and positive definite B.
///
/// Computed via the symmetric reduction `B^{-1/2} A B^{-1/2}`; errors if the
/// minimum eigenvalue of B is at or below 1e-12.
pub fn principal_generalized_eigvec(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
) -> Result<Vec<Cx>, LinalgError> {
    if a.dim() != b.dim() {
        return Err(LinalgError::DimMismatch {
            context: "generalized eigenproblem",
            lhs: a.dim().to_string(),
            rhs: b.dim().to_string(),
        });
    }
    let (b_vals, b_vecs) = hermitian_eig(b)?;
    let min_eig = *b_vals.last().expect("nonempty");
    if min_eig <= 1e-12 {
        return Err(LinalgError::NotPositiveDefinite { min_eig });
    }
    let n = b.dim();
    // B^{-1/2} = Q Λ^{-1/2} Q^H
    let mut scaled = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        let w = 1.0 / b_vals[j].sqrt();
        for i in 0..n {
            scaled[(i, j)] = b_vecs[(i, j)] * w;
        }
    }
    let b_inv_half = scaled.mul(&b_vecs.adjoint());

    let c = b_inv_half.mul(a.as_matrix()).mul(&b_inv_half);
    let c = HermitianMatrix::new(&c)?;
    let (_, c_vecs) = hermitian_eig(&c)?;
    let u = c_vecs.col(0);
    let mut q = b_inv_half.mul_vec(&u);
    let nq = crate::norm(&q);
    for z in q.iter_mut() {
        *z /= nq;
    }
    crate::normalize_phase(&mut q);
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{random_hermitian, random_psd, rng};
    use crate::{cdot, norm};
    use rand::Rng;

    #[test]
    fn identity_spectrum() {
        let (vals, _) = hermitian_eig(&HermitianMatrix::identity(3)).unwrap();
        assert_eq!(vals, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn pauli_y_spectrum() {
        // [[0, -i], [i, 0]] has eigenvalues ±1.
        let a = ComplexMatrix::from_vec(
            2,
            2,
            vec![
                Cx::new(0.0, 0.0),
                Cx::new(0.0, -1.0),
                Cx::new(0.0, 1.0),
                Cx::new(0.0, 0.0),
            ],
        );
        let (vals, vecs) = hermitian_eig(&HermitianMatrix::new(&a).unwrap()).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] + 1.0).abs() < 1e-12);
        // Residual ‖Av - λv‖ per eigenpair.
        for (k, lam) in vals.iter().enumerate() {
            let v = vecs.col(k);
            let av = a.mul_vec(&v);
            let res: f64 = av
                .iter()
                .zip(&v)
                .map(|(x, y)| (x - y * *lam).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res < 1e-12);
        }
    }

    #[test]
    fn seeded_reconstruction() {
        let mut r = rng(42);
        for trial in 0..20 {
            let n = 2 + (trial % 5);
            let a = random_hermitian(&mut r, n);
            let (vals, vecs) = hermitian_eig(&a).unwrap();
            // Sorted descending.
            assert!(vals.windows(2).all(|w| w[0] >= w[1]));
            // Orthonormal columns.
            for i in 0..n {
                for j in 0..n {
                    let d = cdot(&vecs.col(i), &vecs.col(j));
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((d.re - want).abs() < 1e-10 && d.im.abs() < 1e-10);
                }
            }
            // V Λ V^H reconstructs A.
            let mut recon = ComplexMatrix::zeros(n, n);
            for (k, lam) in vals.iter().enumerate() {
                let v = vecs.col(k);
                recon = recon.add(&crate::outer(&v, &v).scale(*lam));
            }
            let err = recon.sub(a.as_matrix()).frobenius_norm();
            assert!(err <= 1e-10 * (1.0 + a.frobenius_norm()), "err {err}");
        }
    }

    #[test]
    fn residual_bound_per_pair() {
        let mut r = rng(7);
        let a = random_hermitian(&mut r, 6);
        let (vals, vecs) = hermitian_eig(&a).unwrap();
        let scale = 1.0 + a.frobenius_norm();
        for (k, lam) in vals.iter().enumerate() {
            let v = vecs.col(k);
            let av = a.as_matrix().mul_vec(&v);
            let res: f64 = av
                .iter()
                .zip(&v)
                .map(|(x, y)| (x - y * *lam).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res <= 1e-10 * scale);
        }
    }

    #[test]
    fn generalized_reduces_to_standard_for_identity_b() {
        let mut r = rng(11);
        let a = random_hermitian(&mut r, 4);
        let q = principal_generalized_eigvec(&a, &HermitianMatrix::identity(4)).unwrap();
        let (vals, vecs) = hermitian_eig(&a).unwrap();
        let top = vecs.col(0);
        let overlap = cdot(&q, &top).norm();
        assert!((overlap - 1.0).abs() < 1e-8, "overlap {overlap}");
        let quotient = a.quadratic_form(&q);
        assert!((quotient - vals[0]).abs() < 1e-9);
    }

    #[test]
    fn orthogonal_channel_fixture() {
        // A = I + P h h^H, B = I + P g g^H with h = e1, g = e2, P = 1:
        // the quotient is maximized along e1.
        let h = [Cx::new(1.0, 0.0), Cx::new(0.0, 0.0)];
        let g = [Cx::new(0.0, 0.0), Cx::new(1.0, 0.0)];
        let a = HermitianMatrix::identity(2).add(&HermitianMatrix::from_outer(&h));
        let b = HermitianMatrix::identity(2).add(&HermitianMatrix::from_outer(&g));
        let q = principal_generalized_eigvec(&a, &b).unwrap();
        assert!((q[0].re - 1.0).abs() < 1e-10);
        assert!(q[0].im.abs() < 1e-12);
        assert!(q[1].norm() < 1e-10);
    }

    #[test]
    fn generalized_beats_random_probes() {
        let mut r = rng(13);
        let a = random_hermitian(&mut r, 5);
        let b = {
            // PD by adding a shifted PSD.
            let p = random_psd(&mut r, 5, 5);
            p.add(&HermitianMatrix::identity(5).scale(0.5))
        };
        let q = principal_generalized_eigvec(&a, &b).unwrap();
        let best = a.quadratic_form(&q) / b.quadratic_form(&q);
        for _ in 0..10_000 {
            let mut v: Vec<Cx> = (0..5)
                .map(|_| Cx::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)))
                .collect();
            let nv = norm(&v);
            if nv == 0.0 {
                continue;
            }
            for z in v.iter_mut() {
                *z /= nv;
            }
            let quotient = a.quadratic_form(&v) / b.quadratic_form(&v);
            assert!(quotient <= best + 1e-9);
        }
    }

    #[test]
    fn generalized_residual_bound() {
        let mut r = rng(17);
        let a = random_hermitian(&mut r, 4);
        let b = random_psd(&mut r, 4, 4).add(&HermitianMatrix::identity(4).scale(0.3));
        let q = principal_generalized_eigvec(&a, &b).unwrap();
        let lambda = a.quadratic_form(&q) / b.quadratic_form(&q);
        let aq = a.as_matrix().mul_vec(&q);
        let bq = b.as_matrix().mul_vec(&q);
        let res: f64 = aq
            .iter()
            .zip(&bq)
            .map(|(x, y)| (x - y * lambda).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(res <= 1e-8, "residual {res}");
    }

    #[test]
    fn rejects_indefinite_b() {
        let a = HermitianMatrix::identity(2);
        let b = HermitianMatrix::identity(2).scale(-1.0);
        assert!(matches!(
            principal_generalized_eigvec(&a, &b),
            Err(LinalgError::NotPositiveDefinite { .. })
        ));
    }
}
