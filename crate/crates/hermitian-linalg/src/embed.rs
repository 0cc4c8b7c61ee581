//! Complex-to-real symmetric embedding.
//!
//! A Hermitian A maps to the real symmetric `[[Re A, -Im A], [Im A, Re A]]`
//! of twice the dimension. The embedding doubles each eigenvalue's
//! multiplicity, so PSD-ness carries over in both directions, which lets a
//! purely real cone solver handle complex blocks.

use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::{Cx, LinalgError};
use nalgebra::DMatrix;

/// Real symmetric embedding of a Hermitian matrix (dimension doubles).
pub fn real_embedding(a: &HermitianMatrix) -> DMatrix<f64> {
    let n = a.dim();
    DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let z = a.entry(i % n, j % n);
        match (i >= n, j >= n) {
            (false, false) | (true, true) => z.re,
            (false, true) => -z.im,
            (true, false) => z.im,
        }
    })
}

/// Inverse of [`real_embedding`] for matrices of even dimension; block
/// averages make the map well-defined for any real symmetric input.
pub fn from_real_embedding(m: &DMatrix<f64>) -> Result<HermitianMatrix, LinalgError> {
    let d = m.nrows();
    if m.ncols() != d || !d.is_multiple_of(2) {
        return Err(LinalgError::DimMismatch {
            context: "real embedding must be square of even dimension",
            lhs: d.to_string(),
            rhs: m.ncols().to_string(),
        });
    }
    let n = d / 2;
    let a = ComplexMatrix::from_fn(n, n, |i, j| {
        let re = (m[(i, j)] + m[(n + i, n + j)]) * 0.5;
        let im = (m[(n + i, j)] - m[(i, n + j)]) * 0.5;
        Cx::new(re, im)
    });
    HermitianMatrix::new(&a)
}

/// Sparse triplets (row, col, value) of the real embedding of a Hermitian
/// matrix, exact zeros skipped. Used to assemble solver coefficient blocks.
pub fn embed_hermitian_triplets(a: &ComplexMatrix) -> Vec<(usize, usize, f64)> {
    assert!(a.is_square(), "embedding requires a square matrix");
    let n = a.rows();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let z = a[(i, j)];
            if z.re != 0.0 {
                out.push((i, j, z.re));
                out.push((n + i, n + j, z.re));
            }
            if z.im != 0.0 {
                out.push((i, n + j, -z.im));
                out.push((n + i, j, z.im));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian_eig;
    use crate::test_util::{random_hermitian, rng};

    #[test]
    fn real_matrix_embeds_block_diagonally() {
        let a = ComplexMatrix::from_vec(
            2,
            2,
            vec![
                Cx::new(2.0, 0.0),
                Cx::new(1.0, 0.0),
                Cx::new(1.0, 0.0),
                Cx::new(3.0, 0.0),
            ],
        );
        let h = HermitianMatrix::new(&a).unwrap();
        let e = real_embedding(&h);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(e[(i, j)], a[(i, j)].re);
                assert_eq!(e[(2 + i, 2 + j)], a[(i, j)].re);
                assert_eq!(e[(i, 2 + j)], 0.0);
                assert_eq!(e[(2 + i, j)], 0.0);
            }
        }
    }

    #[test]
    fn pauli_y_embedding_spectrum() {
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
        let h = HermitianMatrix::new(&a).unwrap();
        let e = real_embedding(&h);
        let mut vals: Vec<f64> = e.symmetric_eigenvalues().iter().cloned().collect();
        vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (got, want) in vals.iter().zip([1.0, 1.0, -1.0, -1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn embedding_doubles_the_spectrum() {
        let mut r = rng(9);
        let h = random_hermitian(&mut r, 5);
        let (vals, _) = hermitian_eig(&h).unwrap();
        let e = real_embedding(&h);
        let mut evals: Vec<f64> = e.symmetric_eigenvalues().iter().cloned().collect();
        evals.sort_by(|x, y| y.partial_cmp(x).unwrap());
        let mut doubled: Vec<f64> = vals.iter().flat_map(|&v| [v, v]).collect();
        doubled.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (a, b) in evals.iter().zip(&doubled) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn embedding_symmetric_and_invertible() {
        let mut r = rng(15);
        let h = random_hermitian(&mut r, 4);
        let e = real_embedding(&h);
        assert!((e.clone() - e.transpose()).norm() == 0.0);
        let back = from_real_embedding(&e).unwrap();
        assert!(
            back.as_matrix().sub(h.as_matrix()).frobenius_norm() == 0.0,
            "round trip must be exact"
        );
    }

    #[test]
    fn triplets_match_dense_embedding() {
        let mut r = rng(21);
        let h = random_hermitian(&mut r, 4);
        let e = real_embedding(&h);
        let mut dense = DMatrix::zeros(8, 8);
        for (i, j, v) in embed_hermitian_triplets(h.as_matrix()) {
            dense[(i, j)] += v;
        }
        assert!((e - dense).norm() < 1e-15);
    }
}
