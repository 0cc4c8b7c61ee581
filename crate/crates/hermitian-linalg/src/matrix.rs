//! Dense row-major complex matrices and the Hermitian wrapper.

use crate::{Cx, LinalgError};

/// Dense complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Cx>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Cx::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Cx::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cx) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Build from row-major data; panics if the length does not match.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Cx>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data length mismatch");
        Self { rows, cols, data }
    }

    /// Column vector from a slice.
    pub fn column(v: &[Cx]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Cx] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Index of the first non-finite entry, if any.
    pub fn find_non_finite(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += aik * other[(k, j)];
                }
            }
        }
        out
    }

    /// Matrix-vector product `A v`.
    pub fn mul_vec(&self, v: &[Cx]) -> Vec<Cx> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Adjoint-vector product `A^H v`.
    pub fn adjoint_mul_vec(&self, v: &[Cx]) -> Vec<Cx> {
        assert_eq!(self.rows, v.len(), "matrix-vector shape mismatch");
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)].conj() * v[i]).sum())
            .collect()
    }

    pub fn trace(&self) -> Cx {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Column `j` as an owned vector.
    pub fn col(&self, j: usize) -> Vec<Cx> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Horizontal concatenation `[A | B | ...]`; all blocks share a row count.
    pub fn hcat(blocks: &[&ComplexMatrix]) -> Self {
        assert!(!blocks.is_empty());
        let rows = blocks[0].rows;
        assert!(blocks.iter().all(|b| b.rows == rows));
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    out[(i, off + j)] = b[(i, j)];
                }
            }
            off += b.cols;
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Cx;
    fn index(&self, (i, j): (usize, usize)) -> &Cx {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cx {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Kronecker product `A ⊗ B`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |i, j| {
        a[(i / b.rows(), j / b.cols())] * b[(i % b.rows(), j % b.cols())]
    })
}

/// Column-stacking vectorization: `vec(A)` lists column 0 top to bottom,
/// then column 1, and so on.
pub fn vec_matrix(a: &ComplexMatrix) -> Vec<Cx> {
    let mut out = Vec::with_capacity(a.rows() * a.cols());
    for j in 0..a.cols() {
        for i in 0..a.rows() {
            out.push(a[(i, j)]);
        }
    }
    out
}

/// Square complex matrix kept exactly Hermitian.
///
/// The constructor symmetrizes its argument via `(A + A^H) / 2`, so the
/// stored value satisfies `A = A^H` to the last bit; diagonal entries are
/// stored with zero imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: ComplexMatrix,
}

impl HermitianMatrix {
    /// Symmetrize and wrap. Errors on non-square or non-finite input.
    pub fn new(a: &ComplexMatrix) -> Result<Self, LinalgError> {
        if !a.is_square() {
            return Err(LinalgError::DimMismatch {
                context: "hermitian matrix must be square",
                lhs: a.rows().to_string(),
                rhs: a.cols().to_string(),
            });
        }
        if let Some((row, col)) = a.find_non_finite() {
            return Err(LinalgError::NonFinite { row, col });
        }
        let n = a.rows();
        let mut inner = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            inner[(i, i)] = Cx::new(a[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                let z = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
                inner[(i, j)] = z;
                inner[(j, i)] = z.conj();
            }
        }
        Ok(Self { inner })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            inner: ComplexMatrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: ComplexMatrix::identity(n),
        }
    }

    /// Rank-one `v v^H` (exactly Hermitian by construction).
    pub fn from_outer(v: &[Cx]) -> Self {
        let n = v.len();
        let mut inner = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            inner[(i, i)] = Cx::new(v[i].norm_sqr(), 0.0);
            for j in (i + 1)..n {
                let z = v[i] * v[j].conj();
                inner[(i, j)] = z;
                inner[(j, i)] = z.conj();
            }
        }
        Self { inner }
    }

    pub fn dim(&self) -> usize {
        self.inner.rows()
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.inner
    }

    pub fn entry(&self, i: usize, j: usize) -> Cx {
        self.inner[(i, j)]
    }

    /// Real trace (diagonal imaginary parts are exactly zero).
    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.inner[(i, i)].re).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.frobenius_norm()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            inner: self.inner.scale(s),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.add(&other.inner),
        }
    }

    /// Quadratic form `v^H A v` (real by Hermitian symmetry).
    pub fn quadratic_form(&self, v: &[Cx]) -> f64 {
        crate::cdot(v, &self.inner.mul_vec(v)).re
    }

    pub fn is_zero(&self) -> bool {
        self.inner.data().iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cx {
        Cx::new(re, im)
    }

    #[test]
    fn kron_with_identity_is_block_diagonal() {
        let w = ComplexMatrix::from_vec(
            2,
            2,
            vec![c(1.0, 0.0), c(2.0, 1.0), c(2.0, -1.0), c(3.0, 0.0)],
        );
        let k = kron(&ComplexMatrix::identity(2), &w);
        assert_eq!(k.rows(), 4);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(k[(i, j)], w[(i, j)]);
                assert_eq!(k[(2 + i, 2 + j)], w[(i, j)]);
                assert_eq!(k[(i, 2 + j)], c(0.0, 0.0));
                assert_eq!(k[(2 + i, j)], c(0.0, 0.0));
            }
        }
    }

    #[test]
    fn vec_stacks_columns() {
        let a = ComplexMatrix::from_vec(
            2,
            2,
            vec![c(1.0, 0.0), c(3.0, 0.0), c(2.0, 0.0), c(4.0, 0.0)],
        );
        // a = [[1, 3], [2, 4]] row-major, so columns are (1,2) and (3,4).
        let v = vec_matrix(&a);
        assert_eq!(
            v,
            vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)]
        );
    }

    #[test]
    fn trace_identity_for_kron_vec() {
        // Tr(G^H W G) = vec(G)^H (I ⊗ W) vec(G)
        let mut rng = crate::test_util::rng(7);
        let g = crate::test_util::random_complex_matrix(&mut rng, 3, 2);
        let w = crate::test_util::random_hermitian(&mut rng, 3);
        let lhs = g.adjoint().mul(w.as_matrix()).mul(&g).trace().re;
        let vg = vec_matrix(&g);
        let big = kron(&ComplexMatrix::identity(2), w.as_matrix());
        let rhs = crate::cdot(&vg, &big.mul_vec(&vg)).re;
        assert!((lhs - rhs).abs() < 1e-10, "{lhs} vs {rhs}");
    }

    #[test]
    fn hermitian_constructor_symmetrizes() {
        let a = ComplexMatrix::from_vec(
            2,
            2,
            vec![c(1.0, 1e-14), c(2.0, 3.0), c(2.0, -3.0 + 1e-14), c(4.0, 0.0)],
        );
        let h = HermitianMatrix::new(&a).unwrap();
        assert_eq!(h.entry(0, 0).im, 0.0);
        assert_eq!(h.entry(0, 1), h.entry(1, 0).conj());
    }

    #[test]
    fn hermitian_rejects_non_finite() {
        let a = ComplexMatrix::from_vec(
            1,
            1,
            vec![c(f64::NAN, 0.0)],
        );
        assert!(matches!(
            HermitianMatrix::new(&a),
            Err(LinalgError::NonFinite { row: 0, col: 0 })
        ));
    }

    #[test]
    fn quadratic_form_matches_direct_evaluation() {
        let mut rng = crate::test_util::rng(3);
        let h = crate::test_util::random_hermitian(&mut rng, 4);
        let v: Vec<Cx> = (0..4).map(|i| c(i as f64 + 0.5, -(i as f64))).collect();
        let direct = crate::cdot(&v, &h.as_matrix().mul_vec(&v));
        assert!(direct.im.abs() < 1e-12);
        assert!((h.quadratic_form(&v) - direct.re).abs() < 1e-12);
    }
}
