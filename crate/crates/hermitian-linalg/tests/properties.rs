//! Property-based checks over random inputs.

use hermitian_linalg::{
    embed_hermitian_triplets, from_real_embedding, hermitian_eig, real_embedding, ComplexMatrix,
    Cx, HermitianMatrix,
};
use proptest::prelude::*;

fn complex_entry() -> impl Strategy<Value = Cx> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Cx::new(re, im))
}

fn hermitian(n: usize) -> impl Strategy<Value = HermitianMatrix> {
    proptest::collection::vec(complex_entry(), n * n).prop_map(move |data| {
        let a = ComplexMatrix::from_vec(n, n, data);
        HermitianMatrix::new(&a.add(&a.adjoint()).scale(0.5)).unwrap()
    })
}

/// PSD matrix with controlled rank r: sum of r random outer products.
fn psd(n: usize, r: usize) -> impl Strategy<Value = HermitianMatrix> {
    proptest::collection::vec(complex_entry(), r * n).prop_map(move |data| {
        let mut acc = HermitianMatrix::zero(n);
        for chunk in data.chunks(n) {
            acc = acc.add(&HermitianMatrix::from_outer(chunk));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eig_reconstructs(a in hermitian(4)) {
        let (vals, vecs) = hermitian_eig(&a).unwrap();
        let mut recon = ComplexMatrix::zeros(4, 4);
        for (k, lam) in vals.iter().enumerate() {
            let v = vecs.col(k);
            recon = recon.add(&hermitian_linalg::outer(&v, &v).scale(*lam));
        }
        let err = recon.sub(a.as_matrix()).frobenius_norm();
        prop_assert!(err <= 1e-10 * (1.0 + a.frobenius_norm()));
    }

    /// det(I + A) ≥ 1 + Tr(A) for PSD A, with equality iff rank ≤ 1.
    #[test]
    fn det_trace_inequality_on_psd(a in psd(4, 3)) {
        let (vals, _) = hermitian_eig(&a).unwrap();
        let det: f64 = vals.iter().map(|l| 1.0 + l).product();
        let tr = 1.0 + a.trace();
        prop_assert!(det >= tr - 1e-9 * (1.0 + det.abs()));
    }

    #[test]
    fn det_trace_equality_at_rank_one(a in psd(5, 1)) {
        let (vals, _) = hermitian_eig(&a).unwrap();
        let det: f64 = vals.iter().map(|l| 1.0 + l).product();
        let tr = 1.0 + a.trace();
        prop_assert!((det - tr).abs() <= 1e-9 * (1.0 + det.abs()));
    }

    #[test]
    fn embedding_preserves_min_eigenvalue(a in hermitian(3)) {
        let (vals, _) = hermitian_eig(&a).unwrap();
        let e = real_embedding(&a);
        let min_c = vals.last().copied().unwrap();
        let min_r = e
            .symmetric_eigenvalues()
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        prop_assert!((min_c - min_r).abs() <= 1e-9 * (1.0 + a.frobenius_norm()));
    }

    #[test]
    fn embedding_round_trips(a in hermitian(4)) {
        let back = from_real_embedding(&real_embedding(&a)).unwrap();
        prop_assert!(back.as_matrix().sub(a.as_matrix()).frobenius_norm() == 0.0);
    }

    #[test]
    fn triplet_embedding_agrees_with_dense(a in hermitian(3)) {
        let dense = real_embedding(&a);
        let mut rebuilt = nalgebra::DMatrix::<f64>::zeros(6, 6);
        for (i, j, v) in embed_hermitian_triplets(a.as_matrix()) {
            rebuilt[(i, j)] += v;
        }
        prop_assert!((dense - rebuilt).norm() == 0.0);
    }
}
