//! Design result type and rank-one factor recovery.

use crate::DesignError;
use hermitian_linalg::{hermitian_eig, normalize_phase, Cx, HermitianMatrix};

/// How a design was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DesignStatus {
    /// Cone solver finished with optimality residuals at tolerance.
    Optimal,
    /// Analytic construction; no solver involved.
    ClosedForm,
}

/// A transmit covariance with its achieved performance.
#[derive(Debug, Clone)]
pub struct TransmitDesign {
    /// Transmit covariance, positive semidefinite; exactly the outer
    /// product of `beamformer` whenever that factor is present.
    pub w: HermitianMatrix,
    /// Rank-one factor with squared norm Tr(W); present only when the
    /// covariance is rank one up to a 1e-4 eigenvalue ratio.
    pub beamformer: Option<Vec<Cx>>,
    /// Achieved secrecy rate in bits/s/Hz.
    pub rate: f64,
    /// Second-to-first eigenvalue ratio of W (0 for W = 0).
    pub rank_ratio: f64,
    /// Tr(W).
    pub power_used: f64,
    pub status: DesignStatus,
}

impl TransmitDesign {
    /// The all-off design: no transmission, zero rate.
    pub(crate) fn zero(n: usize, status: DesignStatus) -> Self {
        TransmitDesign {
            w: HermitianMatrix::zero(n),
            beamformer: None,
            rate: 0.0,
            rank_ratio: 0.0,
            power_used: 0.0,
            status,
        }
    }

    /// Wraps a covariance, recovering the rank-one factor when present.
    pub(crate) fn from_covariance(
        w: HermitianMatrix,
        rate: f64,
        status: DesignStatus,
    ) -> Result<Self, DesignError> {
        let (beamformer, rank_ratio) = extract_beamformer(&w, 1e-4)?;
        // The optimum is rank one in exact arithmetic; once the spectrum
        // confirms it, return the clean outer product (same trace) rather
        // than the iterate with its residual eigenvalue dust. `rank_ratio`
        // keeps the pre-cleanup ratio as the tightness diagnostic.
        let w = match &beamformer {
            Some(v) => HermitianMatrix::from_outer(v),
            None => w,
        };
        let power_used = w.trace();
        Ok(TransmitDesign {
            w,
            beamformer,
            rate,
            rank_ratio,
            power_used,
            status,
        })
    }
}

/// Principal factor of a psd matrix: returns the eigenvalue ratio
/// lambda_2 / lambda_1 (0 when W = 0 or 1 x 1) and, iff that ratio is at
/// most `tol` and W is nonzero, the principal eigenvector scaled so its
/// squared norm equals Tr(W), phase-normalized for reproducibility.
pub fn extract_beamformer(
    w: &HermitianMatrix,
    tol: f64,
) -> Result<(Option<Vec<Cx>>, f64), DesignError> {
    if w.is_zero() {
        return Ok((None, 0.0));
    }
    let (vals, vecs) = hermitian_eig(w)?;
    let lead = vals[0];
    if lead <= 0.0 {
        return Ok((None, 0.0));
    }
    let second = vals.get(1).copied().unwrap_or(0.0).max(0.0);
    let ratio = second / lead;
    if ratio > tol {
        return Ok((None, ratio));
    }
    let scale = w.trace().max(0.0).sqrt();
    let mut v: Vec<Cx> = vecs.col(0).iter().map(|z| z * scale).collect();
    normalize_phase(&mut v);
    Ok((Some(v), ratio))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use hermitian_linalg::{outer, ComplexMatrix};

    fn herm(m: &ComplexMatrix) -> HermitianMatrix {
        HermitianMatrix::new(m).unwrap()
    }

    #[test]
    fn rank_one_input_recovers_its_factor() {
        let v = vec![Cx::new(1.0, 2.0), Cx::new(0.5, -0.5), Cx::new(0.0, 1.0)];
        let w = HermitianMatrix::from_outer(&v);
        let (beam, ratio) = extract_beamformer(&w, 1e-8).unwrap();
        assert!(ratio <= 1e-12);
        let beam = beam.expect("rank-one input must yield a factor");
        let rebuilt = outer(&beam, &beam);
        assert!(
            rebuilt.sub(w.as_matrix()).frobenius_norm() <= 1e-9 * w.trace(),
            "factor must reproduce the covariance"
        );
        let mut expected = v.clone();
        normalize_phase(&mut expected);
        for (a, b) in beam.iter().zip(&expected) {
            assert_abs_diff_eq!(a.re, b.re, epsilon = 1e-9);
            assert_abs_diff_eq!(a.im, b.im, epsilon = 1e-9);
        }
    }

    #[test]
    fn identity_has_no_factor() {
        let w = HermitianMatrix::identity(2);
        let (beam, ratio) = extract_beamformer(&w, 1e-4).unwrap();
        assert!(beam.is_none());
        assert_abs_diff_eq!(ratio, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn near_rank_one_ratio_is_the_eigenvalue_quotient() {
        let v = vec![Cx::new(2.0, 0.0), Cx::new(0.0, 1.0)];
        let mut m = outer(&v, &v);
        for i in 0..2 {
            m[(i, i)] += Cx::new(1e-6, 0.0);
        }
        let w = herm(&m);
        let (_, ratio) = extract_beamformer(&w, 1.0).unwrap();
        let expected = 1e-6 / (5.0 + 1e-6);
        assert_abs_diff_eq!(ratio, expected, epsilon = 1e-8);
    }

    #[test]
    fn zero_matrix_reports_zero_ratio() {
        let w = HermitianMatrix::zero(3);
        let (beam, ratio) = extract_beamformer(&w, 1e-4).unwrap();
        assert!(beam.is_none());
        assert_eq!(ratio, 0.0);
    }
}
