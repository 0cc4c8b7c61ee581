//! Robust design result type.

use crate::DesignError;
use channel_model::UncertaintySpec;
use hermitian_linalg::{Cx, HermitianMatrix};
use secrecy_perfect::{extract_beamformer, secrecy_rate, DesignStatus};

/// Auxiliary decision variables reported alongside a robust design.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RobustSlack {
    /// Power minimization: the rate target splits as
    /// 1 + (worst receiver response) >= theta and
    /// 1 + (worst eavesdropper response) <= 2^(-R) theta.
    PowerMin { theta: f64 },
    /// Rate maximization: scale xi of the fractional substitution and the
    /// objective value tau, with worst-case rate -log2(tau).
    RateMax { xi: f64, tau: f64 },
}

/// A transmit covariance with its guarantee over the uncertainty balls.
#[derive(Debug, Clone)]
pub struct RobustDesign {
    /// Transmit covariance, positive semidefinite; exactly the outer
    /// product of `beamformer` whenever that factor is present.
    pub w: HermitianMatrix,
    /// Rank-one factor with squared norm Tr(W); present for every nonzero
    /// covariance returned by the solvers here.
    pub beamformer: Option<Vec<Cx>>,
    /// Secrecy rate at the ball-center channels, bits/s/Hz.
    pub rate: f64,
    /// Guaranteed secrecy rate over every channel in the balls, bits/s/Hz.
    pub worst_case_rate: f64,
    /// Second-to-first eigenvalue ratio of the solver's covariance iterate
    /// (0 for W = 0).
    pub rank_ratio: f64,
    /// Tr(W).
    pub power_used: f64,
    /// Multiplier certifying the receiver-ball constraint; 0 when the
    /// receiver radius is zero (constraint enforced exactly instead).
    pub lambda_b: f64,
    /// Multipliers certifying each eavesdropper-ball constraint, in
    /// eavesdropper order; 0 entries for zero-radius balls.
    pub lambda_e: Vec<f64>,
    /// Remaining decision variables of the solved program.
    pub slack: RobustSlack,
    pub status: DesignStatus,
}

impl RobustDesign {
    /// The all-off design: no transmission, both rates zero.
    pub(crate) fn zero(
        spec: &UncertaintySpec,
        lambda_b: f64,
        lambda_e: Vec<f64>,
        slack: RobustSlack,
    ) -> Self {
        RobustDesign {
            w: HermitianMatrix::zero(spec.n_t()),
            beamformer: None,
            rate: 0.0,
            worst_case_rate: 0.0,
            rank_ratio: 0.0,
            power_used: 0.0,
            lambda_b,
            lambda_e,
            slack,
            status: DesignStatus::Optimal,
        }
    }

    /// Wraps a solver covariance: recovers the rank-one factor, replaces
    /// the iterate by its exact outer product, and fills both rate fields.
    /// `worst_case_rate` of `None` means evaluate it from the cleaned
    /// covariance. The robust guarantee is only valid at rank one, so a
    /// nonzero covariance without a factor is a solver anomaly.
    pub(crate) fn from_covariance(
        w_raw: HermitianMatrix,
        spec: &UncertaintySpec,
        worst_case_rate: Option<f64>,
        lambda_b: f64,
        lambda_e: Vec<f64>,
        slack: RobustSlack,
    ) -> Result<Self, DesignError> {
        let (beamformer, rank_ratio) = extract_beamformer(&w_raw, 1e-4)?;
        let w = match &beamformer {
            Some(v) => HermitianMatrix::from_outer(v),
            None if w_raw.is_zero() => w_raw,
            None => {
                return Err(DesignError::Internal {
                    detail: format!(
                        "robust optimum has eigenvalue ratio {rank_ratio:e}; \
                         its ball guarantee needs a rank-one covariance"
                    ),
                })
            }
        };
        let rate = secrecy_rate(&w, &spec.nominal())?;
        let worst_case_rate = match worst_case_rate {
            Some(v) => v,
            None => crate::worst_case_secrecy_rate(&w, spec)?,
        };
        let power_used = w.trace();
        Ok(RobustDesign {
            w,
            beamformer,
            rate,
            worst_case_rate,
            rank_ratio,
            power_used,
            lambda_b,
            lambda_e,
            slack,
            status: DesignStatus::Optimal,
        })
    }
}
