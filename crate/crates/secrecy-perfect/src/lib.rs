//! Transmit-covariance design for a multi-antenna transmitter sending to a
//! single-antenna receiver while multiple multi-antenna eavesdroppers
//! listen, with all channels exactly known.
//!
//! The figure of merit for a covariance W is the worst-case secrecy rate
//!
//!   min over k of [ log2(1 + h^H W h) - log2 det(I + G_k^H W G_k) ]
//!
//! in bits/s/Hz, where h is the receiver channel and G_k the k-th
//! eavesdropper's channel matrix, both at unit noise power.
//!
//! Provided designs and evaluations:
//! - [`secrecy_rate`]: evaluate the rate of a given covariance;
//! - [`solve_srm`]: maximize the rate under a transmit-power budget, via a
//!   fractional-program substitution that yields a single semidefinite
//!   program whose optimum is attained by a rank-one covariance;
//! - [`solve_src`]: minimize transmit power subject to a target rate;
//! - [`solve_srm_bisection`]: the same maximization via bisection on the
//!   achievable-rate level, as an independent cross-check of `solve_srm`;
//! - [`one_eve_closed_form`]: the single-eavesdropper analytic solution
//!   through a generalized eigenvector;
//! - [`projected_mrt`] and [`plain_mrt`]: beamforming baselines that null
//!   the eavesdroppers or ignore them entirely;
//! - [`extract_beamformer`]: rank-one factor recovery from a covariance.
//!
//! All solvers run on the real symmetric-cone solver in `sdp-core` through
//! the complex-to-real embedding from `hermitian-linalg`.

mod closed_form;
mod design;
mod rate;
mod rate_max;
mod src_power;
pub mod vars;

pub use closed_form::{one_eve_closed_form, plain_mrt, projected_mrt};
pub use design::{extract_beamformer, DesignStatus, TransmitDesign};
pub use rate::secrecy_rate;
pub use rate_max::{solve_srm, solve_srm_bisection};
pub use src_power::solve_src;

use hermitian_linalg::LinalgError;
use sdp_core::{Certificate, SdpError};

/// Errors reported by the design layer.
#[derive(Debug, thiserror::Error)]
pub enum DesignError {
    /// A covariance or channel dimension does not match the instance.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// The rate target must be finite and nonnegative.
    #[error("rate target {rate} is not a finite nonnegative number")]
    BadRate { rate: f64 },
    /// Power must be finite and positive.
    #[error("power {power} is not a finite positive number")]
    BadPower { power: f64 },
    /// A tolerance argument is outside its supported range.
    #[error("tolerance {tol} is not usable")]
    BadTolerance { tol: f64 },
    /// The operation is defined only for rank-one covariances; the ratio is
    /// the second-to-first eigenvalue quotient that exceeded the gate.
    #[error("covariance is not rank one: eigenvalue ratio {ratio:e}")]
    NotRankOne { ratio: f64 },
    /// The requested target cannot be met on this channel; the certificate
    /// is the solver's improving-ray evidence.
    #[error("the requested target is infeasible for this channel")]
    Infeasible { certificate: Box<Certificate> },
    /// The solver stopped without reaching its tolerance.
    #[error("solver made no further progress after {iterations} iterations")]
    SlowProgress { iterations: usize },
    /// A structural assumption failed; indicates a bug, not bad input.
    #[error("internal inconsistency: {detail}")]
    Internal { detail: String },
    #[error(transparent)]
    Solver(#[from] SdpError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
