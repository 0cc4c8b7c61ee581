//! Independent reference checks for the secrecy designs.
//!
//! Everything in this crate deliberately avoids the solver stack: the grid
//! search walks rank-one beamformers directly, the determinant inequality is
//! checked through eigenvalues, and the worst-case sampler perturbs channels
//! inside the uncertainty balls by brute force. Tests elsewhere compare
//! optimizer output against these slower but independently-derived values.

mod ball;
mod brute;
mod lemma;

pub use ball::sample_worst_case;
pub use brute::brute_force_srm;
#[cfg(feature = "parallel")]
pub use brute::brute_force_srm_parallel;
pub use brute::brute_force_srm_sequential;
pub use lemma::{lemma1_check, Lemma1Report};

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    /// The beamformer grid search enumerates directions on the complex unit
    /// sphere in dimension two only; higher dimensions cost too much for the
    /// assurance they add.
    #[error("grid search supports exactly two transmit antennas, got {n_t}")]
    Unsupported { n_t: usize },
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})")]
    Indefinite { min_eig: f64 },
    #[error(transparent)]
    Linalg(#[from] hermitian_linalg::LinalgError),
}
