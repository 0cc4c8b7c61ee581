//! Block-structured semidefinite programming over linear matrix
//! inequalities.
//!
//! A problem is
//!
//!   minimize    c . x
//!   subject to  F_0 + sum_i x_i F_i  psd   (one LMI per cone block)
//!               A x = b
//!
//! with x a free real vector and every block either a real symmetric PSD
//! cone or a nonnegative scalar (a 1x1 PSD block; the solver treats the two
//! uniformly). Complex Hermitian constraints are expected to arrive already
//! real-embedded. The solver is an infeasible-start primal-dual
//! path-following method with Nesterov-Todd scaling and a Mehrotra
//! predictor-corrector step; it reports rigorous infeasibility and
//! unboundedness certificates instead of guessing from stagnation.
//!
//! The dual, used throughout for gaps and certificates:
//!
//!   maximize    b . nu - <F_0, X>
//!   subject to  sum_j <F_i^(j), X_j> + (A^T nu)_i = c_i,   X_j psd.

mod ipm;
mod problem;
mod verify;

pub use ipm::solve;
pub use problem::{BlockCoeffs, BlockKind, ConeBlockSpec, MatrixTriplets, SdpProblem};
pub use verify::{verify_solution, CertificateCheck, VerifyReport};

use nalgebra::DMatrix;

#[derive(Debug, thiserror::Error)]
pub enum SdpError {
    #[error("tolerance {tol:e} outside the supported range [1e-10, 1e-4]")]
    BadTolerance { tol: f64 },
    #[error("problem has no decision variables")]
    NoVariables,
    #[error("problem has no cone blocks")]
    NoBlocks,
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },
    #[error("block {block}: dimension {got} does not match declared {declared}")]
    BlockDimMismatch {
        block: usize,
        declared: usize,
        got: usize,
    },
    #[error("nonnegative-scalar block {block} must have dimension 1, got {dim}")]
    ScalarBlockNotOneDim { block: usize, dim: usize },
    #[error("block {block}: coefficient for variable {var} is not symmetric")]
    AsymmetricCoefficient { block: usize, var: usize },
    #[error("block {block}: constant term is not symmetric")]
    AsymmetricConstant { block: usize },
    #[error("block {block}: variable index {var} out of range ({num_vars} variables)")]
    VarOutOfRange {
        block: usize,
        var: usize,
        num_vars: usize,
    },
    #[error("block {block}: entry index ({row}, {col}) outside dimension {dim}")]
    EntryOutOfRange {
        block: usize,
        row: usize,
        col: usize,
        dim: usize,
    },
    #[error("block {block}: variable {var} listed twice")]
    DuplicateVariable { block: usize, var: usize },
    #[error("variable {var} appears in no cone block; the Newton system would be singular")]
    UnconstrainedVariable { var: usize },
    #[error("equality {index} has {got} coefficients for {num_vars} variables")]
    EqualityLenMismatch {
        index: usize,
        got: usize,
        num_vars: usize,
    },
}

/// Terminal state of a solve call. Anything other than `Optimal` carries its
/// evidence: certificates for the infeasible statuses, the last iterate for
/// slow progress.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdpStatus {
    Optimal,
    PrimalInfeasible,
    DualInfeasibleOrUnbounded,
    SlowProgress,
}

/// Improving-ray evidence attached to an infeasible or unbounded outcome.
#[derive(Debug, Clone)]
pub enum Certificate {
    /// Dual ray (X, nu): X psd, sum_j <F_i, X_j> + (A^T nu)_i ~ 0, and
    /// b.nu - <F_0, X> >= violation > 0, so no primal-feasible x exists.
    PrimalInfeasible {
        dual_ray: Vec<DMatrix<f64>>,
        eq_ray: Vec<f64>,
        violation: f64,
    },
    /// Primal ray d: sum_i d_i F_i psd per block, A d ~ 0, and
    /// c.d <= -improvement < 0, so the primal is unbounded below whenever it
    /// is feasible at all.
    DualInfeasible {
        primal_ray: Vec<f64>,
        improvement: f64,
    },
}

#[derive(Debug, Clone)]
pub struct SdpSolution {
    pub status: SdpStatus,
    pub x: Vec<f64>,
    /// Primal slack S_j per block at the returned x.
    pub block_values: Vec<DMatrix<f64>>,
    /// Dual matrix X_j per block.
    pub dual_values: Vec<DMatrix<f64>>,
    /// Dual multipliers for the equality rows.
    pub dual_eq: Vec<f64>,
    pub objective: f64,
    pub dual_objective: f64,
    /// Relative complementarity gap sum_j <X_j, S_j> / (1 + mean |objective|).
    pub duality_gap: f64,
    pub iterations: usize,
    pub certificate: Option<Certificate>,
}
