//! Worst-case robust transmit-covariance design when every channel is
//! known only up to a norm ball: the receiver channel lies within
//! Frobenius distance eps_b of its estimate h_bar, and each eavesdropper
//! matrix within eps_e[k] of G_bar_k. A design is judged by its worst-case
//! secrecy rate over all admissible channels,
//!
//!   psi(W) = min over the balls of
//!            [ log2(1 + h^H W h) - log2 det(I + G_k^H W G_k) ],
//!
//! in bits/s/Hz at unit noise power.
//!
//! The ball-robust rate constraints are semi-infinite; each becomes one
//! linear matrix inequality in the design variables through a quadratic
//! implication argument with a nonnegative multiplier, which is exact here
//! because every ball has an interior point whenever its radius is
//! positive. Zero-radius channels skip the multiplier entirely and keep
//! the exact center-channel constraint.
//!
//! Provided designs and evaluations:
//! - [`solve_robust_src`]: minimize transmit power subject to a worst-case
//!   rate target;
//! - [`solve_robust_srm`]: maximize the worst-case rate under a power
//!   budget, via the same fractional substitution as the perfect-CSI
//!   solver; both return rank-one covariances;
//! - [`worst_case_secrecy_rate`]: evaluate psi for a given rank-one
//!   covariance by solving one small program per ball;
//! - [`closed_form_worst_case_rate`]: the same value analytically from
//!   boundary alignment, as an independent cross-check;
//! - [`nonneg_rate_probability`]: fraction of an ensemble whose worst-case
//!   rate is nonnegative.

mod design;
mod evaluate;
mod lmi;
mod rate_max;
mod src_power;

pub use design::{RobustDesign, RobustSlack};
pub use evaluate::{closed_form_worst_case_rate, nonneg_rate_probability, worst_case_secrecy_rate};
pub use rate_max::solve_robust_srm;
pub use secrecy_perfect::{DesignError, DesignStatus};
pub use src_power::solve_robust_src;
