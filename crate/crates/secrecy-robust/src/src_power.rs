//! Least transmit power meeting a worst-case secrecy-rate target.

use crate::design::{RobustDesign, RobustSlack};
use crate::lmi::{bob_src_constraint, eve_src_constraint};
use crate::DesignError;
use channel_model::UncertaintySpec;
use hermitian_linalg::ComplexMatrix;
use nalgebra::DMatrix;
use secrecy_perfect::vars::{expect_optimal, psd_block, HermVarMap};
use sdp_core::SdpProblem;

/// Eavesdropper centers and radii, with a zero stand-in when the scenario
/// has none so every design model keeps at least one rate constraint.
pub(crate) fn effective_eves(spec: &UncertaintySpec) -> Vec<(ComplexMatrix, f64)> {
    if spec.num_eves() == 0 {
        vec![(ComplexMatrix::zeros(spec.n_t(), 1), 0.0)]
    } else {
        spec.g_bars()
            .iter()
            .cloned()
            .zip(spec.eps_e().iter().copied())
            .collect()
    }
}

/// Multiplier indices for the ball constraints: one fresh variable per
/// positive radius, none for zero radii, starting at `next`.
pub(crate) fn allocate_multipliers(
    eps_b: f64,
    eves: &[(ComplexMatrix, f64)],
    mut next: usize,
) -> (Option<usize>, Vec<Option<usize>>, usize) {
    let lambda_b = (eps_b > 0.0).then(|| {
        let i = next;
        next += 1;
        i
    });
    let lambda_e = eves
        .iter()
        .map(|(_, eps)| {
            (*eps > 0.0).then(|| {
                let i = next;
                next += 1;
                i
            })
        })
        .collect();
    (lambda_b, lambda_e, next)
}

/// Minimizes Tr(W) over psd W subject to a guaranteed secrecy rate of
/// `rate_target` for every receiver channel within `eps_b` of the center
/// and every eavesdropper matrix within its own radius:
/// 1 + h^H W h >= theta and 1 + Tr(G_k^H W G_k) <= 2^(-R) theta hold on
/// the balls through one matrix inequality each, with the slack theta
/// splitting the target between the two sides. At the optimum W is rank
/// one, which also makes the scalar leakage form exact.
///
/// The target must be positive; radii so large that the receiver ball
/// contains the zero channel make any positive target infeasible, reported
/// with the solver's certificate. The power budget stored in `spec` does
/// not constrain this problem.
pub fn solve_robust_src(
    spec: &UncertaintySpec,
    rate_target: f64,
    tol: f64,
) -> Result<RobustDesign, DesignError> {
    if !rate_target.is_finite() || rate_target <= 0.0 {
        return Err(DesignError::BadRate { rate: rate_target });
    }
    let n = spec.n_t();
    let map = HermVarMap { offset: 0, n };
    let theta = map.var_count();
    let eves = effective_eves(spec);
    let (lambda_b, lambda_e, nvars) = allocate_multipliers(spec.eps_b(), &eves, theta + 1);

    let mut objective = vec![0.0; nvars];
    for p in 0..n {
        objective[map.diag(p)] = 1.0;
    }
    let mut prob = SdpProblem::new(objective);
    bob_src_constraint(&map, spec.h_bar(), spec.eps_b(), lambda_b, theta).add_to(&mut prob)?;
    for ((gb, eps), lam) in eves.iter().zip(&lambda_e) {
        eve_src_constraint(&map, gb, *eps, rate_target, *lam, theta)?.add_to(&mut prob)?;
    }
    prob.add_block(
        psd_block(2 * n),
        DMatrix::zeros(2 * n, 2 * n),
        map.embedding_triplets(1.0, 0),
    )?;
    for lam in lambda_b.iter().chain(lambda_e.iter().flatten()) {
        prob.add_scalar_block(0.0, vec![(*lam, 1.0)])?;
    }

    let sol = expect_optimal(sdp_core::solve(&prob, tol)?)?;
    let w_raw = map.extract(&sol.x)?;
    let lambda_b_val = lambda_b.map_or(0.0, |i| sol.x[i]);
    let lambda_e_vals = lambda_e
        .iter()
        .take(spec.num_eves())
        .map(|lam| lam.map_or(0.0, |i| sol.x[i]))
        .collect();
    RobustDesign::from_covariance(
        w_raw,
        spec,
        None,
        lambda_b_val,
        lambda_e_vals,
        RobustSlack::PowerMin {
            theta: sol.x[theta],
        },
    )
}
