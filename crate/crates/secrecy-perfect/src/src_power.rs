//! Least transmit power meeting a secrecy-rate target.

use crate::design::{DesignStatus, TransmitDesign};
use crate::rate::rate_against;
use crate::vars::{effective_eves, expect_optimal, gram, psd_block, HermVarMap};
use crate::DesignError;
use channel_model::ChannelInstance;
use hermitian_linalg::HermitianMatrix;
use nalgebra::DMatrix;
use sdp_core::SdpProblem;

/// Minimizes Tr(W) over psd W subject to achieving secrecy rate
/// `rate_target` against every eavesdropper:
/// 1 + Tr(h h^H W) >= 2^R (1 + Tr(G_k G_k^H W)) for all k. At the optimum
/// the eavesdropper responses are rank one, so the scalar form of the rate
/// constraint is exact, and W itself is rank one.
///
/// A target of zero needs no transmission and returns the all-off design;
/// a target above the channel's achievable supremum returns
/// [`DesignError::Infeasible`] with the solver's certificate. The power
/// budget stored in `instance` does not constrain this problem.
pub fn solve_src(
    instance: &ChannelInstance,
    rate_target: f64,
    tol: f64,
) -> Result<TransmitDesign, DesignError> {
    if !rate_target.is_finite() || rate_target < 0.0 {
        return Err(DesignError::BadRate { rate: rate_target });
    }
    let n = instance.n_t();
    if rate_target == 0.0 {
        return Ok(TransmitDesign::zero(n, DesignStatus::ClosedForm));
    }
    let map = HermVarMap { offset: 0, n };
    let nvars = map.var_count();
    let mut objective = vec![0.0; nvars];
    for p in 0..n {
        objective[map.diag(p)] = 1.0;
    }
    let mut prob = SdpProblem::new(objective);
    let hh = HermitianMatrix::from_outer(instance.h());
    let pow2r = 2f64.powf(rate_target);
    for g in &effective_eves(instance) {
        let mut dense = vec![0.0; nvars];
        for (var, v) in map.trace_coeffs(&hh, 1.0) {
            dense[var] += v;
        }
        for (var, v) in map.trace_coeffs(&gram(g)?, -pow2r) {
            dense[var] += v;
        }
        let coeffs = dense
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(|(i, v)| (i, *v))
            .collect();
        prob.add_scalar_block(1.0 - pow2r, coeffs)?;
    }
    prob.add_block(
        psd_block(2 * n),
        DMatrix::zeros(2 * n, 2 * n),
        map.embedding_triplets(1.0, 0),
    )?;
    let sol = expect_optimal(sdp_core::solve(&prob, tol)?)?;
    let w = map.extract(&sol.x)?;
    let rate = rate_against(&w, instance.h(), instance.eves())?;
    TransmitDesign::from_covariance(w, rate, DesignStatus::Optimal)
}
