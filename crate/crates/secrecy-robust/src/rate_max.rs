//! Best guaranteed secrecy rate under a transmit-power budget.

use crate::design::{RobustDesign, RobustSlack};
use crate::lmi::{bob_srm_constraint, eve_srm_constraint};
use crate::src_power::{allocate_multipliers, effective_eves};
use crate::DesignError;
use channel_model::UncertaintySpec;
use hermitian_linalg::HermitianMatrix;
use nalgebra::DMatrix;
use secrecy_perfect::vars::{expect_optimal, psd_block, HermVarMap};
use sdp_core::SdpProblem;

/// Rates at or below this many bits count as zero and return the all-off
/// design; the optimal level variable never reaches its bound exactly.
const ZERO_RATE: f64 = 1e-9;

/// Maximizes the worst-case secrecy rate subject to Tr(W) <= P, W psd,
/// with every channel ranging over its uncertainty ball.
///
/// The same fractional substitution as the perfect-CSI solver applies:
/// with Z = xi W and the worst receiver response normalized to at least
/// one, the problem becomes a single semidefinite program in
/// (Z, xi, tau, multipliers): minimize tau subject to one receiver-ball
/// block, one block per eavesdropper ball, Tr(Z) <= xi P, Z psd, and
/// xi >= 0. Minimizing tau drives the normalization to equality, the best
/// guaranteed rate is -log2(tau*), and W = Z / xi recovers the covariance,
/// rank one at the optimum. A nonpositive guaranteed optimum returns the
/// all-off design with both rates zero.
pub fn solve_robust_srm(spec: &UncertaintySpec, tol: f64) -> Result<RobustDesign, DesignError> {
    let n = spec.n_t();
    let power = spec.power();
    let map = HermVarMap { offset: 0, n };
    let xi = map.var_count();
    let tau = xi + 1;
    let eves = effective_eves(spec);
    let (lambda_b, lambda_e, nvars) = allocate_multipliers(spec.eps_b(), &eves, tau + 1);

    let mut objective = vec![0.0; nvars];
    objective[tau] = 1.0;
    let mut prob = SdpProblem::new(objective);
    bob_srm_constraint(&map, spec.h_bar(), spec.eps_b(), lambda_b, xi).add_to(&mut prob)?;
    for ((gb, eps), lam) in eves.iter().zip(&lambda_e) {
        eve_srm_constraint(&map, gb, *eps, *lam, xi, tau)?.add_to(&mut prob)?;
    }
    // xi P - Tr(Z) >= 0.
    let mut power_coeffs = map.trace_coeffs(&HermitianMatrix::identity(n), -1.0);
    power_coeffs.push((xi, power));
    prob.add_scalar_block(0.0, power_coeffs)?;
    prob.add_scalar_block(0.0, vec![(xi, 1.0)])?;
    for lam in lambda_b.iter().chain(lambda_e.iter().flatten()) {
        prob.add_scalar_block(0.0, vec![(*lam, 1.0)])?;
    }
    prob.add_block(
        psd_block(2 * n),
        DMatrix::zeros(2 * n, 2 * n),
        map.embedding_triplets(1.0, 0),
    )?;

    let mut sol = expect_optimal(sdp_core::solve(&prob, tol)?)?;
    // Deciding whether the optimum is the all-off design compares the rate
    // against a 1e-9-bit threshold, which a loose solve cannot resolve: the
    // objective error is a small multiple of the achieved gap. When the
    // first pass lands near the threshold, re-solve tight and trust that
    // answer if its own gap certifies enough accuracy.
    const CONFIRM_TOL: f64 = 1e-10;
    if tol > CONFIRM_TOL && -sol.x[tau].log2() <= 1e-6_f64.max(30.0 * tol) {
        if let Ok(confirm) = sdp_core::solve(&prob, CONFIRM_TOL) {
            let usable = match confirm.status {
                sdp_core::SdpStatus::Optimal => true,
                sdp_core::SdpStatus::SlowProgress => confirm.duality_gap <= 1e-9,
                _ => false,
            };
            if usable {
                sol = confirm;
            }
        }
    }
    let xi_star = sol.x[xi];
    let tau_star = sol.x[tau];
    let lambda_b_val = lambda_b.map_or(0.0, |i| sol.x[i]);
    let lambda_e_vals: Vec<f64> = lambda_e
        .iter()
        .take(spec.num_eves())
        .map(|lam| lam.map_or(0.0, |i| sol.x[i]))
        .collect();
    let slack = RobustSlack::RateMax {
        xi: xi_star,
        tau: tau_star,
    };
    let rate = -tau_star.log2();
    if rate <= ZERO_RATE {
        return Ok(RobustDesign::zero(spec, lambda_b_val, lambda_e_vals, slack));
    }
    if xi_star <= 1e-12 {
        return Err(DesignError::Internal {
            detail: format!("fractional scaling variable collapsed to {xi_star}"),
        });
    }
    let w_raw = map.extract(&sol.x)?.scale(1.0 / xi_star);
    RobustDesign::from_covariance(
        w_raw,
        spec,
        Some(rate),
        lambda_b_val,
        lambda_e_vals,
        slack,
    )
}
