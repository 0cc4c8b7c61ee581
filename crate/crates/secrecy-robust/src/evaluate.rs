//! Worst-case secrecy rate of a fixed rank-one covariance.

use crate::lmi::{bob_eval_lmi, eve_eval_lmi};
use crate::DesignError;
use channel_model::UncertaintySpec;
use hermitian_linalg::{cdot, norm, Cx, HermitianMatrix};
use secrecy_perfect::extract_beamformer;
use secrecy_perfect::vars::expect_optimal;
use sdp_core::SdpProblem;

/// Internal tolerance for the evaluator's small solves; their variable
/// count is independent of the channel dimensions.
const EVAL_TOL: f64 = 1e-8;

/// Worst-case secrecy rate of the covariance `w` over the uncertainty
/// balls of `spec`, in bits/s/Hz.
///
/// For rank-one W the worst case splits: the receiver response is
/// minimized and each eavesdropper response maximized independently, each
/// over its own ball, so the value is log2(tau1) - log2(tau2) with tau1
/// the smallest 1 + h^H W h, tau2 the largest 1 + Tr(G_k^H W G_k) over
/// all eavesdroppers, both found by one small program per ball (zero-radius
/// balls contribute their center value directly). The split needs the
/// leakage term in scalar form, exact only at rank one, so covariances
/// with a second-to-first eigenvalue ratio above 1e-4 are refused; the
/// all-off covariance evaluates to zero.
pub fn worst_case_secrecy_rate(
    w: &HermitianMatrix,
    spec: &UncertaintySpec,
) -> Result<f64, DesignError> {
    if w.dim() != spec.n_t() {
        return Err(DesignError::DimensionMismatch {
            expected: spec.n_t(),
            got: w.dim(),
        });
    }
    if w.is_zero() {
        return Ok(0.0);
    }
    let (beam, ratio) = extract_beamformer(w, 1e-4)?;
    if beam.is_none() {
        return Err(DesignError::NotRankOne { ratio });
    }
    let tau1 = smallest_receiver_response(w, spec)?;
    let tau2 = largest_eavesdropper_response(w, spec)?;
    Ok(tau1.log2() - tau2.log2())
}

/// min of 1 + h^H W h over the receiver ball; at least 1 since W is psd.
fn smallest_receiver_response(
    w: &HermitianMatrix,
    spec: &UncertaintySpec,
) -> Result<f64, DesignError> {
    if spec.eps_b() == 0.0 {
        return Ok(1.0 + w.quadratic_form(spec.h_bar()));
    }
    // Maximize tau1 (variable 0) with multiplier lambda (variable 1).
    let mut prob = SdpProblem::new(vec![-1.0, 0.0]);
    bob_eval_lmi(w, spec.h_bar(), spec.eps_b(), 0, 1).add_to(&mut prob)?;
    prob.add_scalar_block(0.0, vec![(1, 1.0)])?;
    let sol = expect_optimal(sdp_core::solve(&prob, EVAL_TOL)?)?;
    Ok(sol.x[0])
}

/// max of 1 + Tr(G_k^H W G_k) over every eavesdropper ball; 1 with no
/// eavesdroppers.
fn largest_eavesdropper_response(
    w: &HermitianMatrix,
    spec: &UncertaintySpec,
) -> Result<f64, DesignError> {
    let mut worst = 1.0f64;
    for (gb, &eps) in spec.g_bars().iter().zip(spec.eps_e()) {
        let response = if eps == 0.0 {
            let wg = w.as_matrix().mul(gb);
            1.0 + gb.adjoint().mul(&wg).trace().re
        } else {
            // Minimize tau2 (variable 0) with multiplier lambda (variable 1).
            let mut prob = SdpProblem::new(vec![1.0, 0.0]);
            eve_eval_lmi(w, gb, eps, 0, 1).add_to(&mut prob)?;
            prob.add_scalar_block(0.0, vec![(1, 1.0)])?;
            let sol = expect_optimal(sdp_core::solve(&prob, EVAL_TOL)?)?;
            sol.x[0]
        };
        worst = worst.max(response);
    }
    Ok(worst)
}

/// Worst-case secrecy rate of the beamformer `w` (covariance w w^H) in
/// closed form: on each ball the extreme channel aligns with the beam, so
/// the receiver keeps (|hb^H w| - eps_b |w|)^2 of its response (clipped at
/// zero) while eavesdropper k gains up to (|Gb_k^H w| + eps_k |w|)^2.
/// Serves as an independent cross-check of [`worst_case_secrecy_rate`].
pub fn closed_form_worst_case_rate(
    w: &[Cx],
    spec: &UncertaintySpec,
) -> Result<f64, DesignError> {
    if w.len() != spec.n_t() {
        return Err(DesignError::DimensionMismatch {
            expected: spec.n_t(),
            got: w.len(),
        });
    }
    let wn = norm(w);
    if wn == 0.0 {
        return Ok(0.0);
    }
    let kept = (cdot(spec.h_bar(), w).norm() - spec.eps_b() * wn).max(0.0);
    let receiver = 1.0 + kept * kept;
    let mut leak = 1.0f64;
    for (gb, &eps) in spec.g_bars().iter().zip(spec.eps_e()) {
        let reach = norm(&gb.adjoint_mul_vec(w)) + eps * wn;
        leak = leak.max(1.0 + reach * reach);
    }
    Ok(receiver.log2() - leak.log2())
}

/// Fraction of (design, scenario) pairs whose worst-case secrecy rate is
/// nonnegative, tolerating 1e-9 of solver slack below zero. The ensemble
/// must be nonempty and the slices must pair up; every design must be
/// rank one or all-off.
pub fn nonneg_rate_probability(
    designs: &[HermitianMatrix],
    specs: &[UncertaintySpec],
) -> Result<f64, DesignError> {
    if designs.is_empty() || designs.len() != specs.len() {
        return Err(DesignError::DimensionMismatch {
            expected: specs.len().max(1),
            got: designs.len(),
        });
    }
    let mut hits = 0usize;
    for (w, spec) in designs.iter().zip(specs) {
        if worst_case_secrecy_rate(w, spec)? >= -1e-9 {
            hits += 1;
        }
    }
    Ok(hits as f64 / designs.len() as f64)
}
