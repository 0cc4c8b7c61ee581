//! Analytic designs: the single-eavesdropper optimum and two beamforming
//! baselines.

use crate::design::{DesignStatus, TransmitDesign};
use crate::rate::{rate_against, secrecy_rate};
use crate::vars::gram;
use crate::DesignError;
use channel_model::ChannelInstance;
use hermitian_linalg::{
    norm, orthogonal_complement_projector, principal_generalized_eigvec, ComplexMatrix, Cx,
    HermitianMatrix,
};

/// Optimal design against a single eavesdropper, no solver involved.
///
/// The best covariance is rank one along the unit vector q maximizing the
/// response ratio (1 + P |q^H h|^2) / (1 + P ||G^H q||^2), which is the
/// principal generalized eigenvector of the pair (I + P h h^H, I + P G G^H).
/// When even that direction leaks more than it delivers, transmitting
/// nothing is optimal and the all-off design is returned.
pub fn one_eve_closed_form(
    h: &[Cx],
    g: &ComplexMatrix,
    power: f64,
) -> Result<TransmitDesign, DesignError> {
    if h.is_empty() || g.rows() != h.len() {
        return Err(DesignError::DimensionMismatch {
            expected: h.len().max(1),
            got: g.rows(),
        });
    }
    if !(power.is_finite() && power > 0.0) {
        return Err(DesignError::BadPower { power });
    }
    let n = h.len();
    let a = HermitianMatrix::identity(n).add(&HermitianMatrix::from_outer(h).scale(power));
    let b = HermitianMatrix::identity(n).add(&gram(g)?.scale(power));
    let q = principal_generalized_eigvec(&a, &b)?;
    let scaled: Vec<Cx> = q.iter().map(|z| z * power.sqrt()).collect();
    let w = HermitianMatrix::from_outer(&scaled);
    let rate = rate_against(&w, h, std::slice::from_ref(g))?;
    if rate <= 0.0 {
        return Ok(TransmitDesign::zero(n, DesignStatus::ClosedForm));
    }
    TransmitDesign::from_covariance(w, rate, DesignStatus::ClosedForm)
}

/// Full-power beamforming along the receiver channel projected away from
/// every eavesdropper dimension, so nothing leaks at all. When the
/// eavesdroppers span the whole transmit space there is no such direction
/// and the all-off design is returned.
pub fn projected_mrt(instance: &ChannelInstance) -> Result<TransmitDesign, DesignError> {
    let n = instance.n_t();
    let refs: Vec<&ComplexMatrix> = instance.eves().iter().collect();
    let aggregate = if refs.is_empty() {
        ComplexMatrix::zeros(n, 1)
    } else {
        ComplexMatrix::hcat(&refs)
    };
    let pi = orthogonal_complement_projector(&aggregate)?;
    let projected = pi.as_matrix().mul_vec(instance.h());
    let pn = norm(&projected);
    if pn <= 1e-10 {
        return Ok(TransmitDesign::zero(n, DesignStatus::ClosedForm));
    }
    let scale = instance.power().sqrt() / pn;
    let w_vec: Vec<Cx> = projected.iter().map(|z| z * scale).collect();
    let w = HermitianMatrix::from_outer(&w_vec);
    let rate = secrecy_rate(&w, instance)?;
    TransmitDesign::from_covariance(w, rate, DesignStatus::ClosedForm)
}

/// Full-power beamforming straight along the receiver channel, ignoring
/// the eavesdroppers; the all-off design when that achieves nothing.
pub fn plain_mrt(instance: &ChannelInstance) -> Result<TransmitDesign, DesignError> {
    let n = instance.n_t();
    let hn = norm(instance.h());
    if hn <= 1e-12 {
        return Ok(TransmitDesign::zero(n, DesignStatus::ClosedForm));
    }
    let scale = instance.power().sqrt() / hn;
    let w_vec: Vec<Cx> = instance.h().iter().map(|z| z * scale).collect();
    let w = HermitianMatrix::from_outer(&w_vec);
    let rate = secrecy_rate(&w, instance)?;
    if rate <= 0.0 {
        return Ok(TransmitDesign::zero(n, DesignStatus::ClosedForm));
    }
    TransmitDesign::from_covariance(w, rate, DesignStatus::ClosedForm)
}
