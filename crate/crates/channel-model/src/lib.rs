//! Scenario data for transmit-covariance secrecy designs.
//!
//! A [`ChannelInstance`] is a known (perfect-CSI) scenario: the intended
//! receiver's channel `h`, one matrix `G_k` per eavesdropper, and a transmit
//! power budget. An [`UncertaintySpec`] replaces the exact channels with ball
//! centers plus radii: the true channels live within `‖Δh‖ ≤ eps_b` and
//! `‖ΔG_k‖_F ≤ eps_e[k]` of the means. Noise variances are normalized to one
//! throughout, so powers are in noise units and `power_db` is relative to the
//! noise floor.
//!
//! Serialization is JSON with complex numbers as `[re, im]` pairs and
//! matrices as row-major nested arrays; see `schema` in the repository README
//! for the exact field layout. Decoded values round-trip bitwise.

mod io;
mod sample;

pub use io::{
    load_instance, load_uncertainty, save_instance, save_uncertainty, FileError,
};
pub use sample::{rng_stream, sample_channel, TrialRng};

use hermitian_linalg::{ComplexMatrix, Cx};

/// Errors for scenario validation.
#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("eavesdropper {index} has {got} rows, expected {expected}")]
    EveRowMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("power must be finite and positive, got {0} dB")]
    BadPower(f64),
    #[error("uncertainty radius must be finite and nonnegative, got {0}")]
    BadRadius(f64),
    #[error("{context}: non-finite entry")]
    NonFinite { context: &'static str },
    #[error("expected {expected} eavesdropper radii, got {got}")]
    RadiusCountMismatch { expected: usize, got: usize },
    #[error("channel must have at least one transmit antenna")]
    Empty,
}

/// A perfect-CSI scenario: Bob's channel, every Eve's channel, and the power
/// budget (stored in dB so file round-trips are bitwise).
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelInstance {
    h: Vec<Cx>,
    eves: Vec<ComplexMatrix>,
    power_db: f64,
}

impl ChannelInstance {
    pub fn new(h: Vec<Cx>, eves: Vec<ComplexMatrix>, power_db: f64) -> Result<Self, ModelError> {
        if h.is_empty() {
            return Err(ModelError::Empty);
        }
        if h.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(ModelError::NonFinite { context: "h" });
        }
        for (index, g) in eves.iter().enumerate() {
            if g.rows() != h.len() {
                return Err(ModelError::EveRowMismatch {
                    index,
                    got: g.rows(),
                    expected: h.len(),
                });
            }
            if g.find_non_finite().is_some() {
                return Err(ModelError::NonFinite { context: "eves" });
            }
        }
        if !power_db.is_finite() {
            return Err(ModelError::BadPower(power_db));
        }
        Ok(Self { h, eves, power_db })
    }

    /// Transmit antenna count N_t.
    pub fn n_t(&self) -> usize {
        self.h.len()
    }

    pub fn h(&self) -> &[Cx] {
        &self.h
    }

    pub fn eves(&self) -> &[ComplexMatrix] {
        &self.eves
    }

    pub fn num_eves(&self) -> usize {
        self.eves.len()
    }

    pub fn power_db(&self) -> f64 {
        self.power_db
    }

    /// Power budget on the linear scale.
    pub fn power(&self) -> f64 {
        db_to_linear(self.power_db)
    }

    /// Same channels with a different budget.
    pub fn with_power_db(&self, power_db: f64) -> Self {
        Self {
            power_db,
            ..self.clone()
        }
    }

    /// Same Bob channel, keeping only the first `k` eavesdroppers.
    pub fn truncate_eves(&self, k: usize) -> Self {
        Self {
            h: self.h.clone(),
            eves: self.eves[..k.min(self.eves.len())].to_vec(),
            power_db: self.power_db,
        }
    }

    /// Eves scaled entrywise by `factor` (Bob unchanged).
    pub fn scale_eves(&self, factor: f64) -> Self {
        Self {
            h: self.h.clone(),
            eves: self.eves.iter().map(|g| g.scale(factor)).collect(),
            power_db: self.power_db,
        }
    }
}

/// Spherical-uncertainty scenario: ball centers and radii.
#[derive(Debug, Clone, PartialEq)]
pub struct UncertaintySpec {
    h_bar: Vec<Cx>,
    g_bars: Vec<ComplexMatrix>,
    eps_b: f64,
    eps_e: Vec<f64>,
    power_db: f64,
}

impl UncertaintySpec {
    pub fn new(
        h_bar: Vec<Cx>,
        g_bars: Vec<ComplexMatrix>,
        eps_b: f64,
        eps_e: Vec<f64>,
        power_db: f64,
    ) -> Result<Self, ModelError> {
        // Dimension checks are shared with ChannelInstance.
        let nominal = ChannelInstance::new(h_bar, g_bars, power_db)?;
        if !eps_b.is_finite() || eps_b < 0.0 {
            return Err(ModelError::BadRadius(eps_b));
        }
        if eps_e.len() != nominal.num_eves() {
            return Err(ModelError::RadiusCountMismatch {
                expected: nominal.num_eves(),
                got: eps_e.len(),
            });
        }
        if let Some(&bad) = eps_e.iter().find(|&&e| !e.is_finite() || e < 0.0) {
            return Err(ModelError::BadRadius(bad));
        }
        let ChannelInstance { h, eves, power_db } = nominal;
        Ok(Self {
            h_bar: h,
            g_bars: eves,
            eps_b,
            eps_e,
            power_db,
        })
    }

    pub fn n_t(&self) -> usize {
        self.h_bar.len()
    }

    pub fn h_bar(&self) -> &[Cx] {
        &self.h_bar
    }

    pub fn g_bars(&self) -> &[ComplexMatrix] {
        &self.g_bars
    }

    pub fn num_eves(&self) -> usize {
        self.g_bars.len()
    }

    pub fn eps_b(&self) -> f64 {
        self.eps_b
    }

    pub fn eps_e(&self) -> &[f64] {
        &self.eps_e
    }

    pub fn power_db(&self) -> f64 {
        self.power_db
    }

    pub fn power(&self) -> f64 {
        db_to_linear(self.power_db)
    }

    /// The scenario at the ball centers (zero radii forgotten).
    pub fn nominal(&self) -> ChannelInstance {
        ChannelInstance {
            h: self.h_bar.clone(),
            eves: self.g_bars.clone(),
            power_db: self.power_db,
        }
    }
}

/// dB to linear scale: `10^(p/10)`.
pub fn db_to_linear(p_db: f64) -> f64 {
    10f64.powf(p_db / 10.0)
}

/// Uncertainty radii from relative ratios against the generator's ensemble
/// norms: for i.i.d. entries, `E‖h‖² = N_t` and `E‖G_k‖_F² = N_t·N_e·ρ_e²`,
/// so `eps_b = alpha_b·√N_t` and `eps_e[k] = alpha_e·√(N_t·N_e[k]·ρ_e²)`.
/// The expectations are used in closed form so radii are scenario constants,
/// comparable across Monte-Carlo trials.
pub fn uncertainty_from_ratios(
    means: &ChannelInstance,
    alpha_b: f64,
    alpha_e: f64,
    rho_e_sq: f64,
) -> Result<UncertaintySpec, ModelError> {
    for &a in &[alpha_b, alpha_e] {
        if !a.is_finite() || a < 0.0 {
            return Err(ModelError::BadRadius(a));
        }
    }
    let n_t = means.n_t() as f64;
    let eps_b = alpha_b * n_t.sqrt();
    let eps_e = means
        .eves()
        .iter()
        .map(|g| alpha_e * (n_t * g.cols() as f64 * rho_e_sq).sqrt())
        .collect();
    UncertaintySpec::new(
        means.h().to_vec(),
        means.eves().to_vec(),
        eps_b,
        eps_e,
        means.power_db(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn db_conversions() {
        assert_eq!(db_to_linear(0.0), 1.0);
        assert_eq!(db_to_linear(20.0), 100.0);
        assert!((db_to_linear(3.0) - 1.9952623149688795).abs() < 1e-12);
    }

    #[test]
    fn eve_row_mismatch_rejected() {
        let h = vec![Cx::new(1.0, 0.0); 3];
        let g = ComplexMatrix::zeros(2, 1);
        assert!(matches!(
            ChannelInstance::new(h, vec![g], 0.0),
            Err(ModelError::EveRowMismatch { index: 0, .. })
        ));
    }

    #[test]
    fn ratio_radii_closed_forms() {
        let h = vec![Cx::new(1.0, 0.0); 10];
        let g = ComplexMatrix::zeros(10, 3);
        let means = ChannelInstance::new(h, vec![g], 3.0).unwrap();
        let spec = uncertainty_from_ratios(&means, 0.03, 0.1, 1.0).unwrap();
        assert!((spec.eps_b() - 0.03 * 10f64.sqrt()).abs() < 1e-15);
        assert!((spec.eps_e()[0] - 0.1 * 30f64.sqrt()).abs() < 1e-15);

        let zero = uncertainty_from_ratios(&means, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(zero.eps_b(), 0.0);
        assert_eq!(zero.eps_e(), &[0.0]);
    }

    #[test]
    fn ratio_radii_are_homogeneous() {
        let h = vec![Cx::new(0.5, -0.5); 4];
        let g = ComplexMatrix::zeros(4, 2);
        let means = ChannelInstance::new(h, vec![g], 10.0).unwrap();
        let a = uncertainty_from_ratios(&means, 0.01, 0.07, 2.0).unwrap();
        let b = uncertainty_from_ratios(&means, 0.02, 0.14, 2.0).unwrap();
        assert_eq!(b.eps_b(), 2.0 * a.eps_b());
        assert_eq!(b.eps_e()[0], 2.0 * a.eps_e()[0]);
    }

    #[test]
    fn truncate_and_scale_helpers() {
        let h = vec![Cx::new(1.0, 0.0); 2];
        let g1 = ComplexMatrix::from_fn(2, 1, |_, _| Cx::new(2.0, 0.0));
        let g2 = ComplexMatrix::zeros(2, 2);
        let inst = ChannelInstance::new(h, vec![g1, g2], 0.0).unwrap();
        assert_eq!(inst.truncate_eves(1).num_eves(), 1);
        let scaled = inst.scale_eves(0.5);
        assert_eq!(scaled.eves()[0][(0, 0)].re, 1.0);
    }
}
