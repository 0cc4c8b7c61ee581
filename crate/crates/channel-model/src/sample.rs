//! Seeded random channel generation.
//!
//! Entries are i.i.d. circularly symmetric complex Gaussians: two independent
//! real normals scaled by √(variance/2). Streams with the same seed but
//! different stream ids are independent, which is how parallel Monte-Carlo
//! trials stay reproducible regardless of scheduling.

use crate::{ChannelInstance, ModelError};
use hermitian_linalg::{ComplexMatrix, Cx};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Identifies one reproducible random stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialRng {
    pub seed: u64,
    pub stream_id: u64,
}

impl TrialRng {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        Self { seed, stream_id }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        rng_stream(self.seed, self.stream_id)
    }
}

/// ChaCha stream addressed by (seed, stream id). Identical arguments always
/// reproduce identical draws.
pub fn rng_stream(seed: u64, stream_id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id);
    rng
}

fn complex_gaussian(rng: &mut ChaCha8Rng, variance: f64) -> Cx {
    let scale = (variance / 2.0).sqrt();
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Cx::new(re * scale, im * scale)
}

/// Draw a scenario: Bob entries at unit variance, Eve entries at variance
/// `rho_e_sq`. The power budget is not part of the draw; the returned
/// instance carries 0 dB and callers set it via [`ChannelInstance::with_power_db`].
///
/// Draw order is fixed (h first, then each Eve in row-major order), so a
/// prefix of `eve_dims` yields a prefix of the same Eve set.
pub fn sample_channel(
    rng: &mut ChaCha8Rng,
    n_t: usize,
    eve_dims: &[usize],
    rho_e_sq: f64,
) -> Result<ChannelInstance, ModelError> {
    if n_t == 0 {
        return Err(ModelError::Empty);
    }
    if !(rho_e_sq.is_finite() && rho_e_sq > 0.0) {
        return Err(ModelError::BadRadius(rho_e_sq));
    }
    let h: Vec<Cx> = (0..n_t).map(|_| complex_gaussian(rng, 1.0)).collect();
    let eves = eve_dims
        .iter()
        .map(|&ne| {
            let data: Vec<Cx> = (0..n_t * ne)
                .map(|_| complex_gaussian(rng, rho_e_sq))
                .collect();
            ComplexMatrix::from_vec(n_t, ne, data)
        })
        .collect();
    ChannelInstance::new(h, eves, 0.0)
}
