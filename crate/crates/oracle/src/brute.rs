//! Grid search over rank-one transmit designs for two transmit antennas.
//!
//! Every unit beamformer in C^2 is, up to a global phase that the rate does
//! not see, v = (cos t, sin t * e^{i u}) with t in [0, pi/2] and u in
//! [0, 2pi). The search walks an n_dir x n_dir grid over (t, u) and a
//! log-spaced power grid p in [P*1e-3, P] (the top point is exactly P) and
//! returns the best min-over-eavesdroppers secrecy rate, clamped at zero.
//! Grids at refined counts that keep the old nodes (direction counts scaled
//! so old fractions reappear) can only improve the result.

use channel_model::ChannelInstance;
use hermitian_linalg::Cx;

use crate::OracleError;

/// Quadratic form |X^H v|^2 for v = (c, s*e^{iu}) restricted to two antennas,
/// reduced to three scalars: row norms and the cross term conj(X[0,:])X[1,:].
struct RowQuad {
    n1: f64,
    n2: f64,
    cross: Cx,
}

impl RowQuad {
    fn from_rows(row0: impl Iterator<Item = Cx> + Clone, row1: impl Iterator<Item = Cx>) -> Self {
        let mut n1 = 0.0;
        let mut n2 = 0.0;
        let mut cross = Cx::new(0.0, 0.0);
        for (a, b) in row0.zip(row1) {
            n1 += a.norm_sqr();
            n2 += b.norm_sqr();
            cross += a.conj() * b;
        }
        RowQuad { n1, n2, cross }
    }

    /// Evaluates at direction (c, s*e^{iu}); `e_neg` carries e^{-iu}.
    fn eval(&self, c: f64, s: f64, e_neg: Cx) -> f64 {
        c * c * self.n1 + s * s * self.n2 + 2.0 * c * s * (self.cross * e_neg).re
    }
}

struct Grid {
    bob: RowQuad,
    eves: Vec<RowQuad>,
    thetas: Vec<f64>,
    phis: Vec<f64>,
    powers: Vec<f64>,
}

impl Grid {
    fn new(inst: &ChannelInstance, n_dir: usize, n_pow: usize) -> Result<Self, OracleError> {
        if inst.n_t() != 2 {
            return Err(OracleError::Unsupported { n_t: inst.n_t() });
        }
        let h = inst.h();
        let bob = RowQuad::from_rows([h[0]].into_iter(), [h[1]].into_iter());
        let eves = inst
            .eves()
            .iter()
            .map(|g| {
                RowQuad::from_rows(
                    (0..g.cols()).map(|j| g[(0, j)]),
                    (0..g.cols()).map(|j| g[(1, j)]),
                )
            })
            .collect();
        let frac = |i: usize, n: usize| i as f64 / n as f64;
        let thetas = (0..n_dir)
            .map(|i| std::f64::consts::FRAC_PI_2 * frac(i, n_dir.saturating_sub(1).max(1)))
            .collect();
        let phis = (0..n_dir)
            .map(|j| std::f64::consts::TAU * frac(j, n_dir.max(1)))
            .collect();
        let p_max = inst.power();
        let mut powers: Vec<f64> = (0..n_pow)
            .map(|m| p_max * 1e-3 * 1e3f64.powf(frac(m, n_pow.saturating_sub(1).max(1))))
            .collect();
        if let Some(last) = powers.last_mut() {
            *last = p_max;
        }
        Ok(Grid {
            bob,
            eves,
            thetas,
            phis,
            powers,
        })
    }

    /// Best clamped rate over all (phi, power) pairs at one theta node.
    fn best_at_theta(&self, i: usize) -> f64 {
        let (s, c) = self.thetas[i].sin_cos();
        let mut best = 0.0f64;
        for &phi in &self.phis {
            let e_neg = Cx::new(phi.cos(), -phi.sin());
            let a = self.bob.eval(c, s, e_neg);
            let b = self
                .eves
                .iter()
                .map(|q| q.eval(c, s, e_neg))
                .fold(0.0f64, f64::max);
            if a <= b {
                // Eavesdropper gain dominates at every power level.
                continue;
            }
            for &p in &self.powers {
                let rate = (1.0 + p * a).log2() - (1.0 + p * b).log2();
                best = best.max(rate);
            }
        }
        best
    }
}

/// Searches rank-one designs on the direction/power grid; returns the best
/// worst-eavesdropper secrecy rate found, clamped at zero.
pub fn brute_force_srm(
    inst: &ChannelInstance,
    n_dir: usize,
    n_pow: usize,
) -> Result<f64, OracleError> {
    #[cfg(feature = "parallel")]
    {
        brute_force_srm_parallel(inst, n_dir, n_pow)
    }
    #[cfg(not(feature = "parallel"))]
    {
        brute_force_srm_sequential(inst, n_dir, n_pow)
    }
}

/// Single-threaded grid walk; same result as the parallel path bit for bit
/// (the reduction is a plain maximum, insensitive to evaluation order).
pub fn brute_force_srm_sequential(
    inst: &ChannelInstance,
    n_dir: usize,
    n_pow: usize,
) -> Result<f64, OracleError> {
    let grid = Grid::new(inst, n_dir, n_pow)?;
    Ok((0..grid.thetas.len())
        .map(|i| grid.best_at_theta(i))
        .fold(0.0, f64::max))
}

/// Parallel grid walk over theta nodes.
#[cfg(feature = "parallel")]
pub fn brute_force_srm_parallel(
    inst: &ChannelInstance,
    n_dir: usize,
    n_pow: usize,
) -> Result<f64, OracleError> {
    use rayon::prelude::*;
    let grid = Grid::new(inst, n_dir, n_pow)?;
    Ok((0..grid.thetas.len())
        .into_par_iter()
        .map(|i| grid.best_at_theta(i))
        .reduce(|| 0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use channel_model::{rng_stream, sample_channel};
    use hermitian_linalg::ComplexMatrix;

    fn cx(re: f64, im: f64) -> Cx {
        Cx::new(re, im)
    }

    fn instance(h: Vec<Cx>, eves: Vec<ComplexMatrix>, power_db: f64) -> ChannelInstance {
        ChannelInstance::new(h, eves, power_db).unwrap()
    }

    #[test]
    fn orthogonal_eavesdropper_reaches_one_bit_exactly() {
        let inst = instance(
            vec![cx(1.0, 0.0), cx(0.0, 0.0)],
            vec![ComplexMatrix::from_vec(2, 1, vec![cx(0.0, 0.0), cx(1.0, 0.0)])],
            0.0,
        );
        // theta = 0 aligns with Bob and is orthogonal to the eavesdropper;
        // p = P = 1 sits on the grid, so the optimum log2(2) is hit exactly.
        let rate = brute_force_srm(&inst, 9, 5).unwrap();
        assert_eq!(rate, 1.0);
    }

    #[test]
    fn dominated_channel_clamps_to_zero() {
        let root2 = 2.0f64.sqrt();
        let inst = instance(
            vec![cx(1.0, 0.0), cx(0.0, 0.0)],
            vec![ComplexMatrix::from_vec(
                2,
                2,
                vec![cx(root2, 0.0), cx(0.0, 0.0), cx(0.0, 0.0), cx(root2, 0.0)],
            )],
            0.0,
        );
        assert_eq!(brute_force_srm(&inst, 17, 6).unwrap(), 0.0);
    }

    #[test]
    fn refining_a_nested_grid_never_loses_rate() {
        // 5 -> 25 directions keeps every old node: (25-1) is a multiple of
        // (5-1) for the inclusive theta grid and 25 a multiple of 5 for the
        // periodic phi grid; 4 -> 10 powers nests the log grid the same way.
        let inst = sample_channel(&mut rng_stream(11, 0), 2, &[1, 2], 0.5)
            .unwrap()
            .with_power_db(3.0);
        let coarse = brute_force_srm(&inst, 5, 4).unwrap();
        let fine = brute_force_srm(&inst, 25, 10).unwrap();
        assert!(fine >= coarse, "coarse {coarse} > fine {fine}");
    }

    #[test]
    fn three_antenna_instance_is_rejected() {
        let inst = sample_channel(&mut rng_stream(1, 0), 3, &[1], 1.0).unwrap();
        assert!(matches!(
            brute_force_srm(&inst, 4, 4),
            Err(OracleError::Unsupported { n_t: 3 })
        ));
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_and_sequential_walks_agree_bitwise() {
        let inst = sample_channel(&mut rng_stream(7, 3), 2, &[2, 1, 3], 2.0)
            .unwrap()
            .with_power_db(6.0);
        let seq = brute_force_srm_sequential(&inst, 33, 9).unwrap();
        let par = brute_force_srm_parallel(&inst, 33, 9).unwrap();
        assert_eq!(seq.to_bits(), par.to_bits());
    }
}
