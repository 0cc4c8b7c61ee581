//! Monte-Carlo lower-bounding of the worst-case secrecy rate.
//!
//! The adversary picks each channel perturbation independently inside its
//! own ball, so the sampler treats them separately: Bob's term is minimized
//! over its candidates, each eavesdropper's term maximized over its own, and
//! the results combined. Candidates are uniform ball draws plus the analytic
//! boundary points aligned against (Bob) or along (eavesdropper) the
//! principal beamformer, which for a rank-one design attain the exact worst
//! case. Any reported value is therefore achievable by a concrete channel
//! tuple and can never be below the true worst case.

use channel_model::UncertaintySpec;
use hermitian_linalg::{cdot, hermitian_eig, norm, outer, ComplexMatrix, Cx, HermitianMatrix};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Uniform draw from the complex ball of the given radius: Gaussian
/// direction, magnitude radius * u^(1/(2 dim)). Zero radius consumes no
/// randomness.
fn ball_point(rng: &mut impl Rng, dim: usize, radius: f64) -> Vec<Cx> {
    let zero = vec![Cx::new(0.0, 0.0); dim];
    if radius == 0.0 || dim == 0 {
        return zero;
    }
    let g: Vec<Cx> = (0..dim)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            Cx::new(re, im)
        })
        .collect();
    let u: f64 = rng.random();
    let gn = norm(&g);
    if gn < 1e-300 {
        return zero;
    }
    let r = radius * u.powf(1.0 / (2 * dim) as f64);
    g.iter().map(|z| z * (r / gn)).collect()
}

/// Perturbation that minimizes |(h_bar + d)^H w| over the ball: push along
/// -w until the inner product's magnitude is exhausted or the radius binds.
fn bob_boundary(h_bar: &[Cx], w: &[Cx], eps_b: f64) -> Vec<Cx> {
    let wn = norm(w);
    if wn == 0.0 {
        return vec![Cx::new(0.0, 0.0); h_bar.len()];
    }
    let hw = cdot(h_bar, w);
    let m = hw.norm();
    let phase = if m > 0.0 { hw / m } else { Cx::new(1.0, 0.0) };
    let scale = eps_b.min(m / wn);
    w.iter().map(|&wi| -phase.conj() * scale * wi / wn).collect()
}

/// Perturbation that maximizes ||(g_bar + d)^H w||: rank-one push of
/// Frobenius norm eps along w into the direction g_bar^H w already points.
fn eve_boundary(g_bar: &ComplexMatrix, w: &[Cx], eps: f64) -> ComplexMatrix {
    let wn = norm(w);
    let n_e = g_bar.cols();
    if wn == 0.0 || eps == 0.0 || n_e == 0 {
        return ComplexMatrix::zeros(g_bar.rows(), n_e);
    }
    let v = g_bar.adjoint_mul_vec(w);
    let vn = norm(&v);
    let vhat: Vec<Cx> = if vn > 0.0 {
        v.iter().map(|z| z / vn).collect()
    } else {
        let mut e1 = vec![Cx::new(0.0, 0.0); n_e];
        e1[0] = Cx::new(1.0, 0.0);
        e1
    };
    let wdir: Vec<Cx> = w.iter().map(|z| z / wn).collect();
    outer(&wdir, &vhat).scale(eps)
}

fn add_vec(a: &[Cx], b: &[Cx]) -> Vec<Cx> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn bob_term(w_mat: &HermitianMatrix, h: &[Cx]) -> f64 {
    (1.0 + w_mat.quadratic_form(h).max(0.0)).log2()
}

fn eve_term(w_mat: &HermitianMatrix, g: &ComplexMatrix) -> f64 {
    let wg = w_mat.as_matrix().mul(g);
    let m = HermitianMatrix::new(&g.adjoint().mul(&wg)).expect("G^H W G is square and finite");
    let (eigs, _) = hermitian_eig(&m).expect("small Hermitian eigendecomposition converges");
    eigs.iter().map(|&l| (1.0 + l.max(0.0)).log2()).sum()
}

/// Empirical worst-case secrecy rate of the design `w_mat` under `spec`,
/// from `n` ball samples per perturbed object plus the analytic boundary
/// candidates. Intended for rank-one designs, where the boundary candidates
/// are exact minimizers; the value never falls below the true worst case.
/// Draw order: Bob's perturbations first, then each eavesdropper's in index
/// order.
pub fn sample_worst_case(
    w_mat: &HermitianMatrix,
    spec: &UncertaintySpec,
    n: usize,
    rng: &mut impl Rng,
) -> f64 {
    let n_t = spec.h_bar().len();
    assert_eq!(w_mat.dim(), n_t, "design and uncertainty dimensions differ");
    if w_mat.is_zero() {
        return 0.0;
    }
    let (eigs, vecs) = hermitian_eig(w_mat).expect("small Hermitian eigendecomposition converges");
    let w: Vec<Cx> = {
        let s = eigs[0].max(0.0).sqrt();
        vecs.col(0).iter().map(|z| z * s).collect()
    };

    let boundary_h = add_vec(spec.h_bar(), &bob_boundary(spec.h_bar(), &w, spec.eps_b()));
    let mut bob_min = bob_term(w_mat, &boundary_h);
    for _ in 0..n {
        let h = add_vec(spec.h_bar(), &ball_point(rng, n_t, spec.eps_b()));
        bob_min = bob_min.min(bob_term(w_mat, &h));
    }

    let mut eve_max = f64::NEG_INFINITY;
    for (g_bar, &eps) in spec.g_bars().iter().zip(spec.eps_e()) {
        let dim = g_bar.rows() * g_bar.cols();
        let mut best = eve_term(w_mat, &g_bar.add(&eve_boundary(g_bar, &w, eps)));
        for _ in 0..n {
            let d = ball_point(rng, dim, eps);
            let g = g_bar.add(&ComplexMatrix::from_vec(g_bar.rows(), g_bar.cols(), d));
            best = best.max(eve_term(w_mat, &g));
        }
        eve_max = eve_max.max(best);
    }

    bob_min - eve_max
}
