//! Ball-constraint builders.
//!
//! Every robust rate constraint quantifies over a norm ball of channels.
//! With a positive radius it becomes one linear matrix inequality in the
//! design variables: a quadratic implication with a nonnegative multiplier
//! lambda, exact because the ball has an interior point. With a zero
//! radius the ball is its center and the constraint stays the exact scalar
//! inequality at the center channel; no multiplier exists there.
//!
//! Writing E for a basis matrix of the Hermitian unknown, hb for the
//! receiver center, gb for the stacked columns of an eavesdropper center
//! with m antennas, and Wk = I_m kron W, the emitted blocks are:
//!
//! - receiver, power minimization (unknown W, slack theta):
//!   [[lambda I + W, W hb], [hb^H W, hb^H W hb + 1 - theta - lambda eps^2]]
//! - eavesdropper, power minimization (rate target R):
//!   [[lambda I - Wk, -Wk gb],
//!   [-gb^H Wk, 2^(-R) theta - 1 - gb^H Wk gb - lambda eps^2]]
//! - receiver, rate maximization (unknown Z, scale xi): as the first block
//!   with corner hb^H Z hb + xi - 1 - lambda eps^2
//! - eavesdropper, rate maximization (objective tau): as the second block
//!   with corner tau - xi - gb^H Zk gb - lambda eps^2
//!
//! plus the two fixed-covariance blocks of the worst-case evaluator.

use crate::DesignError;
use hermitian_linalg::{
    cdot, embed_hermitian_triplets, kron, real_embedding, vec_matrix, ComplexMatrix, Cx,
    HermitianMatrix,
};
use secrecy_perfect::vars::{psd_block, HermVarMap};
use sdp_core::SdpProblem;

/// One matrix constraint: the affine combination of the listed variables
/// plus `f0` must be positive semidefinite.
pub(crate) struct LmiBlock {
    pub f0: HermitianMatrix,
    pub coeffs: Vec<(usize, HermitianMatrix)>,
}

/// A robust constraint in solver form.
pub(crate) enum RobustConstraint {
    /// Positive radius: full matrix inequality.
    Lmi(LmiBlock),
    /// Zero radius: exact center-channel inequality c0 + coeffs . x >= 0.
    Scalar { c0: f64, coeffs: Vec<(usize, f64)> },
}

impl LmiBlock {
    pub fn add_to(&self, prob: &mut SdpProblem) -> Result<(), DesignError> {
        let vars = self
            .coeffs
            .iter()
            .map(|(var, c)| (*var, embed_hermitian_triplets(c.as_matrix())))
            .collect();
        prob.add_block(
            psd_block(2 * self.f0.dim()),
            real_embedding(&self.f0),
            vars,
        )?;
        Ok(())
    }
}

impl RobustConstraint {
    pub fn add_to(&self, prob: &mut SdpProblem) -> Result<(), DesignError> {
        match self {
            RobustConstraint::Scalar { c0, coeffs } => {
                prob.add_scalar_block(*c0, coeffs.clone())?;
                Ok(())
            }
            RobustConstraint::Lmi(block) => block.add_to(prob),
        }
    }
}

fn herm(m: ComplexMatrix) -> HermitianMatrix {
    HermitianMatrix::new(&m).expect("constraint coefficients are Hermitian by construction")
}

/// [[A, A v], [v^H A, v^H A v]]: the ball quadratic of coefficient A,
/// bordered by the center v.
fn bordered(a: &ComplexMatrix, v: &[Cx]) -> ComplexMatrix {
    let d = a.rows();
    let av = a.mul_vec(v);
    let corner = cdot(v, &av);
    ComplexMatrix::from_fn(d + 1, d + 1, |i, j| match (i == d, j == d) {
        (false, false) => a[(i, j)],
        (false, true) => av[i],
        (true, false) => av[j].conj(),
        (true, true) => corner,
    })
}

/// diag(1, ..., 1, -eps^2): the multiplier's coefficient in a ball LMI of
/// quadratic dimension d.
fn multiplier_matrix(d: usize, eps: f64) -> ComplexMatrix {
    ComplexMatrix::from_fn(d + 1, d + 1, |i, j| {
        if i != j {
            Cx::new(0.0, 0.0)
        } else if i < d {
            Cx::new(1.0, 0.0)
        } else {
            Cx::new(-eps * eps, 0.0)
        }
    })
}

/// `value` in the bottom-right scalar slot of a (d+1) x (d+1) block.
fn corner_matrix(d: usize, value: f64) -> ComplexMatrix {
    ComplexMatrix::from_fn(
        d + 1,
        d + 1,
        |i, j| {
            if i == d && j == d {
                Cx::new(value, 0.0)
            } else {
                Cx::new(0.0, 0.0)
            }
        },
    )
}

/// Bordered coefficient of every unknown: scale * [[L, L v], [v^H L, v^H L v]]
/// with L the lifted basis matrix.
fn bordered_basis(
    map: &HermVarMap,
    v: &[Cx],
    scale: f64,
    lift: impl Fn(&ComplexMatrix) -> ComplexMatrix,
) -> Vec<(usize, HermitianMatrix)> {
    map.basis_matrices()
        .into_iter()
        .map(|(var, e)| {
            let b = bordered(&lift(e.as_matrix()), v).scale(scale);
            (var, herm(b))
        })
        .collect()
}

/// G G^H of an eavesdropper center.
fn gram(g: &ComplexMatrix) -> Result<HermitianMatrix, DesignError> {
    Ok(HermitianMatrix::new(&g.mul(&g.adjoint()))?)
}

/// Receiver-ball constraint of the power-minimization program: the
/// receiver side of the rate target holds for every h within eps_b of hb.
pub(crate) fn bob_src_constraint(
    map: &HermVarMap,
    hb: &[Cx],
    eps_b: f64,
    lambda: Option<usize>,
    theta: usize,
) -> RobustConstraint {
    if eps_b == 0.0 {
        // 1 + hb^H W hb - theta >= 0.
        let mut coeffs = map.trace_coeffs(&HermitianMatrix::from_outer(hb), 1.0);
        coeffs.push((theta, -1.0));
        return RobustConstraint::Scalar { c0: 1.0, coeffs };
    }
    let lambda = lambda.expect("positive radius allocates a multiplier");
    let n = hb.len();
    let mut coeffs = bordered_basis(map, hb, 1.0, Clone::clone);
    coeffs.push((lambda, herm(multiplier_matrix(n, eps_b))));
    coeffs.push((theta, herm(corner_matrix(n, -1.0))));
    RobustConstraint::Lmi(LmiBlock {
        f0: herm(corner_matrix(n, 1.0)),
        coeffs,
    })
}

/// One eavesdropper-ball constraint of the power-minimization program at
/// rate target `rate`: the leakage side holds for every G within eps of gb.
pub(crate) fn eve_src_constraint(
    map: &HermVarMap,
    gb: &ComplexMatrix,
    eps: f64,
    rate: f64,
    lambda: Option<usize>,
    theta: usize,
) -> Result<RobustConstraint, DesignError> {
    let level = (-rate).exp2();
    if eps == 0.0 {
        // 2^(-R) theta - 1 - Tr(G G^H W) >= 0.
        let mut coeffs = map.trace_coeffs(&gram(gb)?, -1.0);
        coeffs.push((theta, level));
        return Ok(RobustConstraint::Scalar { c0: -1.0, coeffs });
    }
    let lambda = lambda.expect("positive radius allocates a multiplier");
    let m = gb.cols();
    let d = m * map.n;
    let gvec = vec_matrix(gb);
    let eye = ComplexMatrix::identity(m);
    let mut coeffs = bordered_basis(map, &gvec, -1.0, |e| kron(&eye, e));
    coeffs.push((lambda, herm(multiplier_matrix(d, eps))));
    coeffs.push((theta, herm(corner_matrix(d, level))));
    Ok(RobustConstraint::Lmi(LmiBlock {
        f0: herm(corner_matrix(d, -1.0)),
        coeffs,
    }))
}

/// Receiver-ball constraint of the rate-maximization program: normalizes
/// the worst receiver response of the scaled unknown Z to at least one.
pub(crate) fn bob_srm_constraint(
    map: &HermVarMap,
    hb: &[Cx],
    eps_b: f64,
    lambda: Option<usize>,
    xi: usize,
) -> RobustConstraint {
    if eps_b == 0.0 {
        // hb^H Z hb + xi - 1 >= 0.
        let mut coeffs = map.trace_coeffs(&HermitianMatrix::from_outer(hb), 1.0);
        coeffs.push((xi, 1.0));
        return RobustConstraint::Scalar { c0: -1.0, coeffs };
    }
    let lambda = lambda.expect("positive radius allocates a multiplier");
    let n = hb.len();
    let mut coeffs = bordered_basis(map, hb, 1.0, Clone::clone);
    coeffs.push((lambda, herm(multiplier_matrix(n, eps_b))));
    coeffs.push((xi, herm(corner_matrix(n, 1.0))));
    RobustConstraint::Lmi(LmiBlock {
        f0: herm(corner_matrix(n, -1.0)),
        coeffs,
    })
}

/// One eavesdropper-ball constraint of the rate-maximization program: tau
/// dominates the worst leakage response of the scaled unknown.
pub(crate) fn eve_srm_constraint(
    map: &HermVarMap,
    gb: &ComplexMatrix,
    eps: f64,
    lambda: Option<usize>,
    xi: usize,
    tau: usize,
) -> Result<RobustConstraint, DesignError> {
    if eps == 0.0 {
        // tau - xi - Tr(G G^H Z) >= 0.
        let mut coeffs = map.trace_coeffs(&gram(gb)?, -1.0);
        coeffs.push((xi, -1.0));
        coeffs.push((tau, 1.0));
        return Ok(RobustConstraint::Scalar { c0: 0.0, coeffs });
    }
    let lambda = lambda.expect("positive radius allocates a multiplier");
    let m = gb.cols();
    let d = m * map.n;
    let gvec = vec_matrix(gb);
    let eye = ComplexMatrix::identity(m);
    let mut coeffs = bordered_basis(map, &gvec, -1.0, |e| kron(&eye, e));
    coeffs.push((lambda, herm(multiplier_matrix(d, eps))));
    coeffs.push((xi, herm(corner_matrix(d, -1.0))));
    coeffs.push((tau, herm(corner_matrix(d, 1.0))));
    Ok(RobustConstraint::Lmi(LmiBlock {
        f0: HermitianMatrix::zero(d + 1),
        coeffs,
    }))
}

/// Receiver block of the worst-case evaluator at fixed covariance W: the
/// largest tau1 keeping this psd is the smallest 1 + h^H W h on the ball.
pub(crate) fn bob_eval_lmi(
    w: &HermitianMatrix,
    hb: &[Cx],
    eps_b: f64,
    tau1: usize,
    lambda: usize,
) -> LmiBlock {
    let n = w.dim();
    let f0 = bordered(w.as_matrix(), hb).add(&corner_matrix(n, 1.0));
    LmiBlock {
        f0: herm(f0),
        coeffs: vec![
            (tau1, herm(corner_matrix(n, -1.0))),
            (lambda, herm(multiplier_matrix(n, eps_b))),
        ],
    }
}

/// One eavesdropper block of the evaluator at fixed covariance W: the
/// smallest tau2 keeping this psd is the largest 1 + Tr(G^H W G) on the
/// ball.
pub(crate) fn eve_eval_lmi(
    w: &HermitianMatrix,
    gb: &ComplexMatrix,
    eps: f64,
    tau2: usize,
    lambda: usize,
) -> LmiBlock {
    let m = gb.cols();
    let d = m * w.dim();
    let wk = kron(&ComplexMatrix::identity(m), w.as_matrix());
    let gvec = vec_matrix(gb);
    let f0 = bordered(&wk, &gvec)
        .scale(-1.0)
        .add(&corner_matrix(d, -1.0));
    LmiBlock {
        f0: herm(f0),
        coeffs: vec![
            (tau2, herm(corner_matrix(d, 1.0))),
            (lambda, herm(multiplier_matrix(d, eps))),
        ],
    }
}
