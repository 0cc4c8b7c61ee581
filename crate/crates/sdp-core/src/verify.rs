//! Independent solution audit: everything is recomputed from the problem
//! data and the raw solution vectors, never trusted from solver-internal
//! state. Callers decide what residual levels to accept.

use crate::problem::{accumulate_into, triplet_inner};
use crate::{Certificate, SdpProblem, SdpSolution};
use nalgebra::{DMatrix, SymmetricEigen};

#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// Smallest eigenvalue of each slack block F_0 + sum_i x_i F_i,
    /// rebuilt from `x` (negative means primal cone violation).
    pub block_min_eigs: Vec<f64>,
    /// Smallest eigenvalue of each dual block X_j.
    pub dual_block_min_eigs: Vec<f64>,
    /// |a_k . x - b_k| per equality.
    pub equality_residuals: Vec<f64>,
    /// || c - A^T nu - sum_j <F_i, X_j> ||_2.
    pub dual_residual: f64,
    pub primal_objective: f64,
    pub dual_objective: f64,
    /// Absolute complementarity gap: sum_j <S_j(x), X_j>.
    pub duality_gap: f64,
    /// Per-block <S_j(x), X_j> terms of the gap.
    pub complementarity: Vec<f64>,
    /// Present when the solution carries an infeasibility certificate.
    pub certificate: Option<CertificateCheck>,
}

/// Recomputed quality measures for an infeasibility certificate.
#[derive(Debug, Clone)]
pub enum CertificateCheck {
    /// Dual improving ray (X_j, nu): valid when the ray is in the cone,
    /// nearly stationary for the homogeneous dual, and has positive value.
    PrimalInfeasible {
        /// || sum_j <F_i, X_j> + (A^T nu)_i ||_2 over i.
        stationarity_residual: f64,
        /// b . nu - sum_j <F_0, X_j>; a valid ray makes this positive.
        violation: f64,
        /// Smallest eigenvalue across the ray blocks.
        min_ray_eig: f64,
    },
    /// Primal improving ray x: valid when sum_i x_i F_i stays in each cone,
    /// A x = 0, and the objective decreases along it.
    DualInfeasible {
        /// Smallest eigenvalue of sum_i x_i F_i across blocks.
        min_ray_eig: f64,
        /// || A x ||_2 along the ray.
        equality_residual: f64,
        /// -c . x; a valid ray makes this positive.
        improvement: f64,
    },
}

fn min_eig(m: DMatrix<f64>) -> f64 {
    SymmetricEigen::new(m).eigenvalues.min()
}

/// Audits `solution` against `problem` from scratch.
pub fn verify_solution(problem: &SdpProblem, solution: &SdpSolution) -> VerifyReport {
    let n = problem.num_vars();
    let x = &solution.x;
    let slacks: Vec<DMatrix<f64>> = problem
        .blocks
        .iter()
        .map(|bl| {
            let mut s = bl.f0.clone();
            accumulate_into(&bl.vars, x, &mut s);
            s
        })
        .collect();
    let block_min_eigs: Vec<f64> = slacks.iter().map(|s| min_eig(s.clone())).collect();
    let dual_block_min_eigs: Vec<f64> = solution
        .dual_values
        .iter()
        .map(|xj| min_eig(xj.clone()))
        .collect();
    let equality_residuals: Vec<f64> = problem
        .equalities()
        .iter()
        .map(|(a, b)| {
            let ax: f64 = a.iter().zip(x).map(|(ai, xi)| ai * xi).sum();
            (ax - b).abs()
        })
        .collect();

    let mut dual_res_sq = 0.0;
    for i in 0..n {
        let mut r = problem.objective()[i];
        for (k, (a, _)) in problem.equalities().iter().enumerate() {
            r -= a[i] * solution.dual_eq[k];
        }
        for (bl, xj) in problem.blocks.iter().zip(&solution.dual_values) {
            for (var, triplets) in &bl.vars {
                if *var == i {
                    r -= triplet_inner(triplets, xj);
                }
            }
        }
        dual_res_sq += r * r;
    }

    let primal_objective: f64 = problem.objective().iter().zip(x).map(|(c, xi)| c * xi).sum();
    let dual_objective: f64 = problem
        .equalities()
        .iter()
        .zip(&solution.dual_eq)
        .map(|((_, b), nu)| b * nu)
        .sum::<f64>()
        - problem
            .blocks
            .iter()
            .zip(&solution.dual_values)
            .map(|(bl, xj)| bl.f0.dot(xj))
            .sum::<f64>();
    let complementarity: Vec<f64> = slacks
        .iter()
        .zip(&solution.dual_values)
        .map(|(s, xj)| s.dot(xj))
        .collect();
    let duality_gap = complementarity.iter().sum();

    let certificate = solution.certificate.as_ref().map(|cert| match cert {
        Certificate::PrimalInfeasible {
            dual_ray, eq_ray, ..
        } => {
            let mut stat_sq = 0.0;
            for i in 0..n {
                let mut s = 0.0;
                for (k, (a, _)) in problem.equalities().iter().enumerate() {
                    s += a[i] * eq_ray[k];
                }
                for (bl, xj) in problem.blocks.iter().zip(dual_ray) {
                    for (var, triplets) in &bl.vars {
                        if *var == i {
                            s += triplet_inner(triplets, xj);
                        }
                    }
                }
                stat_sq += s * s;
            }
            let violation = problem
                .equalities()
                .iter()
                .zip(eq_ray)
                .map(|((_, b), nu)| b * nu)
                .sum::<f64>()
                - problem
                    .blocks
                    .iter()
                    .zip(dual_ray)
                    .map(|(bl, xj)| bl.f0.dot(xj))
                    .sum::<f64>();
            let min_ray_eig = dual_ray
                .iter()
                .map(|xj| min_eig(xj.clone()))
                .fold(f64::INFINITY, f64::min);
            CertificateCheck::PrimalInfeasible {
                stationarity_residual: stat_sq.sqrt(),
                violation,
                min_ray_eig,
            }
        }
        Certificate::DualInfeasible { primal_ray, .. } => {
            let min_ray_eig = problem
                .blocks
                .iter()
                .map(|bl| {
                    let mut acc = DMatrix::<f64>::zeros(bl.spec.dim, bl.spec.dim);
                    accumulate_into(&bl.vars, primal_ray, &mut acc);
                    min_eig(acc)
                })
                .fold(f64::INFINITY, f64::min);
            let eq_sq: f64 = problem
                .equalities()
                .iter()
                .map(|(a, _)| {
                    let ax: f64 = a.iter().zip(primal_ray).map(|(ai, xi)| ai * xi).sum();
                    ax * ax
                })
                .sum();
            let improvement = -problem
                .objective()
                .iter()
                .zip(primal_ray)
                .map(|(c, xi)| c * xi)
                .sum::<f64>();
            CertificateCheck::DualInfeasible {
                min_ray_eig,
                equality_residual: eq_sq.sqrt(),
                improvement,
            }
        }
    });

    VerifyReport {
        block_min_eigs,
        dual_block_min_eigs,
        equality_residuals,
        dual_residual: dual_res_sq.sqrt(),
        primal_objective,
        dual_objective,
        duality_gap,
        complementarity,
        certificate,
    }
}
