//! Infeasible-start primal-dual path following.
//!
//! Iterates are (x, S) on the primal side and (X, nu) on the dual side, with
//! every S_j and X_j kept strictly inside its cone. Each iteration:
//!
//!  1. residuals and convergence / certificate checks;
//!  2. Nesterov-Todd scaling per block, computed without an SVD:
//!     S = L L^T (Cholesky), K = L^T X L = Q Lam Q^T, G = L^{-T} Q Lam^{1/4};
//!     then G^T S G = G^{-1} X G^{-T} = Lam^{1/2} =: D, and W = G G^T is the
//!     scaling point with W X W^{-1}... (G D G^T = X, G D^{-1} G^T = S^{-1});
//!  3. eliminate dS = sum_i dx_i F_i - R_p and
//!     dX = G Rc G^T - W dS W, leaving the reduced system
//!     [-M  A^T; A  0] [dx; dnu] = [r1; r2] with
//!     M_il = sum_j Tr(F_i W F_l W) = sum_j <T_i, T_l>, T_i = G^T F_i G;
//!  4. Mehrotra: affine solve (Rc = -D), centering sigma = (mu_aff/mu)^3,
//!     corrector solve with the scaled second-order term;
//!  5. step 0.98 of the way to each cone boundary.
//!
//! The complementarity right-hand side lives in the scaled space where both
//! scaled iterates equal D: solving (D M + M D)/2 = RHS entrywise divides by
//! (d_i + d_j)/2.

use crate::problem::{accumulate_into, triplet_inner, Block};
use crate::{Certificate, SdpError, SdpProblem, SdpSolution, SdpStatus};
use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen};

const MAX_ITERS: usize = 200;
const STEP_FRACTION: f64 = 0.98;

fn symmetrize(m: &mut DMatrix<f64>) {
    let n = m.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (m[(i, j)] + m[(j, i)]);
            m[(i, j)] = avg;
            m[(j, i)] = avg;
        }
    }
}

/// Largest alpha with D + alpha * E psd, via the smallest eigenvalue of
/// D^{-1/2} E D^{-1/2}.
fn boundary_alpha(d: &DVector<f64>, e: &DMatrix<f64>) -> f64 {
    let n = d.len();
    let mut m = e.clone();
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] /= (d[i] * d[j]).sqrt();
        }
    }
    symmetrize(&mut m);
    let lmin = SymmetricEigen::new(m).eigenvalues.min();
    if lmin >= -1e-14 {
        f64::INFINITY
    } else {
        -1.0 / lmin
    }
}

fn min_eig(m: DMatrix<f64>) -> f64 {
    SymmetricEigen::new(m).eigenvalues.min()
}

/// Nesterov-Todd scaling for one block: G with G^T S G = diag(d) and
/// X = G diag(d) G^T, so both iterates look like diag(d) in the scaled
/// space. None when S has lost positive definiteness.
fn nt_scale(s: &DMatrix<f64>, x: &DMatrix<f64>) -> Option<(DMatrix<f64>, DVector<f64>)> {
    let chol_s = Cholesky::new(s.clone())?;
    let l = chol_s.l();
    let mut k = l.tr_mul(x) * &l;
    symmetrize(&mut k);
    let eig = SymmetricEigen::new(k);
    let lam: Vec<f64> = eig.eigenvalues.iter().map(|&v| v.max(1e-128)).collect();
    let lt = l.transpose();
    let mut g = lt.solve_upper_triangular(&eig.eigenvectors)?;
    for (i, &li) in lam.iter().enumerate() {
        g.column_mut(i).scale_mut(li.powf(0.25));
    }
    let d = DVector::from_iterator(lam.len(), lam.iter().map(|&li| li.sqrt()));
    Some((g, d))
}

#[derive(Clone)]
struct BlockIter {
    dim: usize,
    s: DMatrix<f64>,
    x: DMatrix<f64>,
}

/// Per-iteration scaled quantities for one block.
struct Scaled {
    g: DMatrix<f64>,
    d: DVector<f64>,
    /// T_i = G^T F_i G for each participating variable, in `vars` order.
    t: Vec<DMatrix<f64>>,
    /// G^T R_p G.
    p_tilde: DMatrix<f64>,
    r_p: DMatrix<f64>,
}

/// Cholesky of a symmetric positive definite matrix, taken after symmetric
/// Jacobi scaling. The diagonal of the reduced-system matrix spans many
/// orders of magnitude near convergence; scaling keeps the factorization's
/// pivots near one, and any fallback ridge stays relative to each row's own
/// magnitude, so the perturbation it introduces is proportionally tiny.
struct ScaledChol {
    scale: DVector<f64>,
    chol: Cholesky<f64, nalgebra::Dyn>,
}

impl ScaledChol {
    fn new(m: &DMatrix<f64>) -> Option<ScaledChol> {
        let nd = m.nrows();
        let maxdiag = m.diagonal().amax().max(f64::MIN_POSITIVE);
        let scale = DVector::from_iterator(
            nd,
            m.diagonal().iter().map(|&v| v.max(1e-30 * maxdiag).sqrt()),
        );
        let mut ms = m.clone();
        for i in 0..nd {
            for j in 0..nd {
                ms[(i, j)] /= scale[i] * scale[j];
            }
        }
        symmetrize(&mut ms);
        if let Some(chol) = Cholesky::new(ms.clone()) {
            return Some(ScaledChol { scale, chol });
        }
        for ridge in [1e-13, 1e-9] {
            let mut r = ms.clone();
            for i in 0..nd {
                r[(i, i)] += ridge;
            }
            if let Some(chol) = Cholesky::new(r) {
                return Some(ScaledChol { scale, chol });
            }
        }
        None
    }

    fn solve(&self, rhs: &DVector<f64>) -> DVector<f64> {
        let nd = rhs.len();
        let mut v = DVector::from_iterator(nd, rhs.iter().zip(self.scale.iter()).map(|(r, s)| r / s));
        v = self.chol.solve(&v);
        for i in 0..nd {
            v[i] /= self.scale[i];
        }
        v
    }

    fn solve_mat(&self, rhs: &DMatrix<f64>) -> DMatrix<f64> {
        let mut v = rhs.clone();
        for i in 0..v.nrows() {
            let s = self.scale[i];
            for j in 0..v.ncols() {
                v[(i, j)] /= s;
            }
        }
        v = self.chol.solve(&v);
        for i in 0..v.nrows() {
            let s = self.scale[i];
            for j in 0..v.ncols() {
                v[(i, j)] /= s;
            }
        }
        v
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Compensated accumulator: sums values and products while carrying the
/// rounding error separately, so residuals of ill-conditioned systems are
/// evaluated well below the naive eps * |M| * |dx| noise floor.
#[derive(Default)]
struct Comp {
    s: f64,
    c: f64,
}

impl Comp {
    fn add(&mut self, v: f64) {
        let (t, e) = two_sum(self.s, v);
        self.s = t;
        self.c += e;
    }

    fn add_prod(&mut self, a: f64, b: f64) {
        let p = a * b;
        let pe = f64::mul_add(a, b, -p);
        self.add(p);
        self.c += pe;
    }

    fn value(&self) -> f64 {
        self.s + self.c
    }
}

struct Reduced {
    /// The reduced-system matrix itself, unridged: refinement residuals are
    /// measured against it so any factorization ridge acts only as a
    /// preconditioner rather than perturbing the equations.
    m_dense: DMatrix<f64>,
    chol_m: ScaledChol,
    /// M^{-1} A^T and the factored A M^{-1} A^T, when equalities exist.
    u: Option<DMatrix<f64>>,
    chol_schur: Option<ScaledChol>,
}

impl Reduced {
    fn build(m: DMatrix<f64>, a_mat: &DMatrix<f64>) -> Option<Reduced> {
        let chol_m = ScaledChol::new(&m)?;
        if a_mat.nrows() == 0 {
            return Some(Reduced {
                m_dense: m,
                chol_m,
                u: None,
                chol_schur: None,
            });
        }
        let u = chol_m.solve_mat(&a_mat.transpose());
        let mut schur = a_mat * &u;
        symmetrize(&mut schur);
        let chol_schur = ScaledChol::new(&schur)?;
        Some(Reduced {
            m_dense: m,
            chol_m,
            u: Some(u),
            chol_schur: Some(chol_schur),
        })
    }

    fn solve_once(&self, a_mat: &DMatrix<f64>, r1: &DVector<f64>, r2: &DVector<f64>) -> (DVector<f64>, DVector<f64>) {
        // -M dx + A^T dnu = r1;  A dx = r2.
        match (&self.u, &self.chol_schur) {
            (Some(u), Some(chol_schur)) => {
                let t = self.chol_m.solve(r1);
                let rhs = r2 + a_mat * &t;
                let dnu = chol_schur.solve(&rhs);
                let dx = u * &dnu - t;
                (dx, dnu)
            }
            _ => (-self.chol_m.solve(r1), DVector::zeros(0)),
        }
    }

    fn solve(&self, a_mat: &DMatrix<f64>, r1: &DVector<f64>, r2: &DVector<f64>) -> (DVector<f64>, DVector<f64>) {
        let (mut dx, mut dnu) = self.solve_once(a_mat, r1, r2);
        // Iterative refinement against the true (unridged) matrix, with
        // compensated residuals: the entries of M dx cancel massively near
        // convergence, and refining on naively rounded residuals would stall
        // orders of magnitude above machine precision. Endgame systems can
        // be singular to working precision, where a correction may diverge,
        // so only the lowest-residual iterate seen is ever returned.
        let n = dx.len();
        let m_eq = dnu.len();
        let mut best = (dx.clone(), dnu.clone());
        let mut best_norm = f64::INFINITY;
        let mut prev_norm = f64::INFINITY;
        for _ in 0..6 {
            let mut res1 = DVector::<f64>::zeros(n);
            for i in 0..n {
                let mut acc = Comp::default();
                acc.add(r1[i]);
                for k in 0..m_eq {
                    acc.add_prod(-a_mat[(k, i)], dnu[k]);
                }
                for l in 0..n {
                    acc.add_prod(self.m_dense[(i, l)], dx[l]);
                }
                res1[i] = acc.value();
            }
            let mut res2 = DVector::<f64>::zeros(m_eq);
            for k in 0..m_eq {
                let mut acc = Comp::default();
                acc.add(r2[k]);
                for l in 0..n {
                    acc.add_prod(-a_mat[(k, l)], dx[l]);
                }
                res2[k] = acc.value();
            }
            let norm = res1
                .iter()
                .chain(res2.iter())
                .fold(0.0f64, |m, v| m.max(v.abs()));
            if norm < best_norm {
                best_norm = norm;
                best = (dx.clone(), dnu.clone());
            }
            if norm == 0.0 || norm > 0.5 * prev_norm {
                break;
            }
            prev_norm = norm;
            let (ddx, ddnu) = self.solve_once(a_mat, &res1, &res2);
            dx += ddx;
            dnu += ddnu;
        }
        best
    }
}

pub fn solve(problem: &SdpProblem, tol: f64) -> Result<SdpSolution, SdpError> {
    if !(1e-10..=1e-4).contains(&tol) || !tol.is_finite() {
        return Err(SdpError::BadTolerance { tol });
    }
    problem.validate()?;

    let n = problem.num_vars();
    let c = DVector::from_column_slice(problem.objective());
    let m_eq = problem.equalities().len();
    let a_mat = {
        let mut a = DMatrix::<f64>::zeros(m_eq, n);
        for (k, (row, _)) in problem.equalities().iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                a[(k, i)] = *v;
            }
        }
        a
    };
    let b_vec = DVector::from_iterator(m_eq, problem.equalities().iter().map(|(_, b)| *b));

    let blocks: &[Block] = &problem.blocks;
    let total_dim: usize = blocks.iter().map(|bl| bl.spec.dim).sum();
    let mut iter_state: Vec<BlockIter> = blocks
        .iter()
        .map(|bl| {
            let eta = bl.f0.norm().max(1.0);
            BlockIter {
                dim: bl.spec.dim,
                s: DMatrix::identity(bl.spec.dim, bl.spec.dim) * eta,
                x: DMatrix::identity(bl.spec.dim, bl.spec.dim) * eta,
            }
        })
        .collect();
    let mut x = DVector::<f64>::zeros(n);
    let mut nu = DVector::<f64>::zeros(m_eq);

    let data_norm = {
        let f: f64 = blocks.iter().map(|bl| bl.f0.norm_squared()).sum();
        (f + b_vec.norm_squared()).sqrt()
    };
    let c_norm = c.norm();

    let mut last = Summary::default();
    let mut iterations = 0;

    // Late in a run the scaled system can lose more precision per step than
    // the shrinking gap buys back; remember the most balanced iterate so a
    // stalled run still returns its best state.
    struct Snapshot {
        merit: f64,
        x: DVector<f64>,
        nu: DVector<f64>,
        state: Vec<BlockIter>,
        summary: Summary,
    }
    let mut best: Option<Snapshot> = None;
    let mut stalled = 0usize;

    for iter in 0..MAX_ITERS {
        iterations = iter;

        // Residuals.
        let r_p: Vec<DMatrix<f64>> = blocks
            .iter()
            .zip(&iter_state)
            .map(|(bl, st)| {
                let mut ax = bl.f0.clone();
                accumulate_into(&bl.vars, x.as_slice(), &mut ax);
                &st.s - ax
            })
            .collect();
        let r_eq = &b_vec - &a_mat * &x;
        let primal_res = {
            let blocks_sq: f64 = r_p.iter().map(|m| m.norm_squared()).sum();
            (blocks_sq + r_eq.norm_squared()).sqrt() / (1.0 + data_norm)
        };
        let atnu = a_mat.tr_mul(&nu);
        let mut r_d = DVector::<f64>::zeros(n);
        for i in 0..n {
            r_d[i] = c[i] - atnu[i];
        }
        for (bl, st) in blocks.iter().zip(&iter_state) {
            for (var, triplets) in &bl.vars {
                r_d[*var] -= triplet_inner(triplets, &st.x);
            }
        }
        let dual_res = r_d.norm() / (1.0 + c_norm);
        let gap: f64 = iter_state.iter().map(|st| st.x.dot(&st.s)).sum();
        let pobj = c.dot(&x);
        let dobj = b_vec.dot(&nu)
            - blocks
                .iter()
                .zip(&iter_state)
                .map(|(bl, st)| bl.f0.dot(&st.x))
                .sum::<f64>();
        let rel_gap = gap / (1.0 + 0.5 * (pobj.abs() + dobj.abs()));
        last = Summary {
            pobj,
            dobj,
            rel_gap,
        };

        if primal_res <= tol && dual_res <= tol && rel_gap <= tol {
            return Ok(finish(
                SdpStatus::Optimal,
                &x,
                &nu,
                &iter_state,
                &last,
                iterations,
                None,
            ));
        }

        // Primal-infeasibility certificate: the normalized dual iterate is an
        // improving ray when it is nearly stationary for the homogeneous
        // problem yet has positive value.
        let dual_scale = iter_state
            .iter()
            .map(|st| st.x.norm_squared())
            .sum::<f64>()
            .sqrt()
            + nu.norm();
        if dual_scale > 1e-300 {
            let value = (b_vec.dot(&nu)
                - blocks
                    .iter()
                    .zip(&iter_state)
                    .map(|(bl, st)| bl.f0.dot(&st.x))
                    .sum::<f64>())
                / dual_scale;
            if value >= tol {
                let mut stat = atnu.clone();
                for (bl, st) in blocks.iter().zip(&iter_state) {
                    for (var, triplets) in &bl.vars {
                        stat[*var] += triplet_inner(triplets, &st.x);
                    }
                }
                if stat.norm() / dual_scale <= tol {
                    let cert = Certificate::PrimalInfeasible {
                        dual_ray: iter_state.iter().map(|st| &st.x / dual_scale).collect(),
                        eq_ray: (&nu / dual_scale).iter().copied().collect(),
                        violation: value,
                    };
                    return Ok(finish(
                        SdpStatus::PrimalInfeasible,
                        &x,
                        &nu,
                        &iter_state,
                        &last,
                        iterations,
                        Some(cert),
                    ));
                }
            }
        }

        // Dual-infeasibility / unboundedness certificate: the normalized
        // primal iterate is a feasible improving ray.
        let xn = x.norm();
        if xn > 1e-300 {
            let rate = pobj / xn;
            if rate <= -tol && (&a_mat * &x).norm() / xn <= tol {
                let xhat = &x / xn;
                let ray_in_cone = blocks.iter().all(|bl| {
                    let mut acc = DMatrix::<f64>::zeros(bl.spec.dim, bl.spec.dim);
                    accumulate_into(&bl.vars, xhat.as_slice(), &mut acc);
                    min_eig(acc) >= -tol
                });
                if ray_in_cone {
                    let cert = Certificate::DualInfeasible {
                        primal_ray: xhat.iter().copied().collect(),
                        improvement: -rate,
                    };
                    return Ok(finish(
                        SdpStatus::DualInfeasibleOrUnbounded,
                        &x,
                        &nu,
                        &iter_state,
                        &last,
                        iterations,
                        Some(cert),
                    ));
                }
            }
        }

        let merit = primal_res.max(dual_res).max(rel_gap);
        if best.as_ref().is_none_or(|b| merit < b.merit) {
            best = Some(Snapshot {
                merit,
                x: x.clone(),
                nu: nu.clone(),
                state: iter_state.clone(),
                summary: last,
            });
            stalled = 0;
        } else {
            stalled += 1;
            if stalled >= 25 {
                break;
            }
        }

        // Nesterov-Todd scaling per block.
        let mut scaled: Vec<Scaled> = Vec::with_capacity(blocks.len());
        let mut scaling_ok = true;
        for ((bl, st), rp) in blocks.iter().zip(&iter_state).zip(&r_p) {
            let nd = st.dim;
            let (g, d) = match nt_scale(&st.s, &st.x) {
                Some(v) => v,
                None => {
                    scaling_ok = false;
                    break;
                }
            };
            let t: Vec<DMatrix<f64>> = bl
                .vars
                .iter()
                .map(|(_, triplets)| {
                    // F_i G through the sparse triplets, then G^T (F_i G).
                    let mut fg = DMatrix::<f64>::zeros(nd, nd);
                    for &(r, cc, v) in triplets {
                        for col in 0..nd {
                            fg[(r, col)] += v * g[(cc, col)];
                        }
                    }
                    let mut t = g.tr_mul(&fg);
                    symmetrize(&mut t);
                    t
                })
                .collect();
            let mut p_tilde = g.tr_mul(rp) * &g;
            symmetrize(&mut p_tilde);
            scaled.push(Scaled {
                g,
                d,
                t,
                p_tilde,
                r_p: rp.clone(),
            });
        }
        if !scaling_ok {
            break;
        }

        // Reduced-system matrix M_il = sum_j <T_i, T_l>.
        let mut m_mat = DMatrix::<f64>::zeros(n, n);
        for (bl, sc) in blocks.iter().zip(&scaled) {
            for (ia, (va, _)) in bl.vars.iter().enumerate() {
                for (ib, (vb, _)) in bl.vars.iter().enumerate().skip(ia) {
                    let dot = sc.t[ia].dot(&sc.t[ib]);
                    m_mat[(*va, *vb)] += dot;
                    if ia != ib {
                        m_mat[(*vb, *va)] += dot;
                    }
                }
            }
        }
        let reduced = match Reduced::build(m_mat, &a_mat) {
            Some(r) => r,
            None => break,
        };

        let mu = gap / total_dim as f64;

        // Predictor: Rc = -D.
        let rc_aff: Vec<DMatrix<f64>> = scaled
            .iter()
            .map(|sc| DMatrix::from_diagonal(&(-sc.d.clone())))
            .collect();
        let r1_aff = reduced_rhs(&r_d, blocks, &scaled, &rc_aff);
        let (dx_aff, _dnu_aff) = reduced.solve(&a_mat, &r1_aff, &r_eq);
        let dirs_aff = scaled_directions(blocks, &scaled, &rc_aff, &dx_aff);
        let (ap_aff, ad_aff) = step_lengths(&scaled, &dirs_aff, 1.0);
        let mu_aff = {
            let mut acc = 0.0;
            for (sc, dir) in scaled.iter().zip(&dirs_aff) {
                let dp = DMatrix::from_diagonal(&sc.d) + &dir.ds * ap_aff;
                let dd = DMatrix::from_diagonal(&sc.d) + &dir.dx * ad_aff;
                acc += dp.dot(&dd);
            }
            (acc / total_dim as f64).max(0.0)
        };
        let sigma = if mu > 0.0 {
            ((mu_aff / mu).powi(3)).clamp(0.0, 1.0)
        } else {
            0.0
        };

        // Corrector: Rc = L_D^{-1}(sigma mu I - D^2 - H(dX_aff dS_aff)).
        let rc: Vec<DMatrix<f64>> = scaled
            .iter()
            .zip(&dirs_aff)
            .map(|(sc, dir)| {
                let nd = sc.d.len();
                let mut h = &dir.dx * &dir.ds;
                symmetrize(&mut h);
                let mut out = DMatrix::<f64>::zeros(nd, nd);
                for i in 0..nd {
                    for j in 0..nd {
                        let target = if i == j {
                            sigma * mu - sc.d[i] * sc.d[j] - h[(i, j)]
                        } else {
                            -h[(i, j)]
                        };
                        out[(i, j)] = 2.0 * target / (sc.d[i] + sc.d[j]);
                    }
                }
                out
            })
            .collect();
        let r1 = reduced_rhs(&r_d, blocks, &scaled, &rc);
        let (dx, dnu) = reduced.solve(&a_mat, &r1, &r_eq);
        let dirs = scaled_directions(blocks, &scaled, &rc, &dx);
        let (alpha_p, alpha_d) = step_lengths(&scaled, &dirs, STEP_FRACTION);

        // Updates: primal pair (x, S) with alpha_p, dual pair (X, nu) with
        // alpha_d. dS is reassembled from the triplets so S stays exactly
        // symmetric; dX returns from the scaled space through G.
        x += &dx * alpha_p;
        nu += &dnu * alpha_d;
        for ((bl, st), (sc, dir)) in blocks
            .iter()
            .zip(&mut iter_state)
            .zip(scaled.iter().zip(&dirs))
        {
            let mut ds = -sc.r_p.clone();
            accumulate_into(&bl.vars, dx.as_slice(), &mut ds);
            st.s += ds * alpha_p;
            symmetrize(&mut st.s);
            let mut dx_mat = &sc.g * &dir.dx * sc.g.transpose();
            symmetrize(&mut dx_mat);
            st.x += dx_mat * alpha_d;
            symmetrize(&mut st.x);
        }
    }

    let (bx, bnu, bstate, bsummary) = match &best {
        Some(snap) => (&snap.x, &snap.nu, &snap.state[..], &snap.summary),
        None => (&x, &nu, &iter_state[..], &last),
    };
    Ok(finish(
        SdpStatus::SlowProgress,
        bx,
        bnu,
        bstate,
        bsummary,
        iterations,
        None,
    ))
}

#[derive(Clone, Copy, Default)]
struct Summary {
    pobj: f64,
    dobj: f64,
    rel_gap: f64,
}

struct Directions {
    ds: DMatrix<f64>,
    dx: DMatrix<f64>,
}

/// r1_i = r_d_i - sum_j <T_i, Rc_j + P~_j>.
fn reduced_rhs(
    r_d: &DVector<f64>,
    blocks: &[Block],
    scaled: &[Scaled],
    rc: &[DMatrix<f64>],
) -> DVector<f64> {
    let mut r1 = r_d.clone();
    for ((bl, sc), rcj) in blocks.iter().zip(scaled).zip(rc) {
        let combined = rcj + &sc.p_tilde;
        for (it, (var, _)) in bl.vars.iter().enumerate() {
            r1[*var] -= sc.t[it].dot(&combined);
        }
    }
    r1
}

/// Scaled-space directions for a given Rc and dx:
/// dS~ = sum_i dx_i T_i - P~, dX~ = Rc - dS~.
fn scaled_directions(
    blocks: &[Block],
    scaled: &[Scaled],
    rc: &[DMatrix<f64>],
    dx: &DVector<f64>,
) -> Vec<Directions> {
    blocks
        .iter()
        .zip(scaled)
        .zip(rc)
        .map(|((bl, sc), rcj)| {
            let mut ds = -sc.p_tilde.clone();
            for (it, (var, _)) in bl.vars.iter().enumerate() {
                ds += &sc.t[it] * dx[*var];
            }
            let dxm = rcj - &ds;
            Directions { ds, dx: dxm }
        })
        .collect()
}

fn step_lengths(scaled: &[Scaled], dirs: &[Directions], fraction: f64) -> (f64, f64) {
    let mut ap = f64::INFINITY;
    let mut ad = f64::INFINITY;
    for (sc, dir) in scaled.iter().zip(dirs) {
        ap = ap.min(boundary_alpha(&sc.d, &dir.ds));
        ad = ad.min(boundary_alpha(&sc.d, &dir.dx));
    }
    ((fraction * ap).min(1.0), (fraction * ad).min(1.0))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    status: SdpStatus,
    x: &DVector<f64>,
    nu: &DVector<f64>,
    iter_state: &[BlockIter],
    last: &Summary,
    iterations: usize,
    certificate: Option<Certificate>,
) -> SdpSolution {
    SdpSolution {
        status,
        x: x.iter().copied().collect(),
        block_values: iter_state.iter().map(|st| st.s.clone()).collect(),
        dual_values: iter_state.iter().map(|st| st.x.clone()).collect(),
        dual_eq: nu.iter().copied().collect(),
        objective: last.pobj,
        dual_objective: last.dobj,
        duality_gap: last.rel_gap,
        iterations,
        certificate,
    }
}
