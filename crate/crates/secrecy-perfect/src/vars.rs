//! Real-variable layout for a complex Hermitian matrix unknown, shared by
//! the design models built on the real cone solver.
//!
//! An n x n Hermitian Z is n^2 real unknowns, laid out per upper-triangle
//! row: for each p the diagonal entry (p, p), then for each q > p the real
//! and imaginary parts of Z[p][q]. The helpers here produce the solver
//! coefficient triplets tying those unknowns to the real embedding of Z
//! (convention `[[Re Z, -Im Z], [Im Z, Re Z]]`, dimension 2n) and to linear
//! trace functionals Tr(A Z), plus the exit-status mapping every design
//! solve applies to the cone solver's result.

use crate::DesignError;
use hermitian_linalg::{ComplexMatrix, Cx, HermitianMatrix};

/// Index map of one Hermitian unknown inside a flat real variable vector,
/// starting at `offset`.
#[derive(Debug, Clone, Copy)]
pub struct HermVarMap {
    pub offset: usize,
    pub n: usize,
}

impl HermVarMap {
    pub fn var_count(&self) -> usize {
        self.n * self.n
    }

    /// Variable index of Z[p][p].
    pub fn diag(&self, p: usize) -> usize {
        self.offset + p * (2 * self.n - p)
    }

    /// Variable index of Re Z[p][q], p < q.
    pub fn re(&self, p: usize, q: usize) -> usize {
        debug_assert!(p < q && q < self.n);
        self.diag(p) + 1 + 2 * (q - p - 1)
    }

    /// Variable index of Im Z[p][q], p < q.
    pub fn im(&self, p: usize, q: usize) -> usize {
        self.re(p, q) + 1
    }

    /// Per-variable triplets of `scale` times the real embedding of Z,
    /// rows and columns shifted by `shift` inside a larger block.
    pub fn embedding_triplets(
        &self,
        scale: f64,
        shift: usize,
    ) -> sdp_core::BlockCoeffs {
        let n = self.n;
        let mut out = Vec::with_capacity(self.var_count());
        for p in 0..n {
            out.push((
                self.diag(p),
                vec![
                    (shift + p, shift + p, scale),
                    (shift + n + p, shift + n + p, scale),
                ],
            ));
            for q in (p + 1)..n {
                out.push((
                    self.re(p, q),
                    vec![
                        (shift + p, shift + q, scale),
                        (shift + q, shift + p, scale),
                        (shift + n + p, shift + n + q, scale),
                        (shift + n + q, shift + n + p, scale),
                    ],
                ));
                out.push((
                    self.im(p, q),
                    vec![
                        (shift + p, shift + n + q, -scale),
                        (shift + n + q, shift + p, -scale),
                        (shift + q, shift + n + p, scale),
                        (shift + n + p, shift + q, scale),
                    ],
                ));
            }
        }
        out
    }

    /// Coefficients of `scale * Tr(A Z)` over the unknowns, for Hermitian A.
    /// Tr(A Z) is real: the diagonal unknown of Z[p][p] picks up A[p][p],
    /// and the pair (p, q), q > p contributes 2 Re A[p][q] and 2 Im A[p][q]
    /// on the real and imaginary unknowns.
    pub fn trace_coeffs(&self, a: &HermitianMatrix, scale: f64) -> Vec<(usize, f64)> {
        debug_assert_eq!(a.dim(), self.n);
        let mut out = Vec::new();
        for p in 0..self.n {
            let diag = a.entry(p, p).re * scale;
            if diag != 0.0 {
                out.push((self.diag(p), diag));
            }
            for q in (p + 1)..self.n {
                let apq = a.entry(p, q);
                let re_c = 2.0 * apq.re * scale;
                let im_c = 2.0 * apq.im * scale;
                if re_c != 0.0 {
                    out.push((self.re(p, q), re_c));
                }
                if im_c != 0.0 {
                    out.push((self.im(p, q), im_c));
                }
            }
        }
        out
    }

    /// The Hermitian basis matrix of every unknown, in layout order: Z is
    /// the sum over pairs (var, E) of x[var] * E. Diagonal unknowns map to
    /// e_p e_p^H, off-diagonal pairs to e_p e_q^H + e_q e_p^H and
    /// i (e_p e_q^H - e_q e_p^H).
    pub fn basis_matrices(&self) -> Vec<(usize, HermitianMatrix)> {
        let n = self.n;
        let herm = |f: &dyn Fn(usize, usize) -> Cx| {
            HermitianMatrix::new(&ComplexMatrix::from_fn(n, n, f))
                .expect("basis matrices are Hermitian by construction")
        };
        let mut out = Vec::with_capacity(self.var_count());
        for p in 0..n {
            out.push((
                self.diag(p),
                herm(&|i, j| Cx::new(f64::from(u8::from(i == p && j == p)), 0.0)),
            ));
            for q in (p + 1)..n {
                out.push((
                    self.re(p, q),
                    herm(&|i, j| {
                        Cx::new(
                            f64::from(u8::from((i, j) == (p, q) || (i, j) == (q, p))),
                            0.0,
                        )
                    }),
                ));
                out.push((
                    self.im(p, q),
                    herm(&|i, j| {
                        if (i, j) == (p, q) {
                            Cx::new(0.0, 1.0)
                        } else if (i, j) == (q, p) {
                            Cx::new(0.0, -1.0)
                        } else {
                            Cx::new(0.0, 0.0)
                        }
                    }),
                ));
            }
        }
        out
    }

    /// Z rebuilt from a solution vector.
    pub fn extract(&self, x: &[f64]) -> Result<HermitianMatrix, DesignError> {
        let m = ComplexMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                Cx::new(x[self.diag(i)], 0.0)
            } else if i < j {
                Cx::new(x[self.re(i, j)], x[self.im(i, j)])
            } else {
                Cx::new(x[self.re(j, i)], -x[self.im(j, i)])
            }
        });
        Ok(HermitianMatrix::new(&m)?)
    }
}

/// G G^H of a channel matrix, as a Hermitian matrix.
pub(crate) fn gram(g: &ComplexMatrix) -> Result<HermitianMatrix, DesignError> {
    Ok(HermitianMatrix::new(&g.mul(&g.adjoint()))?)
}

/// Spec of a real symmetric psd cone block of the given dimension.
pub fn psd_block(dim: usize) -> sdp_core::ConeBlockSpec {
    sdp_core::ConeBlockSpec {
        kind: sdp_core::BlockKind::PsdRealSymmetric,
        dim,
    }
}

/// Eavesdropper list with a zero-channel stand-in when the instance has
/// none, so every design model keeps at least one rate constraint.
pub(crate) fn effective_eves(instance: &channel_model::ChannelInstance) -> Vec<ComplexMatrix> {
    if instance.num_eves() == 0 {
        vec![ComplexMatrix::zeros(instance.n_t(), 1)]
    } else {
        instance.eves().to_vec()
    }
}

/// Maps non-optimal solver exits to design errors.
pub fn expect_optimal(sol: sdp_core::SdpSolution) -> Result<sdp_core::SdpSolution, DesignError> {
    use sdp_core::SdpStatus;
    match sol.status {
        SdpStatus::Optimal => Ok(sol),
        SdpStatus::PrimalInfeasible => {
            let certificate = sol.certificate.ok_or_else(|| DesignError::Internal {
                detail: "infeasible exit without a certificate".into(),
            })?;
            Err(DesignError::Infeasible {
                certificate: Box::new(certificate),
            })
        }
        SdpStatus::DualInfeasibleOrUnbounded => Err(DesignError::Internal {
            detail: "a bounded design model reported an unbounded objective".into(),
        }),
        SdpStatus::SlowProgress => Err(DesignError::SlowProgress {
            iterations: sol.iterations,
        }),
    }
}
