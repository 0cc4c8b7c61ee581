//! Problem container: validated blocks, coefficients, equalities, and the
//! debug dump.

use crate::SdpError;
use nalgebra::DMatrix;

/// Sparse entries (row, col, value) of one symmetric coefficient matrix.
pub type MatrixTriplets = Vec<(usize, usize, f64)>;
/// Coefficient matrices of one block, keyed by variable index.
pub type BlockCoeffs = Vec<(usize, MatrixTriplets)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    PsdRealSymmetric,
    NonnegativeScalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConeBlockSpec {
    pub kind: BlockKind,
    pub dim: usize,
}

/// One cone block: constant term plus per-variable symmetric coefficient
/// matrices stored as full triplet lists (both mirror entries present), in
/// ascending variable order.
#[derive(Debug, Clone)]
pub(crate) struct Block {
    pub spec: ConeBlockSpec,
    pub f0: DMatrix<f64>,
    pub vars: BlockCoeffs,
}

#[derive(Debug, Clone)]
pub struct SdpProblem {
    num_vars: usize,
    objective: Vec<f64>,
    pub(crate) blocks: Vec<Block>,
    equalities: Vec<(Vec<f64>, f64)>,
}

/// out += sum over vars of x[var] * F_var, using the sparse triplets.
pub(crate) fn accumulate_into(
    vars: &[(usize, MatrixTriplets)],
    x: &[f64],
    out: &mut DMatrix<f64>,
) {
    for (var, triplets) in vars {
        let xv = x[*var];
        if xv == 0.0 {
            continue;
        }
        for &(r, c, v) in triplets {
            out[(r, c)] += xv * v;
        }
    }
}

/// <F, M> for a triplet-coded symmetric F and dense M.
pub(crate) fn triplet_inner(triplets: &[(usize, usize, f64)], m: &DMatrix<f64>) -> f64 {
    triplets.iter().map(|&(r, c, v)| v * m[(r, c)]).sum()
}

/// Symmetry slop allowed in caller-supplied data before rejection; accepted
/// matrices are exactly symmetrized so the solver sees clean input.
const SYMMETRY_TOL: f64 = 1e-9;

fn check_symmetric(m: &mut DMatrix<f64>) -> bool {
    let n = m.nrows();
    let scale = 1.0 + m.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    for i in 0..n {
        for j in (i + 1)..n {
            if (m[(i, j)] - m[(j, i)]).abs() > SYMMETRY_TOL * scale {
                return false;
            }
            let avg = 0.5 * (m[(i, j)] + m[(j, i)]);
            m[(i, j)] = avg;
            m[(j, i)] = avg;
        }
    }
    true
}

impl SdpProblem {
    /// Starts a problem minimizing `objective . x`; blocks and equalities
    /// are added afterwards.
    pub fn new(objective: Vec<f64>) -> Self {
        SdpProblem {
            num_vars: objective.len(),
            objective,
            blocks: Vec::new(),
            equalities: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn objective(&self) -> &[f64] {
        &self.objective
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_specs(&self) -> Vec<ConeBlockSpec> {
        self.blocks.iter().map(|b| b.spec).collect()
    }

    pub(crate) fn equalities(&self) -> &[(Vec<f64>, f64)] {
        &self.equalities
    }

    /// Adds one cone block: `f0` is the constant term, `vars` maps variable
    /// index to the sparse entries of its symmetric coefficient matrix
    /// (either triangle or both; entries are accumulated, symmetry-checked,
    /// and stored in canonical mirrored form).
    pub fn add_block(
        &mut self,
        spec: ConeBlockSpec,
        f0: DMatrix<f64>,
        vars: BlockCoeffs,
    ) -> Result<(), SdpError> {
        let block = self.blocks.len();
        let dim = spec.dim;
        if spec.kind == BlockKind::NonnegativeScalar && dim != 1 {
            return Err(SdpError::ScalarBlockNotOneDim { block, dim });
        }
        if f0.nrows() != dim || f0.ncols() != dim {
            return Err(SdpError::BlockDimMismatch {
                block,
                declared: dim,
                got: f0.nrows().max(f0.ncols()),
            });
        }
        if f0.iter().any(|v| !v.is_finite()) {
            return Err(SdpError::NonFinite {
                context: "block constant term",
            });
        }
        let mut f0 = f0;
        if !check_symmetric(&mut f0) {
            return Err(SdpError::AsymmetricConstant { block });
        }

        let mut cleaned: BlockCoeffs = Vec::new();
        let mut sorted = vars;
        sorted.sort_by_key(|(var, _)| *var);
        for window in sorted.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(SdpError::DuplicateVariable {
                    block,
                    var: window[0].0,
                });
            }
        }
        for (var, triplets) in sorted {
            if var >= self.num_vars {
                return Err(SdpError::VarOutOfRange {
                    block,
                    var,
                    num_vars: self.num_vars,
                });
            }
            let mut dense = DMatrix::<f64>::zeros(dim, dim);
            for &(r, c, v) in &triplets {
                if r >= dim || c >= dim {
                    return Err(SdpError::EntryOutOfRange {
                        block,
                        row: r,
                        col: c,
                        dim,
                    });
                }
                if !v.is_finite() {
                    return Err(SdpError::NonFinite {
                        context: "block coefficient",
                    });
                }
                dense[(r, c)] += v;
            }
            if !check_symmetric(&mut dense) {
                return Err(SdpError::AsymmetricCoefficient { block, var });
            }
            let mut full = Vec::new();
            for r in 0..dim {
                for c in 0..dim {
                    if dense[(r, c)] != 0.0 {
                        full.push((r, c, dense[(r, c)]));
                    }
                }
            }
            if !full.is_empty() {
                cleaned.push((var, full));
            }
        }
        self.blocks.push(Block {
            spec,
            f0,
            vars: cleaned,
        });
        Ok(())
    }

    /// Convenience for a nonnegative-scalar block: f0 + coeffs . x >= 0.
    pub fn add_scalar_block(
        &mut self,
        f0: f64,
        coeffs: Vec<(usize, f64)>,
    ) -> Result<(), SdpError> {
        self.add_block(
            ConeBlockSpec {
                kind: BlockKind::NonnegativeScalar,
                dim: 1,
            },
            DMatrix::from_element(1, 1, f0),
            coeffs
                .into_iter()
                .map(|(var, v)| (var, vec![(0, 0, v)]))
                .collect(),
        )
    }

    /// Adds the linear equality `a . x = b`.
    pub fn add_equality(&mut self, a: Vec<f64>, b: f64) -> Result<(), SdpError> {
        let index = self.equalities.len();
        if a.len() != self.num_vars {
            return Err(SdpError::EqualityLenMismatch {
                index,
                got: a.len(),
                num_vars: self.num_vars,
            });
        }
        if a.iter().chain([&b]).any(|v| !v.is_finite()) {
            return Err(SdpError::NonFinite {
                context: "equality row",
            });
        }
        self.equalities.push((a, b));
        Ok(())
    }

    /// Full well-formedness check run by the solver before any numeric work.
    pub(crate) fn validate(&self) -> Result<(), SdpError> {
        if self.num_vars == 0 {
            return Err(SdpError::NoVariables);
        }
        if self.blocks.is_empty() {
            return Err(SdpError::NoBlocks);
        }
        if self.objective.iter().any(|v| !v.is_finite()) {
            return Err(SdpError::NonFinite {
                context: "objective",
            });
        }
        let mut constrained = vec![false; self.num_vars];
        for block in &self.blocks {
            for (var, _) in &block.vars {
                constrained[*var] = true;
            }
        }
        if let Some(var) = constrained.iter().position(|c| !c) {
            return Err(SdpError::UnconstrainedVariable { var });
        }
        Ok(())
    }

    /// Text dump in a sparse-triplet format, for bug reports. Lines:
    /// `vars <n>`, `c <var> <value>`, `block <index> <psd|nonneg> <dim>`,
    /// `f <block> <var> <row> <col> <value>` (var = -1 is the constant
    /// term), `eq <index> <var> <coeff>`, `rhs <index> <value>`.
    pub fn dump_string(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "vars {}", self.num_vars);
        for (i, c) in self.objective.iter().enumerate() {
            if *c != 0.0 {
                let _ = writeln!(out, "c {i} {c:e}");
            }
        }
        for (j, block) in self.blocks.iter().enumerate() {
            let kind = match block.spec.kind {
                BlockKind::PsdRealSymmetric => "psd",
                BlockKind::NonnegativeScalar => "nonneg",
            };
            let _ = writeln!(out, "block {j} {kind} {}", block.spec.dim);
            for r in 0..block.spec.dim {
                for c in 0..block.spec.dim {
                    if block.f0[(r, c)] != 0.0 {
                        let _ = writeln!(out, "f {j} -1 {r} {c} {:e}", block.f0[(r, c)]);
                    }
                }
            }
            for (var, triplets) in &block.vars {
                for &(r, c, v) in triplets {
                    let _ = writeln!(out, "f {j} {var} {r} {c} {v:e}");
                }
            }
        }
        for (k, (a, b)) in self.equalities.iter().enumerate() {
            for (i, coeff) in a.iter().enumerate() {
                if *coeff != 0.0 {
                    let _ = writeln!(out, "eq {k} {i} {coeff:e}");
                }
            }
            let _ = writeln!(out, "rhs {k} {b:e}");
        }
        out
    }

    /// Writes `dump_string` to a file.
    pub fn dump_to(&self, path: impl AsRef<std::path::Path>) -> std::io::Result<()> {
        std::fs::write(path, self.dump_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psd(dim: usize) -> ConeBlockSpec {
        ConeBlockSpec {
            kind: BlockKind::PsdRealSymmetric,
            dim,
        }
    }

    #[test]
    fn asymmetric_coefficient_is_rejected() {
        let mut p = SdpProblem::new(vec![1.0]);
        let err = p.add_block(
            psd(2),
            DMatrix::zeros(2, 2),
            vec![(0, vec![(0, 1, 1.0), (1, 0, -1.0)])],
        );
        assert!(matches!(
            err,
            Err(SdpError::AsymmetricCoefficient { block: 0, var: 0 })
        ));
    }

    #[test]
    fn mirror_entries_are_accepted_and_merged() {
        let mut p = SdpProblem::new(vec![1.0]);
        p.add_block(
            psd(2),
            DMatrix::zeros(2, 2),
            vec![(0, vec![(0, 1, 0.5), (1, 0, 0.5), (0, 0, 2.0)])],
        )
        .unwrap();
        let triplets = &p.blocks[0].vars[0].1;
        assert_eq!(triplets.len(), 3);
        assert!(triplets.contains(&(0, 1, 0.5)));
        assert!(triplets.contains(&(1, 0, 0.5)));
        assert!(triplets.contains(&(0, 0, 2.0)));
    }

    #[test]
    fn lone_triangle_entry_is_rejected() {
        // An upper-triangle-only off-diagonal entry fails the symmetry check:
        // callers must supply both mirror halves (or none).
        let mut p = SdpProblem::new(vec![1.0]);
        let err = p.add_block(psd(2), DMatrix::zeros(2, 2), vec![(0, vec![(0, 1, 1.0)])]);
        assert!(matches!(err, Err(SdpError::AsymmetricCoefficient { .. })));
    }

    #[test]
    fn unconstrained_variable_fails_validation() {
        let mut p = SdpProblem::new(vec![1.0, 1.0]);
        p.add_scalar_block(0.0, vec![(0, 1.0)]).unwrap();
        assert!(matches!(
            p.validate(),
            Err(SdpError::UnconstrainedVariable { var: 1 })
        ));
    }

    #[test]
    fn scalar_block_dim_is_enforced() {
        let mut p = SdpProblem::new(vec![1.0]);
        let err = p.add_block(
            ConeBlockSpec {
                kind: BlockKind::NonnegativeScalar,
                dim: 2,
            },
            DMatrix::zeros(2, 2),
            vec![],
        );
        assert!(matches!(err, Err(SdpError::ScalarBlockNotOneDim { .. })));
    }

    #[test]
    fn dump_round_trips_visually() {
        let mut p = SdpProblem::new(vec![1.0, 0.0]);
        p.add_scalar_block(-3.0, vec![(0, 1.0)]).unwrap();
        p.add_block(
            psd(2),
            DMatrix::identity(2, 2),
            vec![(1, vec![(0, 0, 1.0), (1, 1, -1.0)])],
        )
        .unwrap();
        p.add_equality(vec![1.0, -1.0], 0.5).unwrap();
        let dump = p.dump_string();
        assert!(dump.contains("vars 2"));
        assert!(dump.contains("block 0 nonneg 1"));
        assert!(dump.contains("block 1 psd 2"));
        assert!(dump.contains("f 0 -1 0 0 -3e0"));
        assert!(dump.contains("eq 0 0 1e0"));
        assert!(dump.contains("rhs 0 5e-1"));
    }
}
