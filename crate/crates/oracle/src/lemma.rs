//! Determinant-versus-trace check: det(I + A) >= 1 + Tr(A) for A psd, with
//! equality exactly when A has rank at most one.

use hermitian_linalg::{hermitian_eig, HermitianMatrix};

use crate::OracleError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma1Report {
    /// det(I + A), computed as the product of (1 + lambda_i).
    pub lhs: f64,
    /// 1 + Tr(A).
    pub rhs: f64,
    /// Whether equality holds, i.e. the second eigenvalue is negligible
    /// against the first (rank at most one up to 1e-9 relative).
    pub tight: bool,
}

pub fn lemma1_check(a: &HermitianMatrix) -> Result<Lemma1Report, OracleError> {
    let (eigs, _) = hermitian_eig(a)?;
    if let Some(&min_eig) = eigs.last() {
        if min_eig < -1e-9 {
            return Err(OracleError::Indefinite { min_eig });
        }
    }
    let lhs = eigs.iter().map(|&l| 1.0 + l.max(0.0)).product();
    let rhs = 1.0 + a.trace();
    let tight = match eigs.as_slice() {
        [] | [_] => true,
        [first, second, ..] => *second <= 1e-9 * first.max(0.0),
    };
    Ok(Lemma1Report { lhs, rhs, tight })
}
