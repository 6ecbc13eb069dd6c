//! Fitting decomposition of a single linear operator.
//!
//! For an operator `a` on a space of dimension `n`, the chains
//! `ker a ⊆ ker a² ⊆ …` and `im a ⊇ im a² ⊇ …` both stabilize by step `n`,
//! so `V = ker aⁿ ⊕ im aⁿ`.  The first summand is the null component (where
//! `a` acts nilpotently), the second the one component (where `a` is
//! invertible).

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingPair {
    pub null_component: Subspace,
    pub one_component: Subspace,
    /// Human-readable note recording which operator or family produced this
    /// decomposition.
    pub source: String,
}

impl FittingPair {
    /// Component of `v` in the null summand, written in ambient coordinates.
    /// `None` when the pair does not span (never happens for a pair built by
    /// this module) or `v` has the wrong length.
    pub fn project_to_null(&self, v: &[crate::rational::Rational]) -> Option<Vec<crate::rational::Rational>> {
        let n = self.null_component.ambient_dim();
        if v.len() != n || self.null_component.dim() + self.one_component.dim() != n {
            return None;
        }
        // Solve v = x_null + x_one against the stacked bases.
        let stacked = self
            .null_component
            .basis()
            .stack(self.one_component.basis())
            .transpose();
        let coeffs = stacked.solve(v)?;
        let d = self.null_component.dim();
        let mut out = vec![crate::rational::Rational::from_integer(0.into()); n];
        for (i, c) in coeffs[..d].iter().enumerate() {
            for (o, b) in out.iter_mut().zip(self.null_component.basis().row(i)) {
                *o = &*o + &(c * b);
            }
        }
        Some(out)
    }
}

/// Exact Fitting decomposition of a square rational matrix.
pub fn fitting_pair(a: &RationalMatrix) -> Result<FittingPair> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "Fitting decomposition needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let power = a.pow(n);
    let null_component = Subspace::kernel_of(&power);
    let one_component = Subspace::image_of(&power);
    let pair = FittingPair {
        null_component,
        one_component,
        source: format!("single operator on Q^{n}"),
    };
    verify_pair(a, &pair)?;
    Ok(pair)
}

/// Dimension of the generalized null space `ker aⁿ`; equals the algebraic
/// multiplicity of the eigenvalue zero.
pub fn zero_root_order(a: &RationalMatrix) -> Result<usize> {
    Ok(fitting_pair(a)?.null_component.dim())
}

fn verify_pair(a: &RationalMatrix, pair: &FittingPair) -> Result<()> {
    let n = a.rows();
    let null = &pair.null_component;
    let one = &pair.one_component;
    if null.dim() + one.dim() != n || !null.intersect(one)?.is_zero() {
        return Err(Error::CertificateFailed(
            "Fitting components do not form a direct sum".into(),
        ));
    }
    let restricted_null = null
        .restrict_operator(a)?
        .ok_or_else(|| Error::CertificateFailed("null component is not invariant".into()))?;
    if !restricted_null.pow(null.dim()).is_zero() {
        return Err(Error::CertificateFailed(
            "operator is not nilpotent on the null component".into(),
        ));
    }
    let restricted_one = one
        .restrict_operator(a)?
        .ok_or_else(|| Error::CertificateFailed("one component is not invariant".into()))?;
    if one.dim() > 0 && restricted_one.det() == crate::rational::rat(0) {
        return Err(Error::CertificateFailed(
            "operator is singular on the one component".into(),
        ));
    }
    Ok(())
}
