//! The squares ideal and the induced Lie quotient.
//!
//! In any Leibniz algebra the two-sided ideal generated by all squares
//! `[x, x]` is spanned by the basis squares `[e_i, e_i]` together with the
//! symmetrizations `[e_i, e_j] + [e_j, e_i]`, closed under bracketing by
//! basis elements on both sides.  Dividing by it kills every square, so the
//! quotient bracket is antisymmetric and the quotient is a Lie algebra.

use num_traits::{One, Zero};

use crate::algebra::{Element, LeibnizAlgebra, StructureTable};
use crate::cartan::{find_regular_element, is_cartan, CartanCertificate, RegularityReport};
use crate::error::{Error, Result};
use crate::fitting::zero_root_order;
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use crate::subspace::{standard_vector, Subspace};

/// Smallest two-sided ideal containing all squares `[x, x]`.
pub fn squares_ideal(alg: &LeibnizAlgebra) -> Subspace {
    let n = alg.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        rows.push(alg.bracket_coords(&standard_vector(n, i), &standard_vector(n, i)));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let ij = alg.bracket_coords(&standard_vector(n, i), &standard_vector(n, j));
            let ji = alg.bracket_coords(&standard_vector(n, j), &standard_vector(n, i));
            rows.push(ij.iter().zip(&ji).map(|(a, b)| a + b).collect());
        }
    }
    let mut ideal = Subspace::from_rows(n, rows).expect("square spans live in the algebra");
    let right_ops: Vec<RationalMatrix> = (0..n)
        .map(|j| alg.right_mult_coords(&standard_vector(n, j)))
        .collect();
    let left_ops: Vec<RationalMatrix> = (0..n)
        .map(|j| alg.left_mult_coords(&standard_vector(n, j)))
        .collect();
    loop {
        let mut next = ideal.clone();
        for op in right_ops.iter().chain(&left_ops) {
            next = next
                .sum(&ideal.map_rows(op).expect("operators act on the algebra"))
                .expect("sum stays in the algebra");
        }
        if next == ideal {
            return ideal;
        }
        ideal = next;
    }
}

/// The projection onto the quotient by the squares ideal, together with the
/// quotient algebra itself and a linear section.
///
/// Coordinates on the quotient correspond to the standard coordinates of
/// the source that are not pivot columns of the ideal, so pushing forward
/// amounts to reducing a vector modulo the ideal and reading off the
/// surviving coordinates.
pub struct QuotientMap<'a> {
    source: &'a LeibnizAlgebra,
    ideal: Subspace,
    quotient: LeibnizAlgebra,
    /// Standard coordinates of the source that survive in the quotient.
    complement: Vec<usize>,
    projection: RationalMatrix,
    section: RationalMatrix,
}

impl<'a> QuotientMap<'a> {
    pub fn build(alg: &'a LeibnizAlgebra) -> Result<Self> {
        let n = alg.dim();
        let ideal = squares_ideal(alg);
        if !alg.is_ideal(&ideal)? {
            return Err(Error::CertificateFailed(
                "squares span failed to close into a two-sided ideal".into(),
            ));
        }
        let complement = ideal.complement_coords();
        let m = complement.len();

        // Reduce each standard basis vector modulo the ideal and keep the
        // complement coordinates: that is the projection matrix.
        let mut projection = RationalMatrix::zeros(m, n);
        for j in 0..n {
            let reduced = reduce_mod(&ideal, &standard_vector(n, j));
            for (t, &q) in complement.iter().enumerate() {
                projection.set(t, j, reduced[q].clone());
            }
        }
        let mut section = RationalMatrix::zeros(n, m);
        for (t, &q) in complement.iter().enumerate() {
            section.set(q, t, Rational::one());
        }

        let names: Vec<String> = complement
            .iter()
            .map(|&q| alg.basis_name(q).to_string())
            .collect();
        let mut table = StructureTable::new();
        for s in 0..m {
            for t in 0..m {
                let product = alg.bracket_coords(
                    &standard_vector(n, complement[s]),
                    &standard_vector(n, complement[t]),
                );
                let image = projection.apply(&product);
                let terms: Vec<(usize, Rational)> = image
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    table.insert((s, t), terms);
                }
            }
        }
        let quotient = LeibnizAlgebra::new(m, names, table).map_err(|e| match e {
            Error::NotLeibniz { failures } => Error::QuotientNotLie(format!(
                "induced bracket violates the Leibniz identity at {failures:?}"
            )),
            other => other,
        })?;
        if !quotient.is_lie() {
            return Err(Error::QuotientNotLie(
                "induced bracket is not antisymmetric".into(),
            ));
        }
        Ok(Self {
            source: alg,
            ideal,
            quotient,
            complement,
            projection,
            section,
        })
    }

    pub fn source(&self) -> &'a LeibnizAlgebra {
        self.source
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn quotient(&self) -> &LeibnizAlgebra {
        &self.quotient
    }

    pub fn projection(&self) -> &RationalMatrix {
        &self.projection
    }

    pub fn section(&self) -> &RationalMatrix {
        &self.section
    }

    /// Source coordinates that index the quotient basis.
    pub fn surviving_coords(&self) -> &[usize] {
        &self.complement
    }

    fn check_source_element(&self, x: &Element<'_>) -> Result<()> {
        if !std::ptr::eq(self.source, x.algebra()) && *self.source != *x.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn push_element(&self, x: &Element<'_>) -> Result<Element<'_>> {
        self.check_source_element(x)?;
        self.quotient.element(self.projection.apply(x.coords()))
    }

    pub fn push_subspace(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspace lives in Q^{}, source has dimension {}",
                s.ambient_dim(),
                self.source.dim()
            )));
        }
        s.map_rows(&self.projection)
    }

    /// Canonical representative of a quotient element in the source.
    pub fn lift_element(&self, x: &Element<'_>) -> Result<Element<'a>> {
        if !std::ptr::eq(&self.quotient, x.algebra()) && self.quotient != *x.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        self.source.element(self.section.apply(x.coords()))
    }

    /// Does the image of a regular element stay regular in the quotient?
    /// Compares its zero-root multiplicity against the quotient rank found
    /// with the same search parameters.
    pub fn regularity_pushes_forward(&self, report: &RegularityReport<'_>) -> Result<bool> {
        self.check_source_element(&report.element)?;
        if self.quotient.dim() == 0 {
            return Ok(true);
        }
        let image = self.push_element(&report.element)?;
        let nullity = zero_root_order(&self.quotient.right_mult_coords(image.coords()))?;
        let quotient_rank =
            find_regular_element(&self.quotient, report.seed, report.trials.max(1))?.nullity;
        Ok(nullity == quotient_rank)
    }

    /// Does the image of a certified Cartan subalgebra stay Cartan in the
    /// quotient?
    pub fn cartan_pushes_forward(&self, cert: &CartanCertificate) -> Result<bool> {
        let image = self.push_subspace(&cert.subalgebra)?;
        Ok(is_cartan(&self.quotient, &image)?.is_cartan)
    }
}

/// Remainder of `v` after subtracting its ideal component (reduction against
/// the canonical echelon basis of the ideal).
fn reduce_mod(ideal: &Subspace, v: &[Rational]) -> Vec<Rational> {
    let mut rem = v.to_vec();
    for (row, &p) in ideal.pivot_columns().iter().enumerate() {
        if !rem[p].is_zero() {
            let factor = rem[p].clone();
            for (r, b) in rem.iter_mut().zip(ideal.basis().row(row)) {
                *r = &*r - &(&factor * b);
            }
        }
    }
    rem
}
