//! Subspaces of Q^n in canonical form.
//!
//! A subspace is stored as the reduced row echelon form of any spanning set,
//! with zero rows dropped.  The representation is unique, so subspace
//! equality is plain structural equality and results are reproducible
//! bit-for-bit across runs.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: RationalMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: RationalMatrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: RationalMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "spanning vector has length {}, ambient dimension is {ambient}",
                bad.len()
            )));
        }
        if rows.is_empty() {
            return Ok(Self::zero(ambient));
        }
        Ok(Self::from_matrix_rows(&RationalMatrix::from_rows(rows), ambient))
    }

    /// Span of the rows of `m`.
    pub fn from_matrix_rows(m: &RationalMatrix, ambient: usize) -> Self {
        assert_eq!(m.cols(), ambient, "row length must equal ambient dimension");
        let (r, pivots) = m.rref_with_pivots();
        let rank = pivots.len();
        let basis = RationalMatrix::from_fn(rank, ambient, |i, j| r.at(i, j).clone());
        Self { ambient, basis, pivots }
    }

    /// Null space of `m`, a subspace of Q^(cols).
    pub fn kernel_of(m: &RationalMatrix) -> Self {
        let rows = m.kernel_basis();
        Self::from_rows(m.cols(), rows).expect("kernel vectors match ambient dimension")
    }

    /// Column space of `m`, a subspace of Q^(rows).
    pub fn image_of(m: &RationalMatrix) -> Self {
        Self::from_matrix_rows(&m.transpose(), m.rows())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row, in reduced row echelon form.
    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Standard coordinates not used as pivots; the corresponding standard
    /// basis vectors span a complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces live in different ambient spaces ({} vs {})",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix_rows(
            &self.basis.stack(&other.basis),
            self.ambient,
        ))
    }

    /// Constraint matrix whose kernel is exactly this subspace: a vector
    /// belongs to the subspace iff every constraint row pairs to zero with
    /// it.  A full subspace yields an empty constraint matrix.
    pub fn constraint_matrix(&self) -> RationalMatrix {
        let rows = self.basis.kernel_basis();
        if rows.is_empty() {
            return RationalMatrix::zeros(0, self.ambient);
        }
        RationalMatrix::from_rows(rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let a = self.constraint_matrix();
        let b = other.constraint_matrix();
        let constraints = if a.rows() == 0 {
            b
        } else if b.rows() == 0 {
            a
        } else {
            a.stack(&b)
        };
        if constraints.rows() == 0 {
            return Ok(Self::full(self.ambient));
        }
        Ok(Self::kernel_of(&constraints))
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rem = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !rem[p].is_zero() {
                let factor = rem[p].clone();
                for (r, b) in rem.iter_mut().zip(self.basis.row(row)) {
                    *r = &*r - &factor * b;
                }
            }
        }
        rem.iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis_rows().iter().all(|v| self.contains_vector(v)))
    }

    /// Coefficients of `v` in the canonical basis, or `None` when `v` lies
    /// outside the subspace.  Because the basis is in reduced echelon form,
    /// the coefficient of basis row `i` is just the pivot coordinate of `v`.
    pub fn coordinates_of(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient || !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Image of this subspace under the linear map `m`.
    pub fn map_rows(&self, m: &RationalMatrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "operator expects vectors of length {}, subspace lives in Q^{}",
                m.cols(),
                self.ambient
            )));
        }
        let rows: Vec<Vec<Rational>> = self.basis_rows().iter().map(|v| m.apply(v)).collect();
        Self::from_rows(m.rows(), rows)
    }

    pub fn is_invariant_under(&self, m: &RationalMatrix) -> Result<bool> {
        let image = self.map_rows(m)?;
        if image.ambient_dim() != self.ambient {
            return Ok(false);
        }
        self.contains_subspace(&image)
    }

    /// Matrix of `m` restricted to this subspace in the canonical basis, or
    /// `None` when the subspace is not invariant.
    pub fn restrict_operator(&self, m: &RationalMatrix) -> Result<Option<RationalMatrix>> {
        if !self.is_invariant_under(m)? {
            return Ok(None);
        }
        let d = self.dim();
        let mut out = RationalMatrix::zeros(d, d);
        for (j, v) in self.basis_rows().iter().enumerate() {
            let image = m.apply(v);
            let coords = self
                .coordinates_of(&image)
                .expect("image of invariant subspace stays inside it");
            for (i, c) in coords.into_iter().enumerate() {
                out.set(i, j, c);
            }
        }
        Ok(Some(out))
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of Q^{}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

/// Canonical basis vector e_i of Q^n.
pub fn standard_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
