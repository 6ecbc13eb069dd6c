//! Leibniz algebras presented by structure constants.
//!
//! A (right) Leibniz algebra satisfies
//!
//! ```text
//! [x, [y, z]] = [[x, y], z] - [[x, z], y]
//! ```
//!
//! so every right multiplication operator `R_x : v -> [v, x]` is a
//! derivation-like map and the operator identity
//! `R_x R_y - R_y R_x = R_{[y, x]}` holds.  Unlike a Lie algebra, the
//! bracket need not be antisymmetric and squares `[x, x]` may be nonzero.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{format_rational, rat, Rational};
use crate::subspace::{standard_vector, Subspace};

pub type StructureTable = BTreeMap<(usize, usize), Vec<(usize, Rational)>>;

#[derive(Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    table: StructureTable,
}

/// Lower central series data: `terms[k]` is the span of `(k+1)`-fold
/// products, and `stabilization_index` is the 1-based position of the first
/// term that repeats forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub terms: Vec<Subspace>,
    pub nilpotent: bool,
    pub stabilization_index: usize,
}

impl LeibnizAlgebra {
    /// Build and validate an algebra.  Fails with `NotLeibniz` when the
    /// table violates the Leibniz identity.
    pub fn new(dim: usize, basis_names: Vec<String>, table: StructureTable) -> Result<Self> {
        let algebra = Self::new_unvalidated(dim, basis_names, table)?;
        let failures = algebra.validate_leibniz();
        if !failures.is_empty() {
            return Err(Error::NotLeibniz { failures });
        }
        Ok(algebra)
    }

    /// Build without checking the Leibniz identity.  Index bounds are still
    /// enforced and product lists are normalized (sorted, zero-free).
    pub fn new_unvalidated(
        dim: usize,
        basis_names: Vec<String>,
        table: StructureTable,
    ) -> Result<Self> {
        if basis_names.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} basis names for dimension {dim}",
                basis_names.len()
            )));
        }
        let mut normalized = StructureTable::new();
        for ((i, j), terms) in table {
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "table entry ({i}, {j}) out of range for dimension {dim}"
                )));
            }
            let mut combined: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, c) in terms {
                if k >= dim {
                    return Err(Error::DimensionMismatch(format!(
                        "product term index {k} out of range for dimension {dim}"
                    )));
                }
                let slot = combined.entry(k).or_insert_with(Rational::zero);
                *slot = &*slot + &c;
            }
            let cleaned: Vec<(usize, Rational)> = combined
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !cleaned.is_empty() {
                normalized.insert((i, j), cleaned);
            }
        }
        Ok(Self {
            dim,
            basis_names,
            table: normalized,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis_names[i]
    }

    pub fn structure_table(&self) -> &StructureTable {
        &self.table
    }

    /// Sparse product `[e_i, e_j]`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        self.table.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn zero_element(&self) -> Element<'_> {
        Element {
            algebra: self,
            coords: vec![Rational::zero(); self.dim],
        }
    }

    pub fn basis_element(&self, i: usize) -> Element<'_> {
        assert!(i < self.dim, "basis index out of range");
        Element {
            algebra: self,
            coords: standard_vector(self.dim, i),
        }
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<Element<'_>> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "element has {} coordinates, algebra has dimension {}",
                coords.len(),
                self.dim
            )));
        }
        Ok(Element {
            algebra: self,
            coords,
        })
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Result<Element<'_>> {
        self.element(coords.iter().map(|&n| rat(n)).collect())
    }

    /// Bilinear expansion of the bracket on raw coordinate vectors.
    pub fn bracket_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim, "left factor has wrong length");
        assert_eq!(y.len(), self.dim, "right factor has wrong length");
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let scale = xi * yj;
                for (k, c) in self.product_of_basis(i, j) {
                    out[*k] = &out[*k] + &(&scale * c);
                }
            }
        }
        out
    }

    /// Matrix of `R_x : v -> [v, x]` in the standard basis.
    pub fn right_mult_coords(&self, x: &[Rational]) -> RationalMatrix {
        assert_eq!(x.len(), self.dim, "element has wrong length");
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let column = self.bracket_coords(&standard_vector(self.dim, j), x);
            for (i, v) in column.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Matrix of `L_x : v -> [x, v]` in the standard basis.
    pub fn left_mult_coords(&self, x: &[Rational]) -> RationalMatrix {
        assert_eq!(x.len(), self.dim, "element has wrong length");
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let column = self.bracket_coords(x, &standard_vector(self.dim, j));
            for (i, v) in column.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// All basis triples `(i, j, k)` violating the Leibniz identity
    /// `[e_i, [e_j, e_k]] = [[e_i, e_j], e_k] - [[e_i, e_k], e_j]`.
    pub fn validate_leibniz(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let basis: Vec<Vec<Rational>> = (0..n).map(|i| standard_vector(n, i)).collect();
        let mut failures = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let inner = self.bracket_coords(&basis[j], &basis[k]);
                    let lhs = self.bracket_coords(&basis[i], &inner);
                    let ij = self.bracket_coords(&basis[i], &basis[j]);
                    let ik = self.bracket_coords(&basis[i], &basis[k]);
                    let first = self.bracket_coords(&ij, &basis[k]);
                    let second = self.bracket_coords(&ik, &basis[j]);
                    let holds = lhs
                        .iter()
                        .zip(first.iter().zip(&second))
                        .all(|(l, (a, b))| l == &(a - b));
                    if !holds {
                        failures.push((i, j, k));
                    }
                }
            }
        }
        failures
    }

    pub fn is_leibniz(&self) -> bool {
        self.validate_leibniz().is_empty()
    }

    /// `R_x R_y - R_y R_x - R_{[y, x]}`, which is zero in any Leibniz
    /// algebra.
    pub fn commutation_defect(&self, x: &Element<'_>, y: &Element<'_>) -> Result<RationalMatrix> {
        self.check_element(x)?;
        self.check_element(y)?;
        let rx = self.right_mult_coords(&x.coords);
        let ry = self.right_mult_coords(&y.coords);
        let yx = self.bracket_coords(&y.coords, &x.coords);
        let ryx = self.right_mult_coords(&yx);
        Ok(&(&(&rx * &ry) - &(&ry * &rx)) - &ryx)
    }

    pub fn satisfies_operator_identity(&self, x: &Element<'_>, y: &Element<'_>) -> Result<bool> {
        Ok(self.commutation_defect(x, y)?.is_zero())
    }

    /// Whether the bracket is antisymmetric, i.e. the algebra is Lie.
    pub fn is_lie(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (i..n).all(|j| {
                let ij = self.bracket_coords(&standard_vector(n, i), &standard_vector(n, j));
                let ji = self.bracket_coords(&standard_vector(n, j), &standard_vector(n, i));
                ij.iter().zip(&ji).all(|(a, b)| (a + b).is_zero())
            })
        })
    }

    /// Span of all products `[a, b]` with `a` in `a_space`, `b` in
    /// `b_space`.
    pub fn bracket_subspaces(&self, a_space: &Subspace, b_space: &Subspace) -> Result<Subspace> {
        self.check_subspace(a_space)?;
        self.check_subspace(b_space)?;
        let mut rows = Vec::new();
        for u in a_space.basis_rows() {
            for v in b_space.basis_rows() {
                rows.push(self.bracket_coords(&u, &v));
            }
        }
        Subspace::from_rows(self.dim, rows)
    }

    /// Lower central series `L^1 = L`, `L^(k+1) = [L^k, L^1]`, computed until
    /// it stabilizes.
    pub fn lower_central_series(&self) -> SeriesReport {
        let full = Subspace::full(self.dim);
        let mut terms = vec![full.clone()];
        loop {
            let last = terms.last().unwrap();
            let next = self
                .bracket_subspaces(last, &full)
                .expect("series terms live in the algebra");
            if &next == last {
                break;
            }
            terms.push(next);
        }
        let nilpotent = terms.last().unwrap().is_zero();
        let stabilization_index = terms.len();
        SeriesReport {
            terms,
            nilpotent,
            stabilization_index,
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().nilpotent
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace lives in Q^{}, algebra has dimension {}",
                s.ambient_dim(),
                self.dim
            )));
        }
        Ok(())
    }

    fn check_element(&self, x: &Element<'_>) -> Result<()> {
        if !std::ptr::eq(self, x.algebra) && *self != *x.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        let products = self.bracket_subspaces(s, s)?;
        s.contains_subspace(&products)
    }

    /// `[L, s] ⊆ s`.
    pub fn is_left_ideal(&self, s: &Subspace) -> Result<bool> {
        let products = self.bracket_subspaces(&Subspace::full(self.dim), s)?;
        s.contains_subspace(&products)
    }

    /// `[s, L] ⊆ s`.
    pub fn is_right_ideal(&self, s: &Subspace) -> Result<bool> {
        let products = self.bracket_subspaces(s, &Subspace::full(self.dim))?;
        s.contains_subspace(&products)
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        Ok(self.is_left_ideal(s)? && self.is_right_ideal(s)?)
    }

    /// Structure constants of a subalgebra in its canonical basis.
    pub fn restrict_to_subalgebra(&self, s: &Subspace) -> Result<LeibnizAlgebra> {
        self.check_subspace(s)?;
        let d = s.dim();
        let rows = s.basis_rows();
        let mut table = StructureTable::new();
        for (i, u) in rows.iter().enumerate() {
            for (j, v) in rows.iter().enumerate() {
                let product = self.bracket_coords(u, v);
                let coords = s.coordinates_of(&product).ok_or(Error::NotASubalgebra)?;
                let terms: Vec<(usize, Rational)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    table.insert((i, j), terms);
                }
            }
        }
        let names = (1..=d).map(|i| format!("b{i}")).collect();
        LeibnizAlgebra::new_unvalidated(d, names, table)
    }

    /// Right multiplication operators of the canonical basis of a
    /// subalgebra, acting on the whole algebra.
    pub fn operator_family(&self, s: &Subspace) -> Result<Vec<RationalMatrix>> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotASubalgebra);
        }
        Ok(s.basis_rows()
            .iter()
            .map(|b| self.right_mult_coords(b))
            .collect())
    }
}

impl fmt::Debug for LeibnizAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LeibnizAlgebra dim {} basis {:?}", self.dim, self.basis_names)?;
        for ((i, j), terms) in &self.table {
            let product: Vec<String> = terms
                .iter()
                .map(|(k, c)| format!("{} {}", format_rational(c), self.basis_names[*k]))
                .collect();
            writeln!(
                f,
                "  [{}, {}] = {}",
                self.basis_names[*i],
                self.basis_names[*j],
                product.join(" + ")
            )?;
        }
        Ok(())
    }
}

/// An element of a specific algebra; carries its coordinate vector in the
/// standard basis and a reference to the owning algebra so products can
/// never mix algebras silently.
#[derive(Clone)]
pub struct Element<'a> {
    algebra: &'a LeibnizAlgebra,
    coords: Vec<Rational>,
}

impl<'a> Element<'a> {
    pub fn algebra(&self) -> &'a LeibnizAlgebra {
        self.algebra
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Element<'a> {
        Element {
            algebra: self.algebra,
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Element<'_>) -> Result<Element<'a>> {
        self.algebra.check_element(other)?;
        Ok(Element {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Element<'_>) -> Result<Element<'a>> {
        self.algebra.check_element(other)?;
        Ok(Element {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn bracket(&self, other: &Element<'_>) -> Result<Element<'a>> {
        self.algebra.check_element(other)?;
        Ok(Element {
            algebra: self.algebra,
            coords: self.algebra.bracket_coords(&self.coords, &other.coords),
        })
    }

    /// Matrix of `v -> [v, self]`.
    pub fn right_mult(&self) -> RationalMatrix {
        self.algebra.right_mult_coords(&self.coords)
    }

    /// Matrix of `v -> [self, v]`.
    pub fn left_mult(&self) -> RationalMatrix {
        self.algebra.left_mult_coords(&self.coords)
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        (std::ptr::eq(self.algebra, other.algebra) || self.algebra == other.algebra)
            && self.coords == other.coords
    }
}

impl Eq for Element<'_> {}

impl fmt::Display for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !magnitude.is_one() {
                write!(f, "{} ", format_rational(&magnitude))?;
            }
            write!(f, "{}", self.algebra.basis_names[i])?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn three_dimensional_example_products() {
        let l = fixtures::example_3_1();
        let x = l.basis_element(0);
        let y = l.basis_element(1);
        let z = l.basis_element(2);
        assert_eq!(x.bracket(&z).unwrap(), x);
        assert_eq!(z.bracket(&y).unwrap(), y);
        assert_eq!(y.bracket(&z).unwrap(), y.scale(&rat(-1)));
        assert_eq!(z.bracket(&z).unwrap(), x);
        assert!(x.bracket(&x).unwrap().is_zero());
        assert!(x.bracket(&y).unwrap().is_zero());
        // Not a Lie algebra: [z, z] = x is a nonzero square.
        assert!(!l.is_lie());
        assert!(l.is_leibniz());
    }

    #[test]
    fn right_multiplication_matrices() {
        let l = fixtures::example_3_1();
        let rz = l.basis_element(2).right_mult();
        assert_eq!(
            rz,
            RationalMatrix::from_i64_rows(&[&[1, 0, 1], &[0, -1, 0], &[0, 0, 0]])
        );
        let rx = l.basis_element(0).right_mult();
        assert!(rx.is_zero());
        // L_z acts by [z, v]: [z, y] = y and [z, z] = x.
        let lz = l.basis_element(2).left_mult();
        assert_eq!(
            lz,
            RationalMatrix::from_i64_rows(&[&[0, 0, 1], &[0, 1, 0], &[0, 0, 0]])
        );
    }

    #[test]
    fn bracket_is_bilinear_on_the_five_dimensional_example() {
        let l = fixtures::example_3_2();
        let a = l.element_from_i64(&[1, 2, 0, -1, 3]).unwrap();
        let b = l.element_from_i64(&[0, 1, 1, 0, -2]).unwrap();
        let c = l.element_from_i64(&[2, 0, 0, 5, 1]).unwrap();
        let left = a.add(&b).unwrap().bracket(&c).unwrap();
        let right = a.bracket(&c).unwrap().add(&b.bracket(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn validation_catches_a_broken_table() {
        let l = fixtures::example_3_1();
        let mut table = l.structure_table().clone();
        // Corrupt [x, z] = x into [x, z] = y.
        table.insert((0, 2), vec![(1, rat(1))]);
        let broken = LeibnizAlgebra::new_unvalidated(3, l.basis_names().to_vec(), table).unwrap();
        let failures = broken.validate_leibniz();
        assert!(!failures.is_empty());
        assert!(LeibnizAlgebra::new(
            3,
            l.basis_names().to_vec(),
            broken.structure_table().clone()
        )
        .is_err());
    }

    #[test]
    fn operator_identity_matches_validation() {
        let valid = fixtures::example_3_2();
        for i in 0..valid.dim() {
            for j in 0..valid.dim() {
                assert!(valid
                    .satisfies_operator_identity(&valid.basis_element(i), &valid.basis_element(j))
                    .unwrap());
            }
        }
    }

    #[test]
    fn mismatched_algebras_cannot_be_bracketed() {
        let a = fixtures::example_3_1();
        let b = fixtures::abelian(3);
        let x = a.basis_element(0);
        let y = b.basis_element(0);
        assert_eq!(x.bracket(&y), Err(Error::AlgebraMismatch));
        assert_eq!(x.add(&y), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn series_of_the_three_dimensional_example() {
        let l = fixtures::example_3_1();
        let report = l.lower_central_series();
        // L^2 = span{x, y} and the series stops there: not nilpotent.
        assert_eq!(report.terms.len(), 2);
        assert_eq!(report.stabilization_index, 2);
        assert!(!report.nilpotent);
        let squares = Subspace::from_rows(
            3,
            vec![standard_vector(3, 0), standard_vector(3, 1)],
        )
        .unwrap();
        assert_eq!(report.terms[1], squares);
    }

    #[test]
    fn series_of_a_nilpotent_algebra_descends_to_zero() {
        let l = fixtures::filiform(4);
        let report = l.lower_central_series();
        assert!(report.nilpotent);
        assert_eq!(report.stabilization_index, 5);
        let dims: Vec<usize> = report.terms.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![4, 3, 2, 1, 0]);
    }

    #[test]
    fn subalgebra_and_ideal_predicates() {
        let l = fixtures::example_3_1();
        // span{x} is a two-sided ideal.
        let x_line = Subspace::from_rows(3, vec![standard_vector(3, 0)]).unwrap();
        assert!(l.is_subalgebra(&x_line).unwrap());
        assert!(l.is_ideal(&x_line).unwrap());
        // span{x, y} is an ideal.
        let plane = Subspace::from_rows(
            3,
            vec![standard_vector(3, 0), standard_vector(3, 1)],
        )
        .unwrap();
        assert!(l.is_ideal(&plane).unwrap());
        // span{z} is not a subalgebra: [z, z] = x.
        let z_line = Subspace::from_rows(3, vec![standard_vector(3, 2)]).unwrap();
        assert!(!l.is_subalgebra(&z_line).unwrap());
        // span{y} is a left ideal but not a right ideal ([y, z] = -y is in
        // it, but [z, y] = y is too; and [x, y] = 0; so actually two-sided).
        let y_line = Subspace::from_rows(3, vec![standard_vector(3, 1)]).unwrap();
        assert!(l.is_left_ideal(&y_line).unwrap());
        assert!(l.is_right_ideal(&y_line).unwrap());
    }

    #[test]
    fn one_sided_ideal_example() {
        let l = fixtures::example_3_2();
        // span{e4} satisfies [e4, L] = span{e4, e5} (not inside), while
        // [L, e4] = 0.
        let e4_line = Subspace::from_rows(5, vec![standard_vector(5, 3)]).unwrap();
        assert!(l.is_left_ideal(&e4_line).unwrap());
        assert!(!l.is_right_ideal(&e4_line).unwrap());
    }

    #[test]
    fn restriction_produces_the_induced_table() {
        let l = fixtures::example_3_1();
        let plane = Subspace::from_rows(
            3,
            vec![standard_vector(3, 0), standard_vector(3, 1)],
        )
        .unwrap();
        let restricted = l.restrict_to_subalgebra(&plane).unwrap();
        assert_eq!(restricted.dim(), 2);
        // x and y multiply to zero among themselves.
        assert!(restricted.structure_table().is_empty());
        let z_line = Subspace::from_rows(3, vec![standard_vector(3, 2)]).unwrap();
        assert_eq!(
            l.restrict_to_subalgebra(&z_line),
            Err(Error::NotASubalgebra)
        );
    }

    #[test]
    fn element_display_uses_basis_names() {
        let l = fixtures::example_3_1();
        let e = l
            .element(vec![rat(1), rat(0), rat(-1)])
            .unwrap();
        assert_eq!(e.to_string(), "x - z");
        assert_eq!(l.zero_element().to_string(), "0");
        let f = l
            .element(vec![crate::rational::ratio(1, 2), rat(-2), rat(0)])
            .unwrap();
        assert_eq!(f.to_string(), "1/2 x - 2 y");
    }

    fn arb_coords(n: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-5i64..=5, n)
    }

    proptest! {
        #[test]
        fn bracket_bilinearity(a in arb_coords(5), b in arb_coords(5), c in arb_coords(5), s in -4i64..=4) {
            let l = fixtures::example_3_2();
            let x = l.element_from_i64(&a).unwrap();
            let y = l.element_from_i64(&b).unwrap();
            let z = l.element_from_i64(&c).unwrap();
            let scale = rat(s);
            // [x + s y, z] = [x, z] + s [y, z]
            let lhs = x.add(&y.scale(&scale)).unwrap().bracket(&z).unwrap();
            let rhs = x.bracket(&z).unwrap().add(&y.bracket(&z).unwrap().scale(&scale)).unwrap();
            prop_assert_eq!(lhs, rhs);
            // [z, x + s y] = [z, x] + s [z, y]
            let lhs2 = z.bracket(&x.add(&y.scale(&scale)).unwrap()).unwrap();
            let rhs2 = z.bracket(&x).unwrap().add(&z.bracket(&y).unwrap().scale(&scale)).unwrap();
            prop_assert_eq!(lhs2, rhs2);
        }

        #[test]
        fn leibniz_identity_on_random_elements(a in arb_coords(5), b in arb_coords(5), c in arb_coords(5)) {
            let l = fixtures::example_3_2();
            let x = l.element_from_i64(&a).unwrap();
            let y = l.element_from_i64(&b).unwrap();
            let z = l.element_from_i64(&c).unwrap();
            let lhs = x.bracket(&y.bracket(&z).unwrap()).unwrap();
            let rhs = x.bracket(&y).unwrap().bracket(&z).unwrap()
                .sub(&x.bracket(&z).unwrap().bracket(&y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn operator_identity_on_random_elements(a in arb_coords(3), b in arb_coords(3)) {
            let l = fixtures::example_3_1();
            let x = l.element_from_i64(&a).unwrap();
            let y = l.element_from_i64(&b).unwrap();
            prop_assert!(l.satisfies_operator_identity(&x, &y).unwrap());
        }
    }
}
