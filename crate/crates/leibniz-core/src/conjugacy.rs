//! Weight decompositions, invariant automorphisms, and conjugacy of Cartan
//! subalgebras.
//!
//! Right multiplications are derivations (that is what the Leibniz identity
//! says), so the exponential of a nilpotent right multiplication is an
//! automorphism of the algebra.  These exponentials are the invariant
//! automorphisms used here: a conjugating map is searched for as a short
//! composition `exp(R_(z_k)) ... exp(R_(z_1))` with generators drawn from
//! exact nonzero-weight root spaces of a spanning operator.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, LeibnizAlgebra};
use crate::cartan::{find_spanning_operator, fitting_wrt_element, is_cartan};
use crate::eigen::{
    generalized_eigenspaces, rational_eigenvalues, rational_root_space, ComplexSpectrum,
    EigenParams,
};
use crate::error::{Error, Result};
use crate::fitting::fitting_pair;
use crate::matrix::RationalMatrix;
use crate::quotient::squares_ideal;
use crate::rational::{rat, ratio, Rational};
use crate::subspace::Subspace;

/// Numeric weight-space decomposition with respect to one element, paired
/// with the exact zero-weight component for cross-checking.
#[derive(Debug, Clone)]
pub struct WeightDecomposition<'a> {
    pub base: Element<'a>,
    pub spectrum: ComplexSpectrum,
    /// Exact generalized null space of the right multiplication.
    pub zero_component: Subspace,
}

/// Weight decomposition of the algebra with respect to `R_b`.  The numeric
/// zero cluster must agree with the exact null component, otherwise the
/// numerics are untrustworthy and an error is raised.
pub fn weight_decomposition<'a>(
    alg: &LeibnizAlgebra,
    b: &Element<'a>,
    params: &EigenParams,
) -> Result<WeightDecomposition<'a>> {
    if *b.algebra() != *alg {
        return Err(Error::AlgebraMismatch);
    }
    let rb = alg.right_mult_coords(b.coords());
    let spectrum = generalized_eigenspaces(&rb, params)?;
    let zero_component = fitting_pair(&rb)?.null_component;
    let numeric_zero_multiplicity: usize = spectrum
        .components
        .iter()
        .filter(|c| c.eigenvalue.norm() <= params.tol_eig)
        .map(|c| c.multiplicity)
        .sum();
    if numeric_zero_multiplicity != zero_component.dim() {
        return Err(Error::CertificateFailed(format!(
            "numeric zero weight multiplicity {numeric_zero_multiplicity} disagrees with the exact null dimension {}",
            zero_component.dim()
        )));
    }
    Ok(WeightDecomposition {
        base: b.clone(),
        spectrum,
        zero_component,
    })
}

/// An automorphism generated by exponentials of nilpotent right
/// multiplications.  `generators` lists the elements whose exponentials
/// compose to `matrix`, applied left to right (the first listed factor acts
/// first).
#[derive(Debug, Clone)]
pub struct Automorphism<'a> {
    algebra: &'a LeibnizAlgebra,
    matrix: RationalMatrix,
    generators: Vec<Element<'a>>,
}

impl<'a> Automorphism<'a> {
    pub fn identity(alg: &'a LeibnizAlgebra) -> Self {
        Self {
            algebra: alg,
            matrix: RationalMatrix::identity(alg.dim()),
            generators: Vec::new(),
        }
    }

    /// Compose exponentials of the listed generators, first element first.
    pub fn from_generators(alg: &'a LeibnizAlgebra, generators: Vec<Element<'a>>) -> Result<Self> {
        let mut result = Self::identity(alg);
        for g in generators {
            result = result.compose(&exp_right_mult(alg, &g)?)?;
        }
        Ok(result)
    }

    pub fn algebra(&self) -> &'a LeibnizAlgebra {
        self.algebra
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn generators(&self) -> &[Element<'a>] {
        &self.generators
    }

    pub fn apply(&self, x: &Element<'_>) -> Result<Element<'a>> {
        if *x.algebra() != *self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        self.algebra.element(self.matrix.apply(x.coords()))
    }

    pub fn map_subspace(&self, s: &Subspace) -> Result<Subspace> {
        s.map_rows(&self.matrix)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Automorphism<'a>) -> Result<Automorphism<'a>> {
        if *self.algebra != *other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(Automorphism {
            algebra: self.algebra,
            matrix: &other.matrix * &self.matrix,
            generators,
        })
    }

    /// Inverse automorphism: generators reversed and negated.
    pub fn inverse(&self) -> Result<Automorphism<'a>> {
        let generators: Vec<Element<'a>> = self
            .generators
            .iter()
            .rev()
            .map(|g| g.scale(&rat(-1)))
            .collect();
        let inv = Self::from_generators(self.algebra, generators)?;
        debug_assert_eq!(
            &inv.matrix * &self.matrix,
            RationalMatrix::identity(self.algebra.dim())
        );
        Ok(inv)
    }

    /// Exact check of the automorphism property on all basis pairs.
    pub fn preserves_bracket(&self) -> bool {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let ei = self.algebra.basis_element(i);
                let ej = self.algebra.basis_element(j);
                let lhs = self
                    .apply(&ei.bracket(&ej).expect("same algebra"))
                    .expect("same algebra");
                let rhs = self
                    .apply(&ei)
                    .expect("same algebra")
                    .bracket(&self.apply(&ej).expect("same algebra"))
                    .expect("same algebra");
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

fn exp_nilpotent(m: &RationalMatrix) -> RationalMatrix {
    let n = m.rows();
    let mut acc = RationalMatrix::identity(n);
    let mut power = RationalMatrix::identity(n);
    let mut factorial = BigInt::one();
    for k in 1..=n {
        power = &power * m;
        if power.is_zero() {
            break;
        }
        factorial *= k;
        acc = &acc + &power.scale(&Rational::new(BigInt::one(), factorial.clone()));
    }
    acc
}

/// Exponential of the right multiplication by `z`.  The operator must be
/// nilpotent, so the series is a finite sum and stays rational; the result
/// is verified to preserve the bracket exactly.
pub fn exp_right_mult<'a>(alg: &'a LeibnizAlgebra, z: &Element<'a>) -> Result<Automorphism<'a>> {
    if *z.algebra() != *alg {
        return Err(Error::AlgebraMismatch);
    }
    let rz = alg.right_mult_coords(z.coords());
    if !rz.pow(alg.dim()).is_zero() {
        return Err(Error::NotNilpotent);
    }
    let auto = Automorphism {
        algebra: alg,
        matrix: exp_nilpotent(&rz),
        generators: vec![z.clone()],
    };
    if !auto.preserves_bracket() {
        return Err(Error::CertificateFailed(
            "exponential failed to preserve the bracket".into(),
        ));
    }
    Ok(auto)
}

/// Congruence of an element with its zero-weight component modulo the
/// squares ideal.
///
/// Hypotheses, each checked exactly (violations are reported as
/// `HypothesisViolated`):
/// 1. the generalized null space of `R_b` is a Cartan subalgebra;
/// 2. `R_b^k x` lies in the squares ideal;
/// 3. `x` differs from its null-component projection `x0`.
///
/// Returns whether `x - x0` lies in the squares ideal.
pub fn check_null_coset(
    alg: &LeibnizAlgebra,
    x: &Element<'_>,
    b: &Element<'_>,
    k: usize,
) -> Result<bool> {
    let ideal = squares_ideal(alg);
    let pair = fitting_wrt_element(alg, b)?;
    let cartan = match is_cartan(alg, &pair.null_component) {
        Ok(cert) => cert.is_cartan,
        Err(Error::NotASubalgebra) => false,
        Err(e) => return Err(e),
    };
    if !cartan {
        return Err(Error::HypothesisViolated(
            "the null component of the base element is not a Cartan subalgebra".into(),
        ));
    }
    let rb = alg.right_mult_coords(b.coords());
    let iterated = rb.pow(k).apply(x.coords());
    if !ideal.contains_vector(&iterated) {
        return Err(Error::HypothesisViolated(format!(
            "iterated right bracket with the base element stays outside the squares ideal after {k} step(s)"
        )));
    }
    let x0 = pair
        .project_to_null(x.coords())
        .expect("Fitting pair spans the algebra");
    if x0 == x.coords() {
        return Err(Error::HypothesisViolated(
            "element equals its null component".into(),
        ));
    }
    let difference: Vec<Rational> = x.coords().iter().zip(&x0).map(|(a, b)| a - b).collect();
    Ok(ideal.contains_vector(&difference))
}

fn advance_tuple(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Nilpotent generator directions for the conjugacy search: exact root
/// spaces of nonzero rational weights when the spectrum splits over Q, and
/// otherwise basis vectors of the one component, always filtered down to
/// elements with nilpotent right multiplication.
fn generator_pool(alg: &LeibnizAlgebra, rb: &RationalMatrix) -> Result<Vec<Vec<Rational>>> {
    let n = alg.dim();
    let mut pool = Vec::new();
    let push_if_nilpotent = |coords: Vec<Rational>, pool: &mut Vec<Vec<Rational>>| {
        let rz = alg.right_mult_coords(&coords);
        if rz.pow(n).is_zero() && !coords.iter().all(Zero::is_zero) {
            pool.push(coords);
        }
    };
    if let Some(roots) = rational_eigenvalues(rb)? {
        for (lambda, _) in roots.iter().filter(|(l, _)| !l.is_zero()) {
            let space = rational_root_space(rb, lambda)?;
            for row in space.basis_rows() {
                push_if_nilpotent(row, &mut pool);
            }
        }
    }
    if pool.is_empty() {
        let pair = fitting_pair(rb)?;
        for row in pair.one_component.basis_rows() {
            push_if_nilpotent(row, &mut pool);
        }
    }
    Ok(pool)
}

/// Search for an invariant automorphism carrying `c1` onto `c2`.
///
/// Strategy, all deterministic for a fixed seed:
/// 1. exact linear solve for a single factor `I + t R_z` whenever `R_z`
///    squares to zero;
/// 2. grid search over compositions of up to four exponentials with
///    coefficients from {±1, ±1/2, ±2};
/// 3. seeded random rational coefficients until the budget runs out.
///
/// Every candidate is tested exactly; a returned automorphism provably maps
/// `c1` onto `c2`.
pub fn conjugate_cartan<'a>(
    alg: &'a LeibnizAlgebra,
    c1: &Subspace,
    c2: &Subspace,
    seed: u64,
    budget: usize,
) -> Result<Automorphism<'a>> {
    for (label, c) in [("first", c1), ("second", c2)] {
        let ok = match is_cartan(alg, c) {
            Ok(cert) => cert.is_cartan,
            Err(Error::NotASubalgebra) => false,
            Err(e) => return Err(e),
        };
        if !ok {
            return Err(Error::CertificateFailed(format!(
                "{label} subspace is not a Cartan subalgebra"
            )));
        }
    }
    if c1 == c2 {
        return Ok(Automorphism::identity(alg));
    }
    if c1.dim() != c2.dim() {
        return Err(Error::NotFound { trials: 0 });
    }

    let b = find_spanning_operator(alg, c1, seed, 200.min(budget.max(1)))?;
    let rb = alg.right_mult_coords(b.coords());
    let pool = generator_pool(alg, &rb)?;
    let n = alg.dim();
    let mut trials = 0usize;

    let target_constraints = c2.constraint_matrix();
    let accept = |matrix: &RationalMatrix| -> Result<bool> {
        Ok(c1.map_rows(matrix)? == *c2)
    };
    let finish = |generators: Vec<Vec<Rational>>| -> Result<Automorphism<'a>> {
        let elements: Result<Vec<Element<'a>>> =
            generators.into_iter().map(|g| alg.element(g)).collect();
        let auto = Automorphism::from_generators(alg, elements?)?;
        if !accept(&auto.matrix)? {
            return Err(Error::CertificateFailed(
                "assembled automorphism does not map the source onto the target".into(),
            ));
        }
        Ok(auto)
    };

    // Phase 1: exact coefficient solve for square-zero directions.
    for z in &pool {
        let rz = alg.right_mult_coords(z);
        if !(&rz * &rz).is_zero() {
            continue;
        }
        if trials >= budget {
            return Err(Error::NotFound { trials });
        }
        trials += 1;
        // delta_t = I + t R_z must send every basis vector of c1 into c2:
        // constraint rows give alpha + t beta = 0 exactly.
        let mut t: Option<Rational> = None;
        let mut consistent = true;
        let mut pairs = Vec::new();
        for v in c1.basis_rows() {
            let alpha = target_constraints.apply(&v);
            let beta = target_constraints.apply(&rz.apply(&v));
            pairs.extend(alpha.into_iter().zip(beta));
        }
        for (alpha, beta) in &pairs {
            if beta.is_zero() {
                if !alpha.is_zero() {
                    consistent = false;
                    break;
                }
            } else {
                let candidate = -(alpha / beta);
                match &t {
                    None => t = Some(candidate),
                    Some(existing) if *existing != candidate => {
                        consistent = false;
                        break;
                    }
                    _ => {}
                }
            }
        }
        if !consistent {
            continue;
        }
        let t = t.unwrap_or_else(|| rat(1));
        if t.is_zero() {
            continue;
        }
        let scaled: Vec<Rational> = z.iter().map(|c| c * &t).collect();
        let candidate = &RationalMatrix::identity(n) + &rz.scale(&t);
        if accept(&candidate)? {
            return finish(vec![scaled]);
        }
    }

    // Phase 2: grid search over compositions of exponentials.
    let grid: Vec<Rational> = vec![rat(1), rat(-1), ratio(1, 2), ratio(-1, 2), rat(2), rat(-2)];
    if !pool.is_empty() {
        // Precompute exp(t R_z) for every pool direction and coefficient.
        let mut exp_table = Vec::with_capacity(pool.len());
        for z in &pool {
            let rz = alg.right_mult_coords(z);
            let row: Vec<RationalMatrix> = grid.iter().map(|t| exp_nilpotent(&rz.scale(t))).collect();
            exp_table.push(row);
        }
        'outer: for len in 1..=4usize {
            let mut dirs = vec![0usize; len];
            loop {
                let mut coeffs = vec![0usize; len];
                loop {
                    if trials >= budget {
                        break 'outer;
                    }
                    trials += 1;
                    let mut matrix = RationalMatrix::identity(n);
                    for (d, c) in dirs.iter().zip(&coeffs) {
                        matrix = &exp_table[*d][*c] * &matrix;
                    }
                    if accept(&matrix)? {
                        let generators: Vec<Vec<Rational>> = dirs
                            .iter()
                            .zip(&coeffs)
                            .map(|(d, c)| pool[*d].iter().map(|x| x * &grid[*c]).collect())
                            .collect();
                        return finish(generators);
                    }
                    if !advance_tuple(&mut coeffs, grid.len()) {
                        break;
                    }
                }
                if !advance_tuple(&mut dirs, pool.len()) {
                    break;
                }
            }
        }

        // Phase 3: seeded random rational coefficients.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while trials < budget {
            trials += 1;
            let len = rng.random_range(1..=4usize);
            let mut matrix = RationalMatrix::identity(n);
            let mut generators = Vec::with_capacity(len);
            for _ in 0..len {
                let d = rng.random_range(0..pool.len());
                let numer = rng.random_range(-8..=8i64);
                let denom = rng.random_range(1..=3i64);
                let t = ratio(numer, denom);
                let scaled: Vec<Rational> = pool[d].iter().map(|x| x * &t).collect();
                let rz = alg.right_mult_coords(&scaled);
                matrix = &exp_nilpotent(&rz) * &matrix;
                generators.push(scaled);
            }
            if accept(&matrix)? {
                return finish(generators);
            }
        }
    }

    Err(Error::NotFound { trials })
}
