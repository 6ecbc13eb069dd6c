//! Regular elements and Cartan subalgebras.
//!
//! A subalgebra is Cartan when it is nilpotent and equals its own left
//! normalizer.  The route to one goes through Fitting theory: the null
//! component of the right multiplication of a regular element (one whose
//! zero eigenvalue has minimal algebraic multiplicity) is always a Cartan
//! subalgebra, and rationals suffice because Q is infinite.
//!
//! Regularity is certified by sampling: candidates are drawn from a fixed
//! deterministic pool (standard basis vectors, their pairwise sums and
//! differences) followed by seeded random integer vectors with coordinates
//! in [-5, 5].  Reports carry the seed and trial count so every run can be
//! reproduced.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, LeibnizAlgebra, SeriesReport};
use crate::error::{Error, Result};
use crate::fitting::{fitting_pair, zero_root_order, FittingPair};
use crate::matrix::RationalMatrix;
use crate::rational::{rat, Rational};
use crate::subspace::Subspace;

/// Outcome of a regular-element search.
#[derive(Debug, Clone)]
pub struct RegularityReport<'a> {
    pub element: Element<'a>,
    /// Algebraic multiplicity of the zero eigenvalue of the element's right
    /// multiplication operator.
    pub nullity: usize,
    /// Whether the element achieved the minimal nullity seen in the sample;
    /// the minimum itself is the (sampled) rank of the algebra.
    pub is_regular: bool,
    /// Total number of candidates examined.
    pub trials: usize,
    pub seed: u64,
}

/// The two defining conditions of a Cartan subalgebra, checked exactly.
#[derive(Debug, Clone)]
pub struct CartanCertificate {
    pub subalgebra: Subspace,
    pub nilpotency: SeriesReport,
    pub left_normalizer: Subspace,
    pub is_cartan: bool,
}

/// Fitting decomposition of the algebra with respect to the right
/// multiplication operator of `x`.
pub fn fitting_wrt_element(alg: &LeibnizAlgebra, x: &Element<'_>) -> Result<FittingPair> {
    if x.coords().len() != alg.dim() {
        return Err(Error::DimensionMismatch(
            "element does not live in this algebra".into(),
        ));
    }
    let mut pair = fitting_pair(&alg.right_mult_coords(x.coords()))?;
    pair.source = format!("right multiplication by {x}");
    Ok(pair)
}

/// Joint Fitting decomposition with respect to all right multiplications
/// from a nilpotent subalgebra `s`:
///
/// * null component: largest subspace contained in every operator's
///   generalized null space and invariant under the whole family;
/// * one component: stabilized sum of iterated images.
pub fn joint_fitting(alg: &LeibnizAlgebra, s: &Subspace) -> Result<FittingPair> {
    let restricted = alg.restrict_to_subalgebra(s)?;
    if !restricted.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let n = alg.dim();
    let ops: Vec<RationalMatrix> = s
        .basis_rows()
        .iter()
        .map(|b| alg.right_mult_coords(b))
        .collect();

    let mut null = Subspace::full(n);
    for op in &ops {
        null = null.intersect(&Subspace::kernel_of(&op.pow(n)))?;
    }
    loop {
        let mut next = null.clone();
        let constraints = null.constraint_matrix();
        if constraints.rows() > 0 {
            for op in &ops {
                next = next.intersect(&Subspace::kernel_of(&(&constraints * op)))?;
            }
        }
        if next == null {
            break;
        }
        null = next;
    }

    let mut one = Subspace::full(n);
    loop {
        let mut next = Subspace::zero(n);
        for op in &ops {
            next = next.sum(&one.map_rows(op)?)?;
        }
        if next == one {
            break;
        }
        one = next;
    }

    if null.dim() + one.dim() != n || !null.intersect(&one)?.is_zero() {
        return Err(Error::CertificateFailed(
            "joint Fitting components do not form a direct sum".into(),
        ));
    }
    Ok(FittingPair {
        null_component: null,
        one_component: one,
        source: format!("family of {} right multiplication operators", ops.len()),
    })
}

/// Left normalizer `l(s) = {x : [x, s] ⊆ s}`.
pub fn left_normalizer(alg: &LeibnizAlgebra, s: &Subspace) -> Result<Subspace> {
    normalizer_against(alg, s, |alg, b| alg.right_mult_coords(b))
}

/// Right normalizer `r(s) = {x : [s, x] ⊆ s}`.
pub fn right_normalizer(alg: &LeibnizAlgebra, s: &Subspace) -> Result<Subspace> {
    normalizer_against(alg, s, |alg, b| alg.left_mult_coords(b))
}

fn normalizer_against(
    alg: &LeibnizAlgebra,
    s: &Subspace,
    operator_of: impl Fn(&LeibnizAlgebra, &[Rational]) -> RationalMatrix,
) -> Result<Subspace> {
    let n = alg.dim();
    if s.ambient_dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "subspace lives in Q^{}, algebra has dimension {n}",
            s.ambient_dim()
        )));
    }
    let membership = s.constraint_matrix();
    let mut stacked: Option<RationalMatrix> = None;
    for b in s.basis_rows() {
        let conditions = &membership * &operator_of(alg, &b);
        stacked = Some(match stacked {
            None => conditions,
            Some(prev) => prev.stack(&conditions),
        });
    }
    match stacked {
        None => Ok(Subspace::full(n)),
        Some(m) if m.rows() == 0 => Ok(Subspace::full(n)),
        Some(m) => Ok(Subspace::kernel_of(&m)),
    }
}

/// Deterministic candidate pool for regularity searches: standard basis
/// vectors, then pairwise sums, then pairwise differences.
fn deterministic_candidates(n: usize) -> Vec<Vec<Rational>> {
    let mut pool = Vec::new();
    for i in 0..n {
        pool.push(crate::subspace::standard_vector(n, i));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = crate::subspace::standard_vector(n, i);
            v[j] = rat(1);
            pool.push(v);
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = crate::subspace::standard_vector(n, i);
            v[j] = rat(-1);
            pool.push(v);
        }
    }
    pool
}

/// Search for an element whose right multiplication has minimal zero-root
/// multiplicity.  The sampled minimum is the rank; ties are broken in favor
/// of the earliest candidate, and a nullity of 1 stops the search early
/// since the multiplicity can never drop below 1 (right multiplications are
/// always singular).
pub fn find_regular_element(
    alg: &LeibnizAlgebra,
    seed: u64,
    random_trials: usize,
) -> Result<RegularityReport<'_>> {
    let n = alg.dim();
    if n == 0 {
        return Ok(RegularityReport {
            element: alg.zero_element(),
            nullity: 0,
            is_regular: true,
            trials: 0,
            seed,
        });
    }
    let mut best: Option<(usize, Vec<Rational>)> = None;
    let mut trials = 0;

    let mut examine = |coords: Vec<Rational>, trials: &mut usize| -> Result<bool> {
        *trials += 1;
        let nullity = zero_root_order(&alg.right_mult_coords(&coords))?;
        let improves = best.as_ref().is_none_or(|(b, _)| nullity < *b);
        if improves {
            let done = nullity == 1;
            best = Some((nullity, coords));
            return Ok(done);
        }
        Ok(false)
    };

    let mut finished = false;
    for coords in deterministic_candidates(n) {
        if examine(coords, &mut trials)? {
            finished = true;
            break;
        }
    }
    if !finished {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..random_trials {
            let coords: Vec<Rational> = (0..n).map(|_| rat(rng.random_range(-5..=5))).collect();
            if examine(coords, &mut trials)? {
                break;
            }
        }
    }

    let (nullity, coords) = best.expect("at least one candidate was examined");
    Ok(RegularityReport {
        element: alg.element(coords)?,
        nullity,
        is_regular: true,
        trials,
        seed,
    })
}

/// Sampled rank: the minimal zero-root multiplicity over the search pool.
pub fn rank(alg: &LeibnizAlgebra, seed: u64, random_trials: usize) -> Result<usize> {
    Ok(find_regular_element(alg, seed, random_trials)?.nullity)
}

/// Certify that a subspace is a Cartan subalgebra.  The certificate records
/// the nilpotency series of the restricted algebra and the left normalizer;
/// `is_cartan` is true exactly when the series reaches zero and the left
/// normalizer equals the subalgebra itself.
pub fn is_cartan(alg: &LeibnizAlgebra, s: &Subspace) -> Result<CartanCertificate> {
    if !alg.is_subalgebra(s)? {
        return Err(Error::NotASubalgebra);
    }
    let restricted = alg.restrict_to_subalgebra(s)?;
    let nilpotency = restricted.lower_central_series();
    let lnorm = left_normalizer(alg, s)?;
    let verdict = nilpotency.nilpotent && lnorm == *s;
    // Cross-check against the Fitting characterization: a nilpotent
    // subalgebra is Cartan iff it equals the null component of its own
    // joint Fitting decomposition.
    #[cfg(debug_assertions)]
    if nilpotency.nilpotent {
        let jf = joint_fitting(alg, s)?;
        debug_assert_eq!(
            verdict,
            jf.null_component == *s,
            "normalizer and Fitting characterizations disagree"
        );
    }
    Ok(CartanCertificate {
        subalgebra: s.clone(),
        nilpotency,
        left_normalizer: lnorm,
        is_cartan: verdict,
    })
}

/// Build a certified Cartan subalgebra from a regular element: take the
/// null component of its Fitting decomposition and verify both defining
/// conditions.  A failed certificate signals that the sampled element was
/// not actually regular.
pub fn cartan_from_regular<'a>(
    alg: &'a LeibnizAlgebra,
    report: &RegularityReport<'a>,
) -> Result<CartanCertificate> {
    if !report.is_regular {
        return Err(Error::CertificateFailed(
            "search did not flag the element as regular".into(),
        ));
    }
    let pair = fitting_wrt_element(alg, &report.element)?;
    let candidate = pair.null_component;
    let cert = match is_cartan(alg, &candidate) {
        Ok(cert) => cert,
        Err(Error::NotASubalgebra) => {
            return Err(Error::CertificateFailed(
                "Fitting null component is not a subalgebra".into(),
            ))
        }
        Err(e) => return Err(e),
    };
    if !cert.is_cartan {
        return Err(Error::CertificateFailed(format!(
            "null component of {} fails the Cartan conditions",
            report.element
        )));
    }
    Ok(cert)
}

/// Find an element of `s` whose single-operator Fitting decomposition
/// coincides with the joint decomposition of the whole family.  Candidates
/// are the canonical basis vectors of `s` followed by seeded random integer
/// combinations.
pub fn find_spanning_operator<'a>(
    alg: &'a LeibnizAlgebra,
    s: &Subspace,
    seed: u64,
    max_trials: usize,
) -> Result<Element<'a>> {
    let joint = joint_fitting(alg, s)?;
    let basis = s.basis_rows();
    let mut trials = 0;
    let matches = |coords: &[Rational]| -> Result<bool> {
        let pair = fitting_pair(&alg.right_mult_coords(coords))?;
        Ok(pair.null_component == joint.null_component
            && pair.one_component == joint.one_component)
    };
    for b in &basis {
        trials += 1;
        if matches(b)? {
            return alg.element(b.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while trials < max_trials {
        trials += 1;
        let mut coords = vec![Rational::zero(); alg.dim()];
        for b in &basis {
            let c = rat(rng.random_range(-5..=5));
            for (acc, v) in coords.iter_mut().zip(b) {
                *acc = &*acc + &(&c * v);
            }
        }
        if matches(&coords)? {
            return alg.element(coords);
        }
    }
    Err(Error::NotFound { trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn span(ambient: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::from_rows(
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn fitting_of_the_three_dimensional_example() {
        let l = fixtures::example_3_1();
        let z = l.basis_element(2);
        let pair = fitting_wrt_element(&l, &z).unwrap();
        assert_eq!(pair.null_component, span(3, &[&[1, 0, -1]]));
        assert_eq!(pair.one_component, span(3, &[&[1, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn regular_search_prefers_low_nullity_and_stops_early() {
        let l = fixtures::example_3_1();
        let report = find_regular_element(&l, 0, 100).unwrap();
        assert_eq!(report.nullity, 1);
        assert!(report.is_regular);
        // x and y are nilpotent (nullity 3); z is the first candidate with
        // nullity 1, so the search stops after the three basis vectors.
        assert_eq!(report.element, l.basis_element(2));
        assert_eq!(report.trials, 3);
        assert_eq!(rank(&l, 0, 100).unwrap(), 1);
    }

    #[test]
    fn cartan_of_the_three_dimensional_example() {
        let l = fixtures::example_3_1();
        let report = find_regular_element(&l, 0, 100).unwrap();
        let cert = cartan_from_regular(&l, &report).unwrap();
        assert!(cert.is_cartan);
        assert_eq!(cert.subalgebra, span(3, &[&[1, 0, -1]]));
        assert_eq!(cert.left_normalizer, cert.subalgebra);
        assert!(cert.nilpotency.nilpotent);
    }

    #[test]
    fn normalizers_of_the_certified_cartan() {
        let l = fixtures::example_3_1();
        let cartan = span(3, &[&[1, 0, -1]]);
        assert_eq!(left_normalizer(&l, &cartan).unwrap(), cartan);
        assert_eq!(
            right_normalizer(&l, &cartan).unwrap(),
            span(3, &[&[1, 0, 0], &[0, 0, 1]])
        );
    }

    #[test]
    fn nilpotent_subalgebra_with_too_big_normalizer_is_not_cartan() {
        let l = fixtures::example_3_1();
        let plane = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let cert = is_cartan(&l, &plane).unwrap();
        assert!(cert.nilpotency.nilpotent);
        assert!(cert.left_normalizer.is_full());
        assert!(!cert.is_cartan);
    }

    #[test]
    fn non_subalgebra_input_is_rejected() {
        let l = fixtures::example_3_1();
        let z_line = span(3, &[&[0, 0, 1]]);
        assert!(matches!(is_cartan(&l, &z_line), Err(Error::NotASubalgebra)));
        assert!(matches!(
            joint_fitting(&l, &z_line),
            Err(Error::NotASubalgebra)
        ));
    }

    #[test]
    fn joint_fitting_needs_a_nilpotent_family() {
        let l = fixtures::example_3_1();
        // span{x, z} is a subalgebra but not nilpotent: [x, z] = x forever.
        let s = span(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert!(l.is_subalgebra(&s).unwrap());
        assert!(matches!(joint_fitting(&l, &s), Err(Error::NotNilpotent)));
    }

    #[test]
    fn five_dimensional_example_has_rank_one() {
        let l = fixtures::example_3_2();
        let report = find_regular_element(&l, 0, 100).unwrap();
        assert_eq!(report.nullity, 1);
        assert_eq!(report.element, l.basis_element(2));
        let cert = cartan_from_regular(&l, &report).unwrap();
        assert_eq!(cert.subalgebra, span(5, &[&[0, 0, 1, 0, 0]]));
        assert!(cert.is_cartan);
    }

    #[test]
    fn joint_fitting_of_the_five_dimensional_cartan() {
        let l = fixtures::example_3_2();
        let s = span(5, &[&[0, 0, 1, 0, 0]]);
        let pair = joint_fitting(&l, &s).unwrap();
        assert_eq!(pair.null_component, s);
        assert_eq!(
            pair.one_component,
            span(
                5,
                &[
                    &[1, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 0],
                    &[0, 0, 0, 1, 0],
                    &[0, 0, 0, 0, 1]
                ]
            )
        );
    }

    #[test]
    fn spanning_operator_for_the_cartan_is_its_generator() {
        let l = fixtures::example_3_2();
        let s = span(5, &[&[0, 0, 1, 0, 0]]);
        let b = find_spanning_operator(&l, &s, 0, 100).unwrap();
        assert_eq!(b, l.basis_element(2));
    }

    #[test]
    fn nilpotent_algebra_is_its_own_cartan() {
        for l in [fixtures::heisenberg(), fixtures::filiform(4), fixtures::abelian(3)] {
            let n = l.dim();
            let report = find_regular_element(&l, 0, 50).unwrap();
            assert_eq!(report.nullity, n);
            let cert = cartan_from_regular(&l, &report).unwrap();
            assert!(cert.subalgebra.is_full());
            assert!(cert.is_cartan);
            let joint = joint_fitting(&l, &Subspace::full(n)).unwrap();
            assert!(joint.null_component.is_full());
            assert!(joint.one_component.is_zero());
        }
    }

    #[test]
    fn sl2_cartan_is_the_diagonal_line() {
        let l = fixtures::sl2();
        let report = find_regular_element(&l, 0, 100).unwrap();
        assert_eq!(report.nullity, 1);
        let cert = cartan_from_regular(&l, &report).unwrap();
        assert_eq!(cert.subalgebra, span(3, &[&[0, 0, 1]]));
    }

    #[test]
    fn solvable_family_has_rank_one() {
        for seed in [0, 1, 2, 3] {
            let l = fixtures::solvable(5, seed);
            let report = find_regular_element(&l, seed, 200).unwrap();
            assert_eq!(report.nullity, 1, "seed {seed}");
            let cert = cartan_from_regular(&l, &report).unwrap();
            assert_eq!(cert.subalgebra.dim(), 1);
        }
    }

    #[test]
    fn regular_element_can_sit_outside_its_cartan() {
        // e3 + e4 is regular in the five-dimensional example, yet does not
        // belong to span{e3}, the Cartan its Fitting null component gives.
        let l = fixtures::example_3_2();
        let x = l.element_from_i64(&[0, 0, 1, 1, 0]).unwrap();
        let pair = fitting_wrt_element(&l, &x).unwrap();
        assert_eq!(pair.null_component.dim(), 1);
        assert_eq!(pair.null_component, span(5, &[&[0, 0, 1, 0, 0]]));
        assert!(!pair.null_component.contains_vector(x.coords()));
    }

    #[test]
    fn trivial_algebra_edge_case() {
        let l = fixtures::abelian(0);
        let report = find_regular_element(&l, 0, 10).unwrap();
        assert_eq!(report.nullity, 0);
        assert_eq!(report.trials, 0);
        assert!(report.element.is_zero());
    }
}
