//! Numerical spectra with exact cross-checks.
//!
//! The exact layer handles everything rational; this module covers the rest.
//! Operators are lowered to `f64`, eigenvalues come from a Schur
//! factorization, and nearby values are merged into clusters.  Generalized
//! eigenspaces are read off the singular value decomposition of
//! `(A - lambda I)^n`.  Residuals are reported so callers can judge the
//! computation, and an exact path recovers the spectrum over Q whenever the
//! characteristic polynomial splits rationally.

use nalgebra::{Complex, DMatrix};
use num_traits::ToPrimitive;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{deflate_poly, eval_poly, RationalMatrix};
use crate::rational::{rationalize, Rational};
use crate::subspace::Subspace;

pub type C64 = Complex<f64>;

#[derive(Debug, Clone, Copy)]
pub struct EigenParams {
    /// Eigenvalues closer than this are treated as equal.
    pub tol_eig: f64,
    /// Upper bound accepted for `|(A - lambda I)^n v|` on unit basis vectors.
    pub tol_res: f64,
}

impl Default for EigenParams {
    fn default() -> Self {
        Self {
            tol_eig: 1e-8,
            tol_res: 1e-8,
        }
    }
}

/// One clustered eigenvalue with its generalized eigenspace.
#[derive(Debug, Clone)]
pub struct SpectralComponent {
    /// Cluster centroid.
    pub eigenvalue: C64,
    /// Algebraic multiplicity (cluster size).
    pub multiplicity: usize,
    /// Orthonormal basis of the generalized eigenspace, one vector per entry.
    pub basis: Vec<Vec<C64>>,
    /// Largest `|(A - lambda I)^n v|` over the basis vectors.
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct ComplexSpectrum {
    pub components: Vec<SpectralComponent>,
    pub ambient_dim: usize,
}

impl ComplexSpectrum {
    pub fn max_residual(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.residual)
            .fold(0.0, f64::max)
    }

    /// Multiplicities always add up to the ambient dimension.
    pub fn total_multiplicity(&self) -> usize {
        self.components.iter().map(|c| c.multiplicity).sum()
    }
}

fn to_f64_matrix(a: &RationalMatrix) -> DMatrix<f64> {
    DMatrix::from_fn(a.rows(), a.cols(), |i, j| {
        a.at(i, j).to_f64().expect("rational fits in f64")
    })
}

fn to_complex_matrix(a: &RationalMatrix) -> DMatrix<C64> {
    DMatrix::from_fn(a.rows(), a.cols(), |i, j| {
        C64::new(a.at(i, j).to_f64().expect("rational fits in f64"), 0.0)
    })
}

/// Deterministic single-linkage clustering of eigenvalues.
fn cluster_eigenvalues(mut values: Vec<C64>, tol: f64) -> Vec<(C64, usize)> {
    values.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (values[i] - values[j]).norm() <= tol {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut clusters: Vec<(C64, usize)> = Vec::new();
    let mut cluster_of = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if cluster_of[root] == usize::MAX {
            cluster_of[root] = clusters.len();
            clusters.push((C64::new(0.0, 0.0), 0));
        }
        let idx = cluster_of[root];
        clusters[idx].0 += values[i];
        clusters[idx].1 += 1;
    }
    for c in &mut clusters {
        c.0 /= c.1 as f64;
    }
    clusters.sort_by(|a, b| {
        a.0.re
            .partial_cmp(&b.0.re)
            .unwrap()
            .then(a.0.im.partial_cmp(&b.0.im).unwrap())
    });
    clusters
}

/// Cluster the numerical eigenvalues of `a` and compute a basis of each
/// generalized eigenspace.  Fails with `FailsToSeparate` when two distinct
/// clusters sit closer than ten times the clustering tolerance, since the
/// assignment of multiplicities would then be unreliable.
pub fn generalized_eigenspaces(a: &RationalMatrix, params: &EigenParams) -> Result<ComplexSpectrum> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "spectrum needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(ComplexSpectrum {
            components: Vec::new(),
            ambient_dim: 0,
        });
    }
    let numeric = to_f64_matrix(a);
    let eigenvalues: Vec<C64> = numeric.complex_eigenvalues().iter().copied().collect();
    let clusters = cluster_eigenvalues(eigenvalues, params.tol_eig);
    for i in 0..clusters.len() {
        for j in (i + 1)..clusters.len() {
            let gap = (clusters[i].0 - clusters[j].0).norm();
            if gap < 10.0 * params.tol_eig {
                return Err(Error::FailsToSeparate(format!(
                    "clusters at {} and {} are {gap:.3e} apart (limit {:.3e})",
                    clusters[i].0,
                    clusters[j].0,
                    10.0 * params.tol_eig
                )));
            }
        }
    }
    let complex = to_complex_matrix(a);
    let identity = DMatrix::<C64>::identity(n, n);
    let mut components = Vec::with_capacity(clusters.len());
    for (lambda, multiplicity) in clusters {
        let shifted = &complex - &identity * lambda;
        let power = shifted.pow(n as u32);
        let svd = power.clone().svd(false, true);
        let v_t = svd.v_t.expect("requested right singular vectors");
        // Singular values are sorted in decreasing order; the kernel basis is
        // the conjugated tail of V^H.
        let mut basis = Vec::with_capacity(multiplicity);
        let mut residual = 0.0f64;
        for row in (n - multiplicity)..n {
            let vector: Vec<C64> = (0..n).map(|c| v_t[(row, c)].conj()).collect();
            let image = &power * DMatrix::from_column_slice(n, 1, &vector);
            residual = residual.max(image.norm());
            basis.push(vector);
        }
        components.push(SpectralComponent {
            eigenvalue: lambda,
            multiplicity,
            basis,
            residual,
        });
    }
    Ok(ComplexSpectrum {
        components,
        ambient_dim: n,
    })
}

/// Exact spectrum over Q, when it exists.
///
/// Numerical eigenvalues only guide the search: each candidate is rounded to
/// a nearby rational, verified as a root of the exact characteristic
/// polynomial, and divided out exactly.  Returns `None` as soon as the
/// polynomial fails to split over Q.
pub fn rational_eigenvalues(a: &RationalMatrix) -> Result<Option<Vec<(Rational, usize)>>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "spectrum needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut poly = a.char_poly();
    let numeric = to_f64_matrix(a);
    let mut candidates: Vec<Rational> = Vec::new();
    for ev in numeric.complex_eigenvalues().iter() {
        if ev.im.abs() > 1e-6 {
            continue;
        }
        if let Some(r) = rationalize(ev.re, 1_000_000) {
            if !candidates.contains(&r) {
                candidates.push(r);
            }
        }
    }
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    for r in candidates {
        let mut multiplicity = 0;
        while poly.len() > 1 && eval_poly(&poly, &r).is_zero() {
            poly = deflate_poly(&poly, &r).expect("verified root divides exactly");
            multiplicity += 1;
        }
        if multiplicity > 0 {
            roots.push((r, multiplicity));
        }
    }
    if poly.len() != 1 {
        return Ok(None);
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Some(roots))
}

/// Exact generalized eigenspace `ker (a - lambda I)^n` over Q.
pub fn rational_root_space(a: &RationalMatrix, lambda: &Rational) -> Result<Subspace> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "root space needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let shifted = a - &RationalMatrix::identity(n).scale(lambda);
    Ok(Subspace::kernel_of(&shifted.pow(n)))
}
