//! Structured analysis reports.  Every report serializes to JSON with a
//! stable field order and no floating-point formatting ambiguity, so a fixed
//! seed yields byte-identical machine output across runs; the human rendering
//! is line oriented.  Subspaces are always printed as their canonical reduced
//! row echelon bases with exact rational literals, and every randomized
//! result records the seed that produced it.

use crate::format::AlgebraDocument;
use leibniz_core::{format_rational, ComplexSpectrum, Element, Rational, RationalMatrix, Subspace};
use serde::Serialize;

/// Rational literals for one subspace: one row per canonical basis vector.
pub fn subspace_rows(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_rows()
        .iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect()
}

pub fn coords_strings(coords: &[Rational]) -> Vec<String> {
    coords.iter().map(format_rational).collect()
}

pub fn matrix_rows(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row_vec(i).iter().map(format_rational).collect())
        .collect()
}

pub fn element_fields(x: &Element<'_>) -> (Vec<String>, String) {
    (coords_strings(x.coords()), x.to_string())
}

fn rows_lines(out: &mut String, label: &str, rows: &[Vec<String>]) {
    if rows.is_empty() {
        out.push_str(&format!("{label}: (zero subspace)\n"));
        return;
    }
    out.push_str(&format!("{label}:\n"));
    for row in rows {
        out.push_str(&format!("  [{}]\n", row.join(", ")));
    }
}

/// Common rendering interface: human text for the terminal.
pub trait Human {
    fn human(&self) -> String;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Render a report in the requested format.  JSON is pretty-printed with a
/// trailing newline and a stable field order.
pub fn render<R: Serialize + Human>(report: &R, format: Format) -> String {
    match format {
        Format::Text => report.human(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports always serialize");
            s.push('\n');
            s
        }
    }
}

#[derive(Serialize)]
pub struct ValidationReport {
    pub command: &'static str,
    pub algebra: String,
    pub dim: usize,
    pub leibniz: bool,
    /// Basis triples (by label) on which the defining identity fails.
    pub failing_triples: Vec<[String; 3]>,
    pub lie: bool,
}

impl Human for ValidationReport {
    fn human(&self) -> String {
        let mut out = format!("algebra: {} (dim {})\n", self.algebra, self.dim);
        out.push_str(&format!("leibniz identity: {}\n", verdict(self.leibniz)));
        for t in &self.failing_triples {
            out.push_str(&format!("  fails on ({}, {}, {})\n", t[0], t[1], t[2]));
        }
        out.push_str(&format!("lie (antisymmetric): {}\n", yes_no(self.lie)));
        out
    }
}

#[derive(Serialize)]
pub struct InfoReport {
    pub command: &'static str,
    pub algebra: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub leibniz: bool,
    pub lie: bool,
    pub nilpotent: bool,
    /// Dimensions of the lower central series terms.
    pub series_dims: Vec<usize>,
    pub squares_ideal: Vec<Vec<String>>,
    pub squares_ideal_dim: usize,
}

impl Human for InfoReport {
    fn human(&self) -> String {
        let mut out = format!("algebra: {} (dim {})\n", self.algebra, self.dim);
        out.push_str(&format!("basis: {}\n", self.basis.join(", ")));
        out.push_str(&format!("leibniz identity: {}\n", verdict(self.leibniz)));
        out.push_str(&format!("lie (antisymmetric): {}\n", yes_no(self.lie)));
        out.push_str(&format!(
            "nilpotent: {} (lower central series dims {:?})\n",
            yes_no(self.nilpotent),
            self.series_dims
        ));
        rows_lines(
            &mut out,
            &format!("squares ideal (dim {})", self.squares_ideal_dim),
            &self.squares_ideal,
        );
        out
    }
}

#[derive(Serialize)]
pub struct SeriesOut {
    pub command: &'static str,
    pub algebra: String,
    pub nilpotent: bool,
    pub stabilization_index: usize,
    pub dims: Vec<usize>,
    pub terms: Vec<Vec<Vec<String>>>,
}

impl Human for SeriesOut {
    fn human(&self) -> String {
        let mut out = format!(
            "algebra: {}\nnilpotent: {} (stabilizes after {} terms)\n",
            self.algebra,
            yes_no(self.nilpotent),
            self.stabilization_index
        );
        for (k, term) in self.terms.iter().enumerate() {
            rows_lines(&mut out, &format!("L^{} (dim {})", k + 1, self.dims[k]), term);
        }
        out
    }
}

#[derive(Serialize)]
pub struct RegularOut {
    pub command: &'static str,
    pub algebra: String,
    pub element: Vec<String>,
    pub element_pretty: String,
    /// Algebraic multiplicity of the zero eigenvalue of the element's right
    /// multiplication operator; the sampled minimum is the rank.
    pub nullity: usize,
    pub is_regular: bool,
    pub rank: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Human for RegularOut {
    fn human(&self) -> String {
        format!(
            "algebra: {}\nregular element: {} (coords [{}])\nnullity: {}\nrank (sampled minimum): {}\ntrials: {} (seed {})\n",
            self.algebra,
            self.element_pretty,
            self.element.join(", "),
            self.nullity,
            self.rank,
            self.trials,
            self.seed
        )
    }
}

#[derive(Serialize)]
pub struct FittingOut {
    pub command: &'static str,
    pub algebra: String,
    pub element: Vec<String>,
    pub element_pretty: String,
    pub null_dim: usize,
    pub one_dim: usize,
    pub null_component: Vec<Vec<String>>,
    pub one_component: Vec<Vec<String>>,
}

impl Human for FittingOut {
    fn human(&self) -> String {
        let mut out = format!(
            "algebra: {}\nelement: {} (coords [{}])\n",
            self.algebra,
            self.element_pretty,
            self.element.join(", ")
        );
        rows_lines(
            &mut out,
            &format!("null component (dim {})", self.null_dim),
            &self.null_component,
        );
        rows_lines(
            &mut out,
            &format!("one component (dim {})", self.one_dim),
            &self.one_component,
        );
        out
    }
}

#[derive(Serialize)]
pub struct WeightOut {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    pub residual: f64,
}

#[derive(Serialize)]
pub struct WeightsOut {
    pub command: &'static str,
    pub algebra: String,
    pub element: Vec<String>,
    pub element_pretty: String,
    pub weights: Vec<WeightOut>,
    pub zero_component: Vec<Vec<String>>,
    pub max_residual: f64,
    pub tol_eig: f64,
    pub tol_res: f64,
}

impl WeightsOut {
    pub fn from_spectrum(spectrum: &ComplexSpectrum) -> Vec<WeightOut> {
        spectrum
            .components
            .iter()
            .map(|c| WeightOut {
                re: c.eigenvalue.re,
                im: c.eigenvalue.im,
                multiplicity: c.multiplicity,
                residual: c.residual,
            })
            .collect()
    }
}

impl Human for WeightsOut {
    fn human(&self) -> String {
        let mut out = format!(
            "algebra: {}\nelement: {} (coords [{}])\nweights of the right multiplication:\n",
            self.algebra,
            self.element_pretty,
            self.element.join(", ")
        );
        for w in &self.weights {
            out.push_str(&format!(
                "  {:+.6}{:+.6}i  multiplicity {}  residual {:.3e}\n",
                w.re, w.im, w.multiplicity, w.residual
            ));
        }
        rows_lines(&mut out, "exact zero-weight space", &self.zero_component);
        out.push_str(&format!(
            "max residual: {:.3e} (tol_eig {:.1e}, tol_res {:.1e})\n",
            self.max_residual, self.tol_eig, self.tol_res
        ));
        out
    }
}

#[derive(Serialize)]
pub struct CartanOut {
    pub command: &'static str,
    pub algebra: String,
    pub rank: usize,
    pub witness: Vec<String>,
    pub witness_pretty: String,
    pub cartan_dim: usize,
    pub cartan_basis: Vec<Vec<String>>,
    pub series_dims: Vec<usize>,
    pub left_normalizer: Vec<Vec<String>>,
    pub is_cartan: bool,
    pub trials: usize,
    pub seed: u64,
}

impl Human for CartanOut {
    fn human(&self) -> String {
        let mut out = format!(
            "algebra: {}\nregular element: {} (coords [{}])\nrank: {}\n",
            self.algebra,
            self.witness_pretty,
            self.witness.join(", "),
            self.rank
        );
        rows_lines(
            &mut out,
            &format!("cartan subalgebra (dim {})", self.cartan_dim),
            &self.cartan_basis,
        );
        out.push_str(&format!(
            "nilpotent: yes (series dims {:?})\nself-normalizing: {}\ncertified cartan: {}\ntrials: {} (seed {})\n",
            self.series_dims,
            yes_no(self.is_cartan),
            yes_no(self.is_cartan),
            self.trials,
            self.seed
        ));
        out
    }
}

#[derive(Serialize)]
pub struct NormalizerOut {
    pub command: &'static str,
    pub algebra: String,
    pub side: String,
    pub subspace: Vec<Vec<String>>,
    pub normalizer: Vec<Vec<String>>,
    pub normalizer_dim: usize,
    pub self_normalizing: bool,
}

impl Human for NormalizerOut {
    fn human(&self) -> String {
        let mut out = format!("algebra: {}\n", self.algebra);
        rows_lines(&mut out, "subspace", &self.subspace);
        rows_lines(
            &mut out,
            &format!("{} normalizer (dim {})", self.side, self.normalizer_dim),
            &self.normalizer,
        );
        out.push_str(&format!(
            "self-normalizing: {}\n",
            yes_no(self.self_normalizing)
        ));
        out
    }
}

#[derive(Serialize)]
pub struct IsCartanOut {
    pub command: &'static str,
    pub algebra: String,
    pub subspace: Vec<Vec<String>>,
    pub subalgebra: bool,
    pub nilpotent: bool,
    pub series_dims: Vec<usize>,
    pub left_normalizer: Vec<Vec<String>>,
    pub self_normalizing: bool,
    pub is_cartan: bool,
}

impl Human for IsCartanOut {
    fn human(&self) -> String {
        let mut out = format!("algebra: {}\n", self.algebra);
        rows_lines(&mut out, "subspace", &self.subspace);
        if !self.subalgebra {
            out.push_str("subalgebra: no (not closed under the bracket)\ncartan: FAIL\n");
            return out;
        }
        out.push_str(&format!(
            "nilpotent subalgebra: {} (series dims {:?})\n",
            yes_no(self.nilpotent),
            self.series_dims
        ));
        rows_lines(&mut out, "left normalizer", &self.left_normalizer);
        out.push_str(&format!(
            "self-normalizing: {}\ncartan: {}\n",
            yes_no(self.self_normalizing),
            verdict(self.is_cartan)
        ));
        out
    }
}

#[derive(Serialize)]
pub struct QuotientOut {
    pub command: &'static str,
    pub algebra: String,
    pub ideal_dim: usize,
    pub ideal: Vec<Vec<String>>,
    pub quotient_dim: usize,
    pub quotient_is_lie: bool,
    /// The quotient algebra in the standard document form, ready to be saved
    /// and fed back to any command.
    pub quotient: AlgebraDocument,
}

impl Human for QuotientOut {
    fn human(&self) -> String {
        let mut out = format!("algebra: {}\n", self.algebra);
        rows_lines(
            &mut out,
            &format!("squares ideal (dim {})", self.ideal_dim),
            &self.ideal,
        );
        out.push_str(&format!(
            "quotient: dim {}, lie: {}\n",
            self.quotient_dim,
            yes_no(self.quotient_is_lie)
        ));
        out.push_str(&format!("quotient basis: {}\n", self.quotient.basis.join(", ")));
        for e in &self.quotient.table {
            let terms: Vec<String> = e
                .result
                .iter()
                .map(|t| match t.coeff.as_str() {
                    "1" => t.basis.clone(),
                    "-1" => format!("-{}", t.basis),
                    c => format!("{c} {}", t.basis),
                })
                .collect();
            out.push_str(&format!(
                "  [{}, {}] = {}\n",
                e.left,
                e.right,
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join(" + ")
                }
            ));
        }
        out
    }
}

#[derive(Serialize)]
pub struct PushOut {
    pub command: &'static str,
    pub algebra: String,
    pub subspace: Vec<Vec<String>>,
    pub quotient_basis: Vec<String>,
    pub image_dim: usize,
    pub image: Vec<Vec<String>>,
}

impl Human for PushOut {
    fn human(&self) -> String {
        let mut out = format!("algebra: {}\n", self.algebra);
        rows_lines(&mut out, "subspace", &self.subspace);
        out.push_str(&format!(
            "quotient basis: {}\n",
            self.quotient_basis.join(", ")
        ));
        rows_lines(
            &mut out,
            &format!("image in the quotient (dim {})", self.image_dim),
            &self.image,
        );
        out
    }
}

#[derive(Serialize)]
pub struct ConjugateOut {
    pub command: &'static str,
    pub algebra: String,
    pub c1: Vec<Vec<String>>,
    pub c2: Vec<Vec<String>>,
    pub found: bool,
    /// Coordinates of the exponents: the automorphism is the composition of
    /// exp(R_z) over these generators, applied left to right.
    pub generators: Vec<Vec<String>>,
    pub generators_pretty: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub verified: bool,
    pub seed: u64,
    pub budget: usize,
}

impl Human for ConjugateOut {
    fn human(&self) -> String {
        let mut out = format!("algebra: {}\n", self.algebra);
        rows_lines(&mut out, "first cartan subalgebra", &self.c1);
        rows_lines(&mut out, "second cartan subalgebra", &self.c2);
        out.push_str(&format!("conjugating automorphism found: {}\n", yes_no(self.found)));
        if self.generators_pretty.is_empty() {
            out.push_str("automorphism: identity\n");
        } else {
            out.push_str(&format!(
                "automorphism: {}\n",
                self.generators_pretty
                    .iter()
                    .map(|g| format!("exp(R_({g}))"))
                    .collect::<Vec<_>>()
                    .join(" then ")
            ));
        }
        rows_lines(&mut out, "matrix (rows = images of basis vectors in coordinates)", &self.matrix);
        out.push_str(&format!(
            "verified exactly: {}\nseed: {}\nbudget: {}\n",
            yes_no(self.verified),
            self.seed,
            self.budget
        ));
        out
    }
}

#[derive(Serialize)]
pub struct ExamplesListOut {
    pub command: &'static str,
    pub examples: Vec<ExampleRow>,
}

#[derive(Serialize)]
pub struct ExampleRow {
    pub name: String,
    pub description: String,
}

impl Human for ExamplesListOut {
    fn human(&self) -> String {
        let mut out = String::new();
        for row in &self.examples {
            out.push_str(&format!("{:<22} {}\n", row.name, row.description));
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::fixtures;
    use leibniz_core::Subspace;

    #[test]
    fn subspace_rows_are_rational_literals() {
        let s = Subspace::from_rows(
            3,
            vec![vec![
                leibniz_core::parse_rational("1").unwrap(),
                leibniz_core::parse_rational("0").unwrap(),
                leibniz_core::parse_rational("-1/2").unwrap(),
            ]],
        )
        .unwrap();
        let expected: Vec<Vec<String>> =
            vec![vec!["1".into(), "0".into(), "-1/2".into()]];
        assert_eq!(subspace_rows(&s), expected);
    }

    #[test]
    fn json_rendering_is_stable() {
        let alg = fixtures::example_3_1();
        let report = InfoReport {
            command: "info",
            algebra: "example-3.1".into(),
            dim: alg.dim(),
            basis: alg.basis_names().to_vec(),
            leibniz: true,
            lie: false,
            nilpotent: false,
            series_dims: vec![3, 2],
            squares_ideal: vec![vec!["1".into(), "0".into(), "0".into()]],
            squares_ideal_dim: 1,
        };
        let a = render(&report, Format::Json);
        let b = render(&report, Format::Json);
        assert_eq!(a, b);
        assert!(a.starts_with('{') && a.ends_with('\n'));
        let text = render(&report, Format::Text);
        assert!(text.contains("squares ideal (dim 1)"));
    }
}
