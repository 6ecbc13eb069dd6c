//! `leibniz` — structure theory of finite-dimensional Leibniz algebras over
//! the rationals, on the command line.
//!
//! Algebras are named fixtures (`leibniz examples list`) or JSON files in the
//! documented format.  Exit codes: 0 success, 1 a queried property is false,
//! 2 input or numerical error, 3 a bounded search was exhausted.

use clap::{Parser, Subcommand, ValueEnum};
use leibniz_cli::format::{self, FormatError};
use leibniz_cli::report::{self, Human};
use leibniz_core::fixtures;
use leibniz_core::{
    cartan_from_regular, conjugate_cartan, find_regular_element, fitting_wrt_element, is_cartan,
    left_normalizer, parse_rational, right_normalizer, squares_ideal, weight_decomposition,
    EigenParams, Error as CoreError, LeibnizAlgebra, QuotientMap, Rational, Subspace,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "leibniz",
    version,
    about = "Structure theory of finite-dimensional Leibniz algebras over Q",
    after_help = "ALGEBRA is a fixture name (see `leibniz examples list`) or a path to a JSON \
                  algebra document. Exit codes: 0 success, 1 property false, 2 input error, \
                  3 search exhausted."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Skip the Leibniz-identity check when reading an algebra.
    #[arg(long, global = true)]
    no_validate: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl FormatArg {
    fn to_report(self) -> report::Format {
        match self {
            FormatArg::Text => report::Format::Text,
            FormatArg::Json => report::Format::Json,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining identity; exit 1 when it fails.
    Validate { algebra: String },
    /// Dimension, nilpotency, Lie-ness, and the squares ideal.
    Info { algebra: String },
    /// Lower central series with canonical bases.
    Series { algebra: String },
    /// Rank: minimal zero-weight multiplicity over sampled elements.
    Rank {
        algebra: String,
        /// Random candidates examined after the deterministic ladder.
        #[arg(long, default_value_t = 64)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Find a regular element (witness for the rank).
    Regular {
        algebra: String,
        #[arg(long, default_value_t = 64)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Fitting decomposition with respect to one element.
    Fitting {
        algebra: String,
        /// Comma-separated rational coordinates, e.g. "0,1/2,-1".
        #[arg(long)]
        element: String,
    },
    /// Weight decomposition of the right multiplication by an element.
    Weights {
        algebra: String,
        #[arg(long)]
        element: String,
        /// Eigenvalues closer than this are clustered together.
        #[arg(long, default_value_t = 1e-8)]
        tol_eig: f64,
        /// Maximum accepted generalized-eigenspace residual.
        #[arg(long, default_value_t = 1e-8)]
        tol_res: f64,
    },
    /// Construct and certify a Cartan subalgebra from a regular element.
    Cartan {
        algebra: String,
        #[arg(long, default_value_t = 64)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Left or right normalizer of a subspace.
    Normalizer {
        algebra: String,
        #[arg(long, value_enum)]
        side: Side,
        /// Semicolon-separated rows of rational coordinates, e.g. "1,0,-1;0,1,0".
        #[arg(long)]
        subspace: String,
    },
    /// Certify whether a subspace is a Cartan subalgebra; exit 1 when not.
    IsCartan {
        algebra: String,
        #[arg(long)]
        subspace: String,
    },
    /// Squares ideal and the induced Lie quotient.
    Quotient { algebra: String },
    /// Image of a subspace in the quotient by the squares ideal.
    Push {
        algebra: String,
        #[arg(long)]
        subspace: String,
    },
    /// Search for an invariant automorphism carrying one Cartan subalgebra
    /// onto another; exit 3 when the budget is exhausted.
    Conjugate {
        algebra: String,
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The built-in fixture library.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// List fixture names with one-line descriptions.
    List,
    /// Print a fixture as a JSON algebra document.
    Show { name: String },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::NotFound { .. }) => 3,
            _ => 2,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok((output, code)) => {
            print!("{output}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

/// Resolve a fixture name or a file path to a named algebra.
fn load_algebra(spec: &str, validate: bool) -> Result<(String, LeibnizAlgebra), CliError> {
    if let Some(alg) = fixtures::by_name(spec) {
        return Ok((spec.to_string(), alg));
    }
    let text = std::fs::read_to_string(spec).map_err(|e| {
        CliError::Input(format!(
            "{spec:?} is not a fixture name (see `leibniz examples list`) and reading it as a \
             file failed: {e}"
        ))
    })?;
    let doc = format::parse_document(&text)?;
    let alg = format::document_to_algebra(&doc, validate)?;
    Ok((doc.name.clone(), alg))
}

fn parse_coords(alg: &LeibnizAlgebra, s: &str) -> Result<Vec<Rational>, CliError> {
    let coords: Vec<Rational> = s
        .split(',')
        .map(|t| parse_rational(t.trim()))
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Input(format!("bad coordinate in {s:?}: {e}")))?;
    if coords.len() != alg.dim() {
        return Err(CliError::Input(format!(
            "expected {} coordinates, got {}",
            alg.dim(),
            coords.len()
        )));
    }
    Ok(coords)
}

fn parse_subspace(alg: &LeibnizAlgebra, s: &str) -> Result<Subspace, CliError> {
    let rows: Vec<Vec<Rational>> = s
        .split(';')
        .filter(|r| !r.trim().is_empty())
        .map(|r| parse_coords(alg, r))
        .collect::<Result<_, _>>()?;
    Subspace::from_rows(alg.dim(), rows).map_err(CliError::Core)
}

fn series_dims(terms: &[Subspace]) -> Vec<usize> {
    terms.iter().map(Subspace::dim).collect()
}

fn emit<R: Serialize + Human>(r: &R, fmt: FormatArg, code: i32) -> Result<(String, i32), CliError> {
    Ok((report::render(r, fmt.to_report()), code))
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let fmt = cli.format;
    let validate = !cli.no_validate;
    match cli.command {
        Command::Validate { algebra } => {
            let (name, alg) = load_algebra(&algebra, false)?;
            let failures = alg.validate_leibniz();
            let leibniz = failures.is_empty();
            let names = alg.basis_names();
            let r = report::ValidationReport {
                command: "validate",
                algebra: name,
                dim: alg.dim(),
                leibniz,
                failing_triples: failures
                    .iter()
                    .map(|&(i, j, k)| [names[i].clone(), names[j].clone(), names[k].clone()])
                    .collect(),
                lie: leibniz && alg.is_lie(),
            };
            emit(&r, fmt, if leibniz { 0 } else { 1 })
        }
        Command::Info { algebra } => {
            let (name, alg) = load_algebra(&algebra, validate)?;
            let series = alg.lower_central_series();
            let ideal = squares_ideal(&alg);
            let r = report::InfoReport {
                command: "info",
                algebra: name,
                dim: alg.dim(),
                basis: alg.basis_names().to_vec(),
                leibniz: alg.is_leibniz(),
                lie: alg.is_lie(),
                nilpotent: series.nilpotent,
                series_dims: series_dims(&series.terms),
                squares_ideal: report::subspace_rows(&ideal),
                squares_ideal_dim: ideal.dim(),
            };
            emit(&r, fmt, 0)
        }
        Command::Series { algebra } => {
            let (name, alg) = load_algebra(&algebra, validate)?;
            let series = alg.lower_central_series();
            let r = report::SeriesOut {
                command: "series",
                algebra: name,
                nilpotent: series.nilpotent,
                stabilization_index: series.stabilization_index,
                dims: series_dims(&series.terms),
                terms: series.terms.iter().map(report::subspace_rows).collect(),
            };
            emit(&r, fmt, 0)
        }
        Command::Rank {
            algebra,
            trials,
            seed,
        } => regular_report("rank", &algebra, trials, seed, validate, fmt),
        Command::Regular {
            algebra,
            trials,
            seed,
        } => regular_report("regular", &algebra, trials, seed, validate, fmt),
        Command::Fitting { algebra, element } => {
            let (name, alg) = load_algebra(&algebra, validate)?;
            let x = alg.element(parse_coords(&alg, &element)?)?;
            let pair = fitting_wrt_element(&alg, &x)?;
            let (coords, pretty) = report::element_fields(&x);
            let r = report::FittingOut {
                command: "fitting",
                algebra: name,
                element: coords,
                element_pretty: pretty,
                null_dim: pair.null_component.dim(),
                one_dim: pair.one_component.dim(),
                null_component: report::subspace_rows(&pair.null_component),
                one_component: report::subspace_rows(&pair.one_component),
            };
            emit(&r, fmt, 0)
        }
        Command::Weights {
            algebra,
            element,
            tol_eig,
            tol_res,
        } => {
            let (name, alg) = load_algebra(&algebra, validate)?;
            let x = alg.element(parse_coords(&alg, &element)?)?;
            let params = EigenParams { tol_eig, tol_res };
            let w = weight_decomposition(&alg, &x, &params)?;
            let (coords, pretty) = report::element_fields(&x);
            let r = report::WeightsOut {
                command: "weights",
                algebra: name,
                element: coords,
                element_pretty: pretty,
                weights: report::WeightsOut::from_spectrum(&w.spectrum),
                zero_component: report::subspace_rows(&w.zero_component),
                max_residual: w.spectrum.max_residual(),
                tol_eig,
                tol_res,
            };
            emit(&r, fmt, 0)
        }
        Command::Cartan {
            algebra,
            trials,
            seed,
        } => {
            let (name, alg) = load_algebra(&algebra, validate)?;
            let reg = find_regular_element(&alg, seed, trials)?;
            let cert = cartan_from_regular(&alg, &reg)?;
            let (coords, pretty) = report::element_fields(&reg.element);
            let r = report::CartanOut {
                command: "cartan",
                algebra: name,
                rank: reg.nullity,
                witness: coords,
                witness_pretty: pretty,
                cartan_dim: cert.subalgebra.dim(),
                cartan_basis: report::subspace_rows(&cert.subalgebra),
                series_dims: series_dims(&cert.nilpotency.terms),
                left_normalizer: report::subspace_rows(&cert.left_normalizer),
                is_cartan: cert.is_cartan,
                trials: reg.trials,
                seed: reg.seed,
            };
            emit(&r, fmt, 0)
        }
        Command::Normalizer {
            algebra,
            side,
            subspace,
        } => {
            let (name, alg) = load_algebra(&algebra, validate)?;
            let s = parse_subspace(&alg, &subspace)?;
            let (side_name, n) = match side {
                Side::Left => ("left", left_normalizer(&alg, &s)?),
                Side::Right => ("right", right_normalizer(&alg, &s)?),
            };
            let r = report::NormalizerOut {
                command: "normalizer",
                algebra: name,
                side: side_name.to_string(),
                subspace: report::subspace_rows(&s),
                normalizer_dim: n.dim(),
                self_normalizing: n == s,
                normalizer: report::subspace_rows(&n),
            };
            emit(&r, fmt, 0)
        }
        Command::IsCartan { algebra, subspace } => {
            let (name, alg) = load_algebra(&algebra, validate)?;
            let s = parse_subspace(&alg, &subspace)?;
            let r = match is_cartan(&alg, &s) {
                Ok(cert) => report::IsCartanOut {
                    command: "is-cartan",
                    algebra: name,
                    subspace: report::subspace_rows(&s),
                    subalgebra: true,
                    nilpotent: cert.nilpotency.nilpotent,
                    series_dims: series_dims(&cert.nilpotency.terms),
                    left_normalizer: report::subspace_rows(&cert.left_normalizer),
                    self_normalizing: cert.left_normalizer == cert.subalgebra,
                    is_cartan: cert.is_cartan,
                },
                Err(CoreError::NotASubalgebra) => report::IsCartanOut {
                    command: "is-cartan",
                    algebra: name,
                    subspace: report::subspace_rows(&s),
                    subalgebra: false,
                    nilpotent: false,
                    series_dims: vec![],
                    left_normalizer: vec![],
                    self_normalizing: false,
                    is_cartan: false,
                },
                Err(e) => return Err(e.into()),
            };
            let code = if r.is_cartan { 0 } else { 1 };
            emit(&r, fmt, code)
        }
        Command::Quotient { algebra } => {
            let (name, alg) = load_algebra(&algebra, validate)?;
            let q = QuotientMap::build(&alg)?;
            let doc = format::algebra_to_document(&format!("{name} mod squares"), q.quotient());
            let r = report::QuotientOut {
                command: "quotient",
                algebra: name,
                ideal_dim: q.ideal().dim(),
                ideal: report::subspace_rows(q.ideal()),
                quotient_dim: q.quotient().dim(),
                quotient_is_lie: q.quotient().is_lie(),
                quotient: doc,
            };
            emit(&r, fmt, 0)
        }
        Command::Push { algebra, subspace } => {
            let (name, alg) = load_algebra(&algebra, validate)?;
            let q = QuotientMap::build(&alg)?;
            let s = parse_subspace(&alg, &subspace)?;
            let image = q.push_subspace(&s)?;
            let r = report::PushOut {
                command: "push",
                algebra: name,
                subspace: report::subspace_rows(&s),
                quotient_basis: q.quotient().basis_names().to_vec(),
                image_dim: image.dim(),
                image: report::subspace_rows(&image),
            };
            emit(&r, fmt, 0)
        }
        Command::Conjugate {
            algebra,
            c1,
            c2,
            budget,
            seed,
        } => {
            let (name, alg) = load_algebra(&algebra, validate)?;
            let s1 = parse_subspace(&alg, &c1)?;
            let s2 = parse_subspace(&alg, &c2)?;
            let aut = conjugate_cartan(&alg, &s1, &s2, seed, budget)?;
            let mapped = aut.map_subspace(&s1)?;
            let verified = aut.preserves_bracket() && mapped == s2;
            let mut generators = Vec::new();
            let mut generators_pretty = Vec::new();
            for g in aut.generators() {
                let (coords, pretty) = report::element_fields(g);
                generators.push(coords);
                generators_pretty.push(pretty);
            }
            let r = report::ConjugateOut {
                command: "conjugate",
                algebra: name,
                c1: report::subspace_rows(&s1),
                c2: report::subspace_rows(&s2),
                found: true,
                generators,
                generators_pretty,
                matrix: report::matrix_rows(aut.matrix()),
                verified,
                seed,
                budget,
            };
            emit(&r, fmt, 0)
        }
        Command::Examples { action } => match action {
            ExamplesAction::List => {
                let r = report::ExamplesListOut {
                    command: "examples-list",
                    examples: fixtures::catalog()
                        .into_iter()
                        .map(|(n, d)| report::ExampleRow {
                            name: n.to_string(),
                            description: d.to_string(),
                        })
                        .collect(),
                };
                emit(&r, fmt, 0)
            }
            ExamplesAction::Show { name } => {
                let alg = fixtures::by_name(&name).ok_or_else(|| {
                    CliError::Input(format!(
                        "no fixture named {name:?}; try `leibniz examples list`"
                    ))
                })?;
                let doc = format::algebra_to_document(&name, &alg);
                Ok((format::serialize_document(&doc), 0))
            }
        },
    }
}

fn regular_report(
    command: &'static str,
    algebra: &str,
    trials: usize,
    seed: u64,
    validate: bool,
    fmt: FormatArg,
) -> Result<(String, i32), CliError> {
    let (name, alg) = load_algebra(algebra, validate)?;
    let reg = find_regular_element(&alg, seed, trials)?;
    let (coords, pretty) = report::element_fields(&reg.element);
    let r = report::RegularOut {
        command,
        algebra: name,
        element: coords,
        element_pretty: pretty,
        nullity: reg.nullity,
        is_regular: reg.is_regular,
        rank: reg.nullity,
        trials: reg.trials,
        seed: reg.seed,
    };
    emit(&r, fmt, 0)
}
