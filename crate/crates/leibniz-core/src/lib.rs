//! Structure theory of finite-dimensional Leibniz algebras over Q.
//!
//! The crate computes, with exact rational arithmetic throughout the
//! structural layer:
//!
//! * Fitting decompositions of single operators and of nilpotent operator
//!   families ([`fitting`], [`cartan`]);
//! * regular elements, rank, and certified Cartan subalgebras ([`cartan`]);
//! * the squares ideal and the induced Lie quotient ([`quotient`]);
//! * weight decompositions, exponential automorphisms, and a constructive
//!   conjugacy search for Cartan subalgebras ([`conjugacy`]);
//! * floating-point spectra with exact cross-checks where the spectrum
//!   leaves Q ([`eigen`]).
//!
//! Randomized searches (regular elements, spanning operators, conjugating
//! automorphisms) take an explicit seed and trial budget and are fully
//! deterministic for fixed inputs.

pub mod algebra;
pub mod cartan;
pub mod conjugacy;
pub mod eigen;
pub mod error;
pub mod fitting;
pub mod fixtures;
pub mod matrix;
pub mod quotient;
pub mod rational;
pub mod subspace;

pub use algebra::{Element, LeibnizAlgebra, SeriesReport, StructureTable};
pub use cartan::{
    cartan_from_regular, find_regular_element, find_spanning_operator, fitting_wrt_element,
    is_cartan, joint_fitting, left_normalizer, rank, right_normalizer, CartanCertificate,
    RegularityReport,
};
pub use conjugacy::{
    check_null_coset, conjugate_cartan, exp_right_mult, weight_decomposition, Automorphism,
    WeightDecomposition,
};
pub use eigen::{
    generalized_eigenspaces, rational_eigenvalues, rational_root_space, ComplexSpectrum,
    EigenParams, SpectralComponent, C64,
};
pub use error::{Error, Result};
pub use fitting::{fitting_pair, zero_root_order, FittingPair};
pub use matrix::RationalMatrix;
pub use quotient::{squares_ideal, QuotientMap};
pub use rational::{format_rational, parse_rational, Rational};
pub use subspace::{standard_vector, Subspace};
