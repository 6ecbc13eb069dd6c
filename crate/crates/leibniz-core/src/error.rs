use thiserror::Error;

/// Errors produced by the structure-theoretic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("structure constants violate the Leibniz identity at {} basis triple(s)", failures.len())]
    NotLeibniz { failures: Vec<(usize, usize, usize)> },

    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,

    #[error("subalgebra is not nilpotent")]
    NotNilpotent,

    #[error("search exhausted after {trials} candidates")]
    NotFound { trials: usize },

    #[error("certificate failed: {0}")]
    CertificateFailed(String),

    #[error("eigenvalue clusters too close to separate: {0}")]
    FailsToSeparate(String),

    #[error("quotient bracket is not a Lie bracket: {0}")]
    QuotientNotLie(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
