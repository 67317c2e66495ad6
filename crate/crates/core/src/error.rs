//! Error type shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Field parameters that do not describe 𝔽_q for an odd prime power q.
    #[error("invalid field parameters: {0}")]
    InvalidParams(String),

    /// Two values built over different (p, f) were combined.
    #[error("mismatched field parameters: q = {left} versus q = {right}")]
    MismatchedParams { left: u32, right: u32 },

    /// A two-dimensional label r_a with (q+1) | a, which is not irreducible.
    #[error("r_{a} is not irreducible for q = {q}: the index is divisible by q+1")]
    NotIrreducible { a: u32, q: u32 },

    /// A type descriptor outside the supported family.
    #[error("unsupported type descriptor: {0}")]
    UnsupportedDescriptor(String),

    /// A principal-series (char) type where a discrete-series type is needed.
    #[error("not a discrete-series type: {0}")]
    NotDiscreteSeries(String),

    /// An operation only defined over ℚ_p (f = 1) was asked for with f > 1.
    #[error("{0} is only available for prime q (f = 1)")]
    RequiresPrimeField(String),

    /// A class function whose inner product with some irreducible character
    /// is not a rational integer, so it is not a virtual character.
    #[error("class function is not a virtual character: {0}")]
    NonIntegralDecomposition(String),

    /// A multiplicity evaluation on a virtual class with a negative
    /// coefficient, which has no deformation-theoretic meaning.
    #[error("negative coefficient {coeff} at {irrep} in a multiplicity evaluation")]
    NegativeCoefficient { irrep: String, coeff: i64 },

    /// A custom μ table whose one-dimensional support contradicts its
    /// declared Galois-class shape.
    #[error("invalid multiplicity table: {0}")]
    InvalidMuTable(String),

    /// Newform or deformation data that is internally inconsistent.
    #[error("inconsistent input data: {0}")]
    DataInconsistency(String),

    /// A violated identity that the underlying theorems make impossible.
    /// Seeing this error means a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag, used verbatim in CLI error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParams(_) => "invalid_params",
            Error::MismatchedParams { .. } => "mismatched_params",
            Error::NotIrreducible { .. } => "not_irreducible",
            Error::UnsupportedDescriptor(_) => "unsupported_descriptor",
            Error::NotDiscreteSeries(_) => "not_discrete_series",
            Error::RequiresPrimeField(_) => "requires_prime_field",
            Error::NonIntegralDecomposition(_) => "non_integral_decomposition",
            Error::NegativeCoefficient { .. } => "negative_coefficient",
            Error::InvalidMuTable(_) => "invalid_mu_table",
            Error::DataInconsistency(_) => "data_inconsistency",
            Error::Internal(_) => "internal",
        }
    }
}
