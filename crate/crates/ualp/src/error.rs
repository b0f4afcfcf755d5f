//! Error type shared by every module of the crate.

use std::fmt;

/// Errors produced by evaluation, quadrature, and verification routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside a function's mathematical domain.
    Domain(String),
    /// Argument outside the supported numerical range of an algorithm.
    Range(String),
    /// An integrand returned NaN or another non-finite value at `x`.
    Evaluation { x: f64 },
    /// An iteration or series hit its cap without meeting its stopping rule.
    Convergence(String),
    /// An internal numerical consistency check failed.
    Internal(String),
    /// Verification identity name not recognized.
    UnknownIdentity(String),
    /// A verification grid entry is missing a key or holds an invalid value.
    MalformedGrid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Range(msg) => write!(f, "range error: {msg}"),
            Error::Evaluation { x } => {
                write!(
                    f,
                    "integrand evaluation failed (non-finite value at x = {x})"
                )
            }
            Error::Convergence(msg) => write!(f, "convergence failure: {msg}"),
            Error::Internal(msg) => write!(f, "internal numerical assertion failed: {msg}"),
            Error::UnknownIdentity(name) => write!(f, "unknown identity: {name}"),
            Error::MalformedGrid(msg) => write!(f, "malformed grid entry: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
