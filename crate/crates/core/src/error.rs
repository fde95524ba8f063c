use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QtcError {
    /// An argument lies outside the region where an operation is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A rational function failed to reduce to a Laurent polynomial.
    #[error("not a polynomial: {0}")]
    NotPolynomial(String),
    /// Malformed input (vectors, JSON, command-line values).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, QtcError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(QtcError::Domain(msg.into()))
}
