use thiserror::Error;

/// Errors raised by the evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Invalid argument combination (bad modulus, odd Bernoulli index, ...).
    #[error("usage error: {0}")]
    Usage(String),
    /// Argument outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),
    /// Evaluation requested too close to the pole at s = 1.
    #[error("pole error: s = {0} is within 1e-8 of the pole at s = 1")]
    Pole(f64),
    /// A defining series or product was asked to run outside its region of convergence.
    #[error("divergent: {0}")]
    Divergent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
