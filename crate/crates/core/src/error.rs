use thiserror::Error;

/// Errors surfaced by the library.
///
/// The CLI maps these onto exit codes: domain errors exit 2, numeric and
/// pole errors exit 3, integrity errors exit 1.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument was outside the documented domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A numerical procedure failed to reach its tolerance.
    #[error("numeric error: {0}")]
    Numeric(String),
    /// Evaluation was requested too close to a pole or lattice point.
    #[error("pole error: {0}")]
    Pole(String),
    /// Inputs were valid individually but in an unsupported configuration
    /// (e.g. a cubic with three real roots where a conjugate pair is needed).
    #[error("configuration error: {0}")]
    Configuration(String),
    /// Two independent computations disagreed; indicates a bug or a broken
    /// assumption, never bad user input.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// The request exceeds the exact-arithmetic budget.
    #[error("resource error: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
    pub fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
    pub fn configuration(msg: impl Into<String>) -> Self {
        Error::Configuration(msg.into())
    }
    pub fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
