use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Model parameters outside their admissible domain.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Malformed grid or other caller-supplied input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Query outside the domain of a density-of-states model.
    #[error("DOS domain error: {0}")]
    DosDomain(String),

    /// Oracle mode count exceeds the dense-representation cap.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// A numerical procedure failed to converge. Carries the partial
    /// result and its error estimate so callers can inspect how far
    /// the computation got.
    #[error("numerical failure: {message} (partial value {partial}, error estimate {error_estimate})")]
    Numerical {
        message: String,
        partial: f64,
        error_estimate: f64,
    },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}
