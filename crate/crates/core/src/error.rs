//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside a function's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Result not representable (e.g. unscaled I-kernel at huge argument).
    #[error("overflow: {0}")]
    Overflow(String),

    /// An integral whose convergence exponent is non-positive.
    #[error("divergent integral: {0}")]
    Divergent(String),

    /// Quadrature or series failed to reach the requested tolerance.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// A linear system that the construction guarantees solvable turned out
    /// inconsistent; indicates an internal bug.
    #[error("inconsistent system: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("tail bound not attainable: {0}")]
    TailBound(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
