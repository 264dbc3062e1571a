//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the numerical operations in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Structural problem with an input (grid not increasing, length
    /// mismatch, empty data, out-of-range radius, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A parameter lies outside the mathematical domain of the
    /// operation (e.g. the outer function evaluated off the upper
    /// half-plane).
    #[error("domain error: {0}")]
    Domain(String),

    /// The density violates the Szegő condition (log-integrability),
    /// so the requested quantity does not exist.
    #[error("Szegő condition violated: {0}")]
    SzegoViolation(String),

    /// A quantity that is provably nonzero came out numerically zero;
    /// indicates corrupted inputs rather than a legitimate answer.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// Kernel evaluation requested for a pair λ = conj(μ) where the
    /// Christoffel–Darboux denominator vanishes.
    #[error("degenerate pair: {0}")]
    DegeneratePair(String),

    /// Moment data does not come from a nontrivial probability measure
    /// (Toeplitz matrix not positive definite).
    #[error("degenerate measure: {0}")]
    DegenerateMeasure(String),

    /// A linear solve failed; carries a rough condition estimate.
    #[error("ill-conditioned system (condition estimate {cond_estimate:.3e}): {context}")]
    IllConditioned {
        context: String,
        cond_estimate: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
