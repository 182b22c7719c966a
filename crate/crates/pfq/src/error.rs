//! Error type shared by every operation in the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A lower parameter is (or was shifted onto) a non-positive integer.
    #[error("pole: {0}")]
    Pole(String),

    /// Arguments outside the supported domain (p > q+1, |x| >= 1 for p = q+1,
    /// non-positive gamma argument, ...).
    #[error("domain: {0}")]
    Domain(String),

    /// The series failed to satisfy the stopping rule within `max_terms`.
    #[error("series did not converge within {terms} terms")]
    Convergence { terms: usize },

    /// Vector lengths incompatible with the requested operation.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A named theorem precondition does not hold for the given inputs.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// No admissible truncation degree below the configured cap.
    #[error("truncation: {0}")]
    Truncation(String),

    /// A NaN or other non-finite value appeared where a number was required.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Invalid precision-context or search configuration.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
