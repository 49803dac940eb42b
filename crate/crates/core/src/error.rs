//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A configuration value violates an invariant.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A chromosome decodes to zero living cluster heads.
    #[error("chromosome has no living cluster head; repair it before decoding")]
    DegenerateChromosome,

    /// A chromosome does not match the deployment it is evaluated against.
    #[error("chromosome length {got} does not match node count {expected}")]
    ChromosomeLength { got: usize, expected: usize },

    /// A bit-string contained a character other than '0' or '1'.
    #[error("invalid chromosome bit-string: unexpected character {0:?}")]
    BadBitString(char),

    /// Per-message energy is undefined for empty messages.
    #[error("message size must be at least one bit")]
    ZeroBits,

    /// Exhaustive search over all head subsets is capped.
    #[error("exhaustive search supports at most {max} nodes, got {got}")]
    ExhaustiveTooLarge { got: usize, max: usize },

    /// A deployment JSON document failed validation.
    #[error("invalid deployment: {0}")]
    InvalidDeployment(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
