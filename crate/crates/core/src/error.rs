use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the carrier an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid Chen fraction: {0}")]
    InvalidFraction(String),

    /// Product of two fractions that share a variable.
    #[error("locality violation: {left} and {right} share variable x_{variable}")]
    LocalityViolation {
        left: String,
        right: String,
        variable: u32,
    },

    #[error("pole: denominator factor {factor} vanishes at the given point")]
    Pole { factor: usize },

    #[error("no value assigned to variable x_{0}")]
    MissingVariable(u32),

    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
