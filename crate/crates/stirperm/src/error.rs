use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration would produce more objects than the configured cap.
    #[error("enumeration of {requested} objects exceeds the cap of {cap}")]
    CapExceeded { requested: u128, cap: u128 },

    /// A word fails the Stirling permutation conditions.
    #[error("not a Stirling permutation: {0}")]
    NotStirling(String),

    /// A code violates Definition-level constraints or cannot be decoded.
    #[error("invalid code: {0}")]
    InvalidCode(String),

    /// A structural object (tree, word, matching) fails validation.
    #[error("invalid object: {0}")]
    InvalidObject(String),

    /// Syntax error in the rule DSL or a polynomial expression.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// A statistic or grammar name that the library does not know.
    #[error("unknown name: {0}")]
    UnknownName(String),

    /// An argument is outside the documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two independent computation routes disagreed. This always indicates
    /// a defect; the library never silently picks one side.
    #[error("route disagreement in {what}: {detail}")]
    RouteDisagreement { what: String, detail: String },

    /// Polynomial is not symmetric in its variables.
    #[error("polynomial is not symmetric in {0}")]
    NotSymmetric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
