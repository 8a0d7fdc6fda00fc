use thiserror::Error;

/// Errors raised by the enumeration and evaluation routines.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("theta series diverges: |p| = {modulus} is not below 1")]
    Divergence { modulus: f64 },

    #[error(
        "theta series not converged after {max_terms} terms (last term magnitude {last_term:e})"
    )]
    Truncation { max_terms: usize, last_term: f64 },

    #[error("pole: {what} vanishes (|value| = {magnitude:e})")]
    Pole { what: String, magnitude: f64 },

    #[error("branch domain: {0}")]
    BranchDomain(String),

    #[error("degenerate crossing parameter: |sin eta| = {0:e}")]
    DegenerateCrossing(f64),

    #[error("crossing parameter must be 2*pi/3 for this identity, got eta = {0}")]
    CrossingGuard(f64),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("zero gauge constant for color {0}")]
    ZeroGauge(u8),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
