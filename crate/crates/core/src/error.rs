use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid truncation {got}: at least {min} Fock states are required")]
    InvalidTruncation { got: usize, min: usize },

    #[error("operator shapes do not match: {left} vs {right}")]
    ShapeMismatch { left: usize, right: usize },

    #[error("Fock index {index} lies outside the truncated space of dimension {truncation}")]
    OutOfRange { index: usize, truncation: usize },

    #[error("invalid ladder label {label} for the {convention} convention")]
    InvalidLadder { label: u8, convention: &'static str },

    #[error("truncation {requested} is too small for the tail bound; need at least {minimal}")]
    Truncation { requested: usize, minimal: usize },

    #[error("y = {y} lies within {delta} of the singular point {pole}")]
    SingularPoint { y: f64, pole: f64, delta: f64 },

    #[error("g(y) vanishes at y = {y}; the residual divides by g")]
    DivisionByZero { y: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid measure samples: {0}")]
    InvalidMeasure(String),

    #[error("negative Hermite index {0}")]
    Domain(i64),

    #[error("the state has zero norm (j = {j}, z = 0) and cannot be normalized")]
    DegenerateState { j: u8 },

    #[error("non-finite value while summing series (|alpha| = {0} is too large)")]
    Overflow(f64),

    #[error("invalid ordering {0:?}: must be a permutation of 1, 2, 3")]
    InvalidOrdering([u8; 3]),
}

pub type Result<T> = std::result::Result<T, Error>;
