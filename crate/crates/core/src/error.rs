use thiserror::Error;

use crate::grid::ValidationReport;

/// Everything that can go wrong in this crate.
///
/// Variants split into two families: input/hypothesis problems (the caller
/// handed us something that does not satisfy a precondition) and theorem
/// violations (a lemma check failed on valid input, which means a bug).
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("field mismatch: {0:?} vs {1:?}")]
    FieldMismatch(crate::Field, crate::Field),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("map does not carry basis vector {basis_index} of the source subspace into the target")]
    NotInduced { basis_index: usize },

    #[error("not a complex: maps[{index}+1] . maps[{index}] != 0")]
    NotComplex { index: usize },

    #[error("position {position} out of range (complex has {len} terms)")]
    Position { position: usize, len: usize },

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("grid does not satisfy its hypotheses: {0}")]
    InvalidGrid(ValidationReport),

    #[error("grid region missing cells for position {position}: {missing:?} (1-based)")]
    RegionMissing {
        position: usize,
        missing: Vec<(usize, usize)>,
    },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("operation requires {expected} orientation")]
    Orientation { expected: &'static str },

    #[error("quiver mismatch: {0}")]
    QuiverMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl Error {
    /// True when the error means a lemma check failed on valid input.
    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
