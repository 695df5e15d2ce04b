use thiserror::Error;

use crate::term::Term;

/// Every failure the engine can report.
///
/// `MonotonicityViolation`, `NonLeftmostStep` and `AlphaCheckFailed` can
/// only be produced by a bug in this crate: the constructions that may emit
/// them are guaranteed correct on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("redex index {index} out of range (term has {count} redexes)")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("endpoint mismatch: expected {expected}, found {found}")]
    EndpointMismatch { expected: Term, found: Term },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid trace at step {step}: {reason}")]
    InvalidTrace { step: usize, reason: String },

    #[error("non-decreasing index violated at step {step}")]
    MonotonicityViolation { step: usize },

    #[error("bound mismatch: declared {declared}, last beta index is {actual}")]
    BoundMismatch { declared: usize, actual: usize },

    #[error("end term is not a normal form: {0}")]
    NotNormalForm(Term),

    #[error("non-leftmost step at step {step} (index {index})")]
    NonLeftmostStep { step: usize, index: usize },

    #[error("alpha check failed: {left} is not alpha-equivalent to {right}")]
    AlphaCheckFailed { left: Term, right: Term },

    #[error("parse error at {position}: expected {}", expected.join(" or "))]
    Parse {
        position: usize,
        expected: Vec<String>,
    },

    #[error("malformed trace document: {0}")]
    Document(String),

    #[error("resource limit: frontier exceeded {cap} states")]
    ResourceLimit { cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
