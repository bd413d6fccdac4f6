use thiserror::Error;

use crate::groups::GroupAxiom;
use crate::structures::FrobeniusCandidate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: cannot compose {left:?} with {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("pair ({a}, {b}) lies outside {dom} x {cod}")]
    PairOutOfRange {
        a: usize,
        b: usize,
        dom: usize,
        cod: usize,
    },

    #[error("element {element} lies outside the carrier of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("{what} is {got}, which exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("invalid group table: {0}")]
    InvalidGroup(GroupAxiom),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("multiplication is not single-valued at ({u}, {v})")]
    NotSingleValued { u: usize, v: usize },

    #[error("multiplication does not reach element {x}")]
    NotSurjective { x: usize },

    #[error("candidate is not a special Frobenius algebra (failed: {failed})")]
    NotSpecialFrobenius { failed: String },

    #[error("search budget exhausted after {explored} nodes ({} candidates found so far)", partial.len())]
    BudgetExhausted {
        explored: u64,
        partial: Vec<FrobeniusCandidate>,
    },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}
