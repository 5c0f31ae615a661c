use std::fmt;

use thiserror::Error;

use crate::characterize::RealizabilityVerdict;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("vertex labels must be positive, found {0}")]
    BadVertex(i64),

    #[error("resource limit exceeded: {what} is {got}, limit is {limit}")]
    ResourceLimit { what: &'static str, got: usize, limit: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("sequence entries must be positive, entry {index} is {value}")]
    NonPositiveEntry { index: usize, value: i128 },

    #[error("face {0:?} is not a facet of the complex")]
    NotAFacet(Vec<u32>),

    #[error("ordering is not a permutation of the facets")]
    NotAPermutation,

    #[error("suffix sum of c from k = {k} is {sum}, expected > 0")]
    ConditionViolated { k: usize, sum: i128 },

    #[error("c-sequence sums to {0}, expected 1")]
    UnitSumViolated(i128),

    #[error("invalid (delta, e) sequences: {0}")]
    InvalidSequences(SequenceDefect),

    #[error("not realizable: {}", .0.describe_failure())]
    NotRealizable(Box<RealizabilityVerdict>),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// The first defect found when validating a pair of (delta, e) sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceDefect {
    NoDeltas,
    LengthMismatch { deltas: usize, es: usize },
    ZeroDelta,
    UnsortedDeltas { index: usize },
    UnsortedEs { index: usize },
    Collision { value: usize },
    NotBelow { index: usize, e: usize, delta: usize },
    TopNotDimension { top: usize, dimension: usize },
}

impl fmt::Display for SequenceDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceDefect::NoDeltas => write!(f, "delta sequence is empty"),
            SequenceDefect::LengthMismatch { deltas, es } => {
                write!(f, "expected one more delta than e, got {deltas} and {es}")
            }
            SequenceDefect::ZeroDelta => write!(f, "delta entries must be positive"),
            SequenceDefect::UnsortedDeltas { index } => {
                write!(f, "deltas not ascending at position {index}")
            }
            SequenceDefect::UnsortedEs { index } => write!(f, "es not ascending at position {index}"),
            SequenceDefect::Collision { value } => {
                write!(f, "value {value} occurs among both deltas and es")
            }
            SequenceDefect::NotBelow { index, e, delta } => {
                write!(f, "e_{index} = {e} is not below delta_{index} = {delta}")
            }
            SequenceDefect::TopNotDimension { top, dimension } => {
                write!(f, "last delta is {top}, expected {dimension}")
            }
        }
    }
}
