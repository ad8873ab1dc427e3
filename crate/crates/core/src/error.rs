use thiserror::Error;

use crate::belief::Event;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("state space needs at least two distinct labels, got {0}")]
    TooFewStates(usize),

    #[error("duplicate state label `{0}`")]
    DuplicateState(String),

    #[error("state space too large: {0} states (max 64)")]
    TooManyStates(usize),

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("state index {index} out of range for {len} states")]
    StateOutOfRange { index: usize, len: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {value} at position {index} is negative or not finite")]
    InvalidWeight { index: usize, value: f64 },

    #[error("weights sum to {0}, expected 1")]
    NotNormalized(f64),

    #[error("conditioning event {0} has zero probability")]
    NullEvent(Event),

    #[error("event {0} has zero probability under some prior in the set")]
    AmbiguouslyNull(Event),

    #[error("weight {0} outside [0, 1]")]
    WeightOutOfRange(f64),

    #[error("no conservatism weight for event {0}")]
    MissingDelta(Event),

    #[error("invalid utility: {0}")]
    InvalidUtility(String),

    #[error("outcome {value} outside utility domain [{lo}, {hi}]")]
    OutcomeOutOfDomain { value: f64, lo: f64, hi: f64 },

    #[error("utility value {value} outside range [{lo}, {hi}]")]
    Range { value: f64, lo: f64, hi: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("utilities are not positive affine transformations of each other")]
    IncompatibleTastes,

    #[error("belief set is empty")]
    EmptyBeliefSet,

    #[error("invalid posterior rule: {0}")]
    InvalidRule(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("linear program failed: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;
