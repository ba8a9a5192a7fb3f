use thiserror::Error;

/// Errors shared by the quantum, causal, and experiment layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter {name}: {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("state vector is not normalized: squared norm {0}")]
    NotNormalized(f64),

    #[error("not a preparation state: {0}")]
    NotPreparation(String),

    #[error("outcome {outcome:+} has probability {probability:e}, below the resolvable threshold")]
    ImpossibleOutcome { outcome: i8, probability: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("probabilities sum to {0}, expected 1")]
    NotADistribution(f64),

    #[error("probability out of range at index {index}: {value}")]
    ProbabilityOutOfRange { index: usize, value: f64 },

    #[error("infinite divergence: p[{0}] > 0 where q[{0}] = 0")]
    InfiniteDivergence(usize),

    #[error("unknown state label: {0}")]
    UnknownState(String),

    #[error("duplicate state label: {0}")]
    DuplicateState(String),

    #[error("model needs at least two target states, got {0}")]
    DegenerateModel(usize),

    #[error("row {row} sums to {sum}, expected 1")]
    RowNotStochastic { row: usize, sum: f64 },

    #[error("partition does not cover the {axis} axis: expected {expected} labels, found {found}")]
    PartialPartition {
        axis: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("macro source state {0} has zero intervention weight, its row is undefined")]
    ZeroWeightMacroSource(String),

    #[error("empty grid: {0}")]
    EmptyGrid(&'static str),

    #[error("unknown branch: {0}, expected \"fringes\" or \"anti-fringes\"")]
    UnknownBranch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
