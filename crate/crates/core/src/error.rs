use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures raised anywhere in the pipeline.
///
/// Depth indices are 1-based: `depth = d` names the `d`-th atom (or Hankel
/// index `i = d`) that could not be formed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("leading series coefficient is zero")]
    LeadingCoefficientZero,
    #[error("rational function is not strictly proper in the main variable")]
    NotStrictlyProper,
    #[error("moment table is missing entry s[{i},{j}]")]
    IncompleteTable { i: usize, j: usize },
    #[error("invalid moment table: {0}")]
    InvalidTable(String),
    #[error("invalid atomic measure: {0}")]
    InvalidMeasure(String),
    #[error("leading entry of the recursive sequence vanishes at depth {depth}")]
    LeadingMomentZero { depth: usize },
    #[error("plus regularity fails at depth {depth}")]
    PlusRegularityFailure { depth: usize },
    #[error("associated sequence has odd length {len}")]
    OddLength { len: usize },
    #[error("sequence too short: need {needed} entries, have {got}")]
    InsufficientLength { needed: usize, got: usize },
    #[error("requested depth {requested} exceeds the {available} available atoms")]
    DepthExceeded { requested: usize, available: usize },
    #[error("denominator vanishes identically at composition level {level}")]
    DegenerateComposition { level: usize },
    #[error("evaluation point is a pole")]
    EvaluationPole,
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}
