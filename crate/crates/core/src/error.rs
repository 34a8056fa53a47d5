//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed PD line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("edge label {label} appears {count} times (every label must appear exactly twice)")]
    EdgeLabelCountNotTwo { label: usize, count: usize },
    #[error("inconsistent diagram cycles: {0}")]
    DisconnectedCycleInconsistency(String),
    #[error("cable width must be at least 1, got {0}")]
    InvalidWidth(usize),
    #[error("Kauffman state leaves crossing {0} unresolved")]
    IncompleteState(usize),
    #[error("diagram has {crossings} crossings, over the brute-force limit {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
    #[error("index {index} out of range for width {width}")]
    IndexOutOfRange { index: usize, width: usize },
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("could not build a Morse presentation: {0}")]
    MorseizationFailed(String),
    #[error("transfer state width {width} exceeds the configured cap {cap}")]
    WidthOverflow { width: usize, cap: usize },
    #[error("evaluation did not clear to a Laurent polynomial (residual denominator {denominator})")]
    NotLaurentAfterClearing { denominator: String },
    #[error("zero polynomial has no minimum degree")]
    ZeroPolynomial,
    #[error("quantum integer index must be nonnegative")]
    NegativeIndex,
    #[error("diagram is A-adequate; gap/window statements apply only to non-A-adequate diagrams")]
    DiagramIsAdequate,
    #[error("stabilization has not been established to the requested depth")]
    NotStabilized,
    #[error("evaluation limit: {0}")]
    EvaluationLimit(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
