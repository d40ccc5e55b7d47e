use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {0}: edge ({0}, {0}) is not allowed")]
    Loop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeAbsent(usize, usize),
    #[error("vertex sequence is not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("graph has {0} vertices; this operation supports at most 64")]
    GraphTooLarge(usize),
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("empty interval: lower end {lo} is not below upper end {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("node budget of {0} exhausted")]
    BudgetExhausted(u64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
    /// The reader of our output went away.
    #[error("broken pipe")]
    BrokenPipe,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
