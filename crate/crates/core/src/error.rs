use thiserror::Error;

/// Errors raised by constructors, parsers and size-capped engines.
///
/// Property failures are never errors; they come back as reports or verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1, got {0}")]
    InvalidOrder(usize),
    #[error("loop at vertex {0} rejected")]
    LoopRejected(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    BadVertex { vertex: usize, n: usize },
    #[error("arc ({0}, {1}) already present")]
    DuplicateArc(usize, usize),
    #[error("pair query needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("inverse of zero")]
    DivisionByZero,
    #[error("element does not belong to this field")]
    FieldMismatch,

    #[error("variety {variety} out of range in block {block} (v = {v})")]
    BadVariety { block: usize, variety: usize, v: usize },
    #[error("variety {variety} repeated in block {block}")]
    RepeatedVariety { block: usize, variety: usize },
    #[error("design has {blocks} blocks but {varieties} varieties")]
    BlockCountMismatch { blocks: usize, varieties: usize },
    #[error("not a (k^2-k+1, k, 1)-SBIBD: {0}")]
    NotSbibd(String),

    #[error("cycle length {0} is invalid (need at least 2, and at least one cycle)")]
    BadCycleLength(usize),
    #[error("Hall condition fails for blocks {deficient:?}: complements cover only {covered} varieties")]
    HallViolation { deficient: Vec<usize>, covered: usize },
    #[error("not a fancy wheel: {0}")]
    NotFancyWheel(String),
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),

    #[error("{what} = {value} exceeds the limit {limit}")]
    TooLarge { what: &'static str, value: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
