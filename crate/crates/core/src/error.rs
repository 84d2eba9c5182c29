use num_bigint::BigUint;
use thiserror::Error;

/// Errors shared across the crate. Variants mirror the failure modes of the
/// constructors and operations that produce them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be at least {min}, got {got}")]
    InvalidVertexCount { got: usize, min: usize },
    #[error("edge ({u}, {v}) out of range for n = {n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("expected {expected} edges for n = {n}, got {got}")]
    WrongEdgeCount { n: usize, expected: usize, got: usize },
    #[error("graph is disconnected: vertex {0} unreachable from vertex 1")]
    Disconnected(usize),
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("malformed code: {0}")]
    MalformedCode(String),
    #[error("malformed construction trace: {0}")]
    MalformedTrace(String),
    #[error("malformed sequence: {0}")]
    MalformedSequence(String),
    #[error("invalid branch set: {0}")]
    InvalidBranchSet(String),
    #[error("rank {rank} out of range [0, {bound})")]
    RankOutOfRange { rank: BigUint, bound: BigUint },
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),
    #[error("invalid format: {0}")]
    InvalidFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
