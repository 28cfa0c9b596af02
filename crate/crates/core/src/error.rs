use thiserror::Error;

use crate::recognition::TwoKTwoWitness;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) has an endpoint out of range")]
    VertexOutOfRange { u: usize, v: usize },
    #[error("edge id {id} out of range for a graph with {count} edges")]
    EdgeIdOutOfRange { id: usize, count: usize },
    #[error("edge ({u}, {v}) is not present in the graph")]
    UnknownEdge { u: usize, v: usize },
    #[error("part is not a chain subgraph: induced 2K2 at {witness}")]
    NotFerrers { witness: TwoKTwoWitness },
    #[error("graph has {edges} edges, above the solver cap of {cap}")]
    CapExceeded { edges: usize, cap: usize },
    #[error("brute-force enumeration is limited to 10 edges, got {0}")]
    BruteforceTooLarge(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("construction produced a non-chain part: {0}")]
    ConstructionFailed(String),
}
