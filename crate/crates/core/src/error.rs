use thiserror::Error;

use crate::audit::Check;
use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A runtime assertion derived from the coloring proofs failed.
///
/// These never fire on valid inputs; when one does, it carries enough
/// state to reproduce the failing step.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invariant `{check}` violated: {detail}")]
pub struct InvariantViolation {
    pub check: Check,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },

    #[error("edge {edge} out of range (graph has {edge_count} edges)")]
    EdgeOutOfRange { edge: EdgeId, edge_count: usize },

    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: EdgeId, vertex: VertexId },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("block on vertices {vertices:?} is not line perfect: {reason}")]
    NotLinePerfect {
        vertices: Vec<VertexId>,
        reason: String,
    },

    #[error("edge {edge} has {size} colors but needs at least {required}")]
    ListTooSmall {
        edge: EdgeId,
        size: usize,
        required: usize,
    },

    #[error("no color list for edge {edge}")]
    MissingList { edge: EdgeId },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error(transparent)]
    Invariant(#[from] InvariantViolation),

    #[error("brute force refused: {edges} edges exceeds the cap of {cap}")]
    OracleTooLarge { edges: usize, cap: usize },

    #[error("{0}")]
    Parse(String),
}
