use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: vertex id must be nonnegative")]
    NegativeVertex { line: usize },

    #[error("empty graph description")]
    EmptyInput,

    #[error("vertex id {0} out of range (ids must be below 64)")]
    VertexOutOfRange(u64),

    #[error("edge id {0} out of range (ids must be below 64)")]
    EdgeOutOfRange(u64),

    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),

    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),

    #[error("edge {0} is a loop")]
    LoopEdge(EdgeId),

    #[error("edge {0} is a cut-edge")]
    CutEdge(EdgeId),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has a single vertex; at least two are required")]
    SingleVertex,

    #[error("graph has a loop")]
    HasLoop,

    #[error("graph has parallel edges; deparallelize first")]
    NotSimple,

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("edge set is not a spanning tree: {0}")]
    NotSpanningTree(String),

    #[error("invalid tree minor: {0}")]
    InvalidMinor(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("size limit exceeded: {0}")]
    TooLarge(String),

    #[error("graph cannot be written in the text format: {0}")]
    NotRepresentable(String),

    #[error("{0}")]
    Json(String),

    #[error("incompatible complexes: {0}")]
    Incompatible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
