//! Simple plane graphs given by rotation systems.
//!
//! Faces are traced with a fixed convention: the successor of the dart `(u,v)`
//! is `(v,w)` where `w` follows `u` in the clockwise rotation at `v`. Planarity
//! of the supplied rotation is certified by Euler's formula on the traced faces.

mod embedding;
mod graph;
mod ids;

use thiserror::Error;

pub use embedding::{Dart, Embedding, Region};
pub use graph::{Edge, Graph};
pub use ids::{EdgeId, RegionId, VertexId, VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("duplicate vertex record `{0}`")]
    DuplicateVertex(String),
    #[error("unknown neighbour `{neighbour}` in rotation of `{vertex}`")]
    UnknownNeighbour { vertex: String, neighbour: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop at `{0}`")]
    Loop(String),
    #[error("`{neighbour}` appears twice in rotation of `{vertex}`")]
    RepeatedNeighbour { vertex: String, neighbour: String },
    #[error("asymmetric rotation: `{lister}` lists `{omitter}` but `{omitter}` omits `{lister}`")]
    AsymmetricRotation { lister: String, omitter: String },
    #[error("graph has no edges")]
    NoEdges,
    #[error("disconnected graph")]
    Disconnected,
    #[error("{0} vertices exceeds the limit of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("Euler check failure: V - E + R = {v} - {e} + {r} != 2")]
    EulerFailure { v: i64, e: i64, r: i64 },
    #[error("no edge `{u}-{v}`")]
    NoSuchEdge { u: String, v: String },
    #[error("edge `{0}` has the same region on both sides")]
    NotTwoSided(String),
    #[error("three-connectivity needs at least four vertices, got {0}")]
    TooFewVertices(usize),
    #[error("`{0}` and `{1}` share no region")]
    NoCommonRegion(String, String),
    #[error("`{0}` and `{1}` are already adjacent")]
    AlreadyAdjacent(String, String),
}
