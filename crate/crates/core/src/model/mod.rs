//! Graphs, 1-planar drawings and their planarizations.

mod drawing;
mod edit;
mod faces;
mod graph;

pub use drawing::{
    associated_plane_graph, edge_bound_check, validate_drawing, Crossing, EdgeBound, EdgeEnd, OnePlanarDrawing,
    PlaneGraph, Slot, ValidationReport, Violation,
};
pub use faces::{trace_faces, Face, FaceList};
pub use graph::{edge, AbstractGraph, Edge};

pub(crate) use drawing::plane_graph_unchecked;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Edge),
    #[error("rotation lists {found} vertices, planarization has {expected}")]
    RotationLength { expected: usize, found: usize },
    #[error("crossing {crossing} names {edge:?}, which is not an edge")]
    CrossingNotAnEdge { crossing: usize, edge: Edge },
    #[error("rotation of vertex {vertex} references nonexistent edge {token}")]
    UnknownEdge { vertex: usize, token: EdgeEnd },
    #[error("invalid drawing: {0}")]
    Invalid(ValidationReport),
}
