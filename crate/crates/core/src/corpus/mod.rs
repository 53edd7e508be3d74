//! Named instances, seeded generators and file formats.

mod generate;
mod graph6;
mod json;
mod named;
mod rng;

pub use generate::{
    gen_plane_triangulation, gen_random_oneplanar, standard_corpus, thin_drawing, GeneratorKind, GeneratorSpec,
};
pub use graph6::{parse_graph6, write_graph6};
pub use json::{from_json_str, read_drawing, write_drawing, DrawingFile};
pub use named::{named_instance, NAMED_INSTANCES};
pub use rng::XorShift64Star;

#[cfg(test)]
pub(crate) use named::octahedron_plane;

use thiserror::Error;

use crate::model::ModelError;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unknown named instance {0:?}")]
    UnknownInstance(String),
    #[error("generator needs n >= {min}, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("crossing fraction {0} outside [0, 1]")]
    BadFraction(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("JSON error at {path}: {message}")]
    Json { path: String, message: String },
    #[error("drawing file: {0}")]
    Drawing(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}
