//! Local structure around vertices of a canonical triangulation, the
//! unavoidable configurations, and light paths and stars.

mod census;
mod config;
mod observations;

pub use census::{
    classify_neighbors, mirror_triangle_census, ClassCounts, Label, MirrorTriangle, Segment, StructureCensus,
    TriangleClass,
};
pub use config::{
    configuration_at, find_configuration, find_light_path3, find_light_star3, ConfigKind, Configuration, LightPath, LightStar,
};
pub use observations::{check_observations, Finding, ObservationReport, Severity};

pub(crate) use config::sorted_neighbors;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("vertex {vertex} is not a real vertex (planarization has {real} real vertices)")]
    NotRealVertex { vertex: usize, real: usize },
    #[error("crossing {crossing} at vertex {vertex} is not flanked by the endpoints of the edge it crosses")]
    NotLocallyCanonical { vertex: usize, crossing: usize },
    #[error("no vertex matches any configuration")]
    NotFound,
    #[error("minimum degree {found} is below the required {required}")]
    MinDegree { required: usize, found: usize },
}
