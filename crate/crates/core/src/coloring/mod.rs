//! Acyclic edge coloring with palette `max(2Δ - 2, Δ + 83)`: an elimination
//! plan built from small-degree vertices and configurations, replayed in
//! reverse to extend a coloring one vertex at a time.

mod extend;
mod oracle;
mod partial;
mod plan;
mod types;
mod verify;

pub use extend::{
    acyclic_edge_color, acyclic_edge_color_lists, color_with_stats, ColoringRun, StepStats, DEFAULT_BUDGET,
};
pub use oracle::{oracle_chi_a, OracleResult};
pub use plan::{build_elimination_plan, AuxEdge, EliminationPlan, PlanStep, StepCase};
pub use types::{palette_size, ColorLists, EdgeColoring};
pub use verify::{verify_acyclic, ColoringViolation, VerifyReport};

use thiserror::Error;

use crate::model::Edge;
use crate::structure::StructureError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("elimination stalled: {0}")]
    Plan(#[from] StructureError),
    #[error("could not extend the coloring at step {step} (vertex {vertex}); admissible set sizes {set_sizes:?}")]
    ExtensionFailed {
        step: usize,
        vertex: usize,
        set_sizes: Vec<usize>,
    },
    #[error("step {step} (vertex {vertex}): |{set}| = {size} is below the bound {bound}")]
    BoundViolated {
        step: usize,
        vertex: usize,
        set: String,
        size: usize,
        bound: i64,
    },
    #[error("list of edge {edge:?} has {size} colors, needs {required}")]
    ListTooSmall { edge: Edge, size: usize, required: usize },
    #[error("no list given for edge {0:?}")]
    MissingList(Edge),
}
