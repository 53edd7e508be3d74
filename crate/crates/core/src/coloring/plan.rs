use serde::{Deserialize, Serialize};

use crate::model::{edge, AbstractGraph, Edge};
use crate::structure::{configuration_at, sorted_neighbors, ConfigKind, StructureError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepCase {
    /// Degree one or two in the working graph.
    Deg2,
    Config(ConfigKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxEdge {
    pub edge: Edge,
    /// True when the edge was absent and got added to the working graph.
    pub added: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanStep {
    pub vertex: usize,
    pub case: StepCase,
    /// `v_1..v_d`, ascending by working degree, ties by id.
    pub neighbors: Vec<usize>,
    pub aux_edge: Option<AuxEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationPlan {
    pub steps: Vec<PlanStep>,
    /// Vertices never eliminated; all isolated at the end.
    pub residue: Vec<usize>,
    pub max_degree: usize,
}

/// Deletes vertices one at a time until no edge is left, adding the edge
/// `v_{d-1} v_d` whenever it is missing.
pub fn build_elimination_plan(g: &AbstractGraph) -> Result<EliminationPlan, StructureError> {
    let mut w = g.clone();
    let mut removed = vec![false; g.n()];
    let mut steps = Vec::new();
    while w.edge_count() > 0 {
        let small = (0..w.n()).find(|&v| (1..=2).contains(&w.degree(v)));
        let (vertex, case, neighbors) = match small {
            Some(v) => (v, StepCase::Deg2, sorted_neighbors(&w, v)),
            None => {
                let c = (0..w.n())
                    .filter(|&v| !removed[v] && w.degree(v) > 0)
                    .find_map(|v| configuration_at(&w, v))
                    .ok_or(StructureError::NotFound)?;
                (c.center, StepCase::Config(c.kind), c.neighbors)
            }
        };
        let d = neighbors.len();
        let aux_edge = (d >= 2).then(|| {
            let (a, b) = (neighbors[d - 2], neighbors[d - 1]);
            AuxEdge {
                edge: edge(a, b),
                added: !w.has_edge(a, b),
            }
        });
        w.isolate(vertex);
        removed[vertex] = true;
        if let Some(AuxEdge { edge: (a, b), added: true }) = aux_edge {
            w.insert_edge(a, b);
        }
        steps.push(PlanStep {
            vertex,
            case,
            neighbors,
            aux_edge,
        });
    }
    Ok(EliminationPlan {
        steps,
        residue: (0..g.n()).filter(|&v| !removed[v]).collect(),
        max_degree: g.max_degree(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named_instance;

    #[test]
    fn path_leaves_one_vertex() {
        let p = build_elimination_plan(&AbstractGraph::path(3)).unwrap();
        assert_eq!(p.steps.len(), 2);
        assert!(p.steps.iter().all(|s| s.case == StepCase::Deg2));
        assert_eq!(p.residue, vec![2]);
    }

    #[test]
    fn icosahedron_starts_with_c4() {
        let g = named_instance("icosahedron").unwrap().base().clone();
        let p = build_elimination_plan(&g).unwrap();
        let first = &p.steps[0];
        assert_eq!((first.vertex, first.case), (0, StepCase::Config(ConfigKind::C4)));
        assert_eq!(first.neighbors.len(), 5);
        assert_eq!(p.steps.len() + p.residue.len(), 12);
    }

    #[test]
    fn k9_is_rejected() {
        assert_eq!(build_elimination_plan(&AbstractGraph::complete(9)), Err(StructureError::NotFound));
    }

    #[test]
    fn cycle_adds_aux_edges() {
        let p = build_elimination_plan(&AbstractGraph::cycle(5)).unwrap();
        let first = &p.steps[0];
        assert_eq!(first.vertex, 0);
        assert_eq!(first.aux_edge, Some(AuxEdge { edge: (1, 4), added: true }));
    }
}
