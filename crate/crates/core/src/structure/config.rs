use serde::{Deserialize, Serialize};

use crate::model::AbstractGraph;

use super::StructureError;

/// The six unavoidable configurations. A centre of degree `k` matches the
/// kind for `k` when its neighbours, sorted by degree, respect that kind's
/// thresholds in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConfigKind {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 6] = [
        ConfigKind::C1,
        ConfigKind::C2,
        ConfigKind::C3,
        ConfigKind::C4,
        ConfigKind::C5,
        ConfigKind::C6,
    ];

    pub fn for_degree(k: usize) -> Option<Self> {
        Some(match k {
            0..=2 => ConfigKind::C1,
            3 => ConfigKind::C2,
            4 => ConfigKind::C3,
            5 => ConfigKind::C4,
            6 => ConfigKind::C5,
            7 => ConfigKind::C6,
            _ => return None,
        })
    }

    /// Upper bounds on `d(v_1), d(v_2), ...`.
    pub fn thresholds(self) -> &'static [usize] {
        match self {
            ConfigKind::C1 => &[],
            ConfigKind::C2 => &[35],
            ConfigKind::C3 => &[19, 35],
            ConfigKind::C4 => &[14, 19, 35],
            ConfigKind::C5 => &[11, 14, 19, 35],
            ConfigKind::C6 => &[8, 11, 14, 19, 35],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub kind: ConfigKind,
    pub center: usize,
    /// Neighbours sorted by degree, ties by id.
    pub neighbors: Vec<usize>,
    pub neighbor_degrees: Vec<usize>,
}

pub(crate) fn sorted_neighbors(g: &AbstractGraph, v: usize) -> Vec<usize> {
    let mut nb: Vec<usize> = g.neighbors(v).collect();
    nb.sort_by_key(|&u| (g.degree(u), u));
    nb
}

/// The configuration centred at `v`, if any.
pub fn configuration_at(g: &AbstractGraph, v: usize) -> Option<Configuration> {
    let kind = ConfigKind::for_degree(g.degree(v))?;
    let neighbors = sorted_neighbors(g, v);
    let neighbor_degrees: Vec<usize> = neighbors.iter().map(|&u| g.degree(u)).collect();
    let ok = kind.thresholds().iter().zip(&neighbor_degrees).all(|(&t, &d)| d <= t);
    ok.then_some(Configuration {
        kind,
        center: v,
        neighbors,
        neighbor_degrees,
    })
}

/// The configuration at the smallest vertex id that has one.
pub fn find_configuration(g: &AbstractGraph) -> Result<Configuration, StructureError> {
    (0..g.n())
        .find_map(|v| configuration_at(g, v))
        .ok_or(StructureError::NotFound)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LightPath {
    pub path: [usize; 3],
    pub degrees: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LightStar {
    pub center: usize,
    pub leaves: [usize; 3],
    pub degrees: [usize; 4],
}

fn require_min_degree(g: &AbstractGraph, required: usize) -> Result<(), StructureError> {
    let found = g.min_degree().ok_or(StructureError::NotFound)?;
    if found < required {
        return Err(StructureError::MinDegree { required, found });
    }
    Ok(())
}

/// A path `v_1 v v_2` through the centre of a configuration and its two
/// lowest-degree neighbours. Needs minimum degree 4.
pub fn find_light_path3(g: &AbstractGraph) -> Result<LightPath, StructureError> {
    require_min_degree(g, 4)?;
    let c = find_configuration(g)?;
    let path = [c.neighbors[0], c.center, c.neighbors[1]];
    Ok(LightPath {
        path,
        degrees: path.map(|u| g.degree(u)),
    })
}

/// A star at the centre of a configuration with its three lowest-degree
/// neighbours. Needs minimum degree 5.
pub fn find_light_star3(g: &AbstractGraph) -> Result<LightStar, StructureError> {
    require_min_degree(g, 5)?;
    let c = find_configuration(g)?;
    let leaves = [c.neighbors[0], c.neighbors[1], c.neighbors[2]];
    Ok(LightStar {
        center: c.center,
        leaves,
        degrees: [
            g.degree(c.center),
            g.degree(leaves[0]),
            g.degree(leaves[1]),
            g.degree(leaves[2]),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named_instance;

    #[test]
    fn degree_two_vertex_is_c1() {
        let g = AbstractGraph::cycle(5);
        let c = find_configuration(&g).unwrap();
        assert_eq!((c.kind, c.center), (ConfigKind::C1, 0));
    }

    #[test]
    fn icosahedron_gives_c4() {
        let g = named_instance("icosahedron").unwrap().base().clone();
        let c = find_configuration(&g).unwrap();
        assert_eq!((c.kind, c.center), (ConfigKind::C4, 0));
        assert_eq!(c.neighbor_degrees, vec![5; 5]);
        assert_eq!(c.neighbors, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn complete_graphs_without_small_vertices() {
        assert_eq!(find_configuration(&AbstractGraph::complete(9)), Err(StructureError::NotFound));
        assert_eq!(find_configuration(&AbstractGraph::complete(10)), Err(StructureError::NotFound));
        assert_eq!(find_configuration(&AbstractGraph::complete(8)).unwrap().kind, ConfigKind::C6);
    }

    #[test]
    fn thresholds_are_checked_in_order() {
        // Centre 0 of degree 3 whose lightest neighbour has degree 36.
        let mut edges = vec![(0, 1), (0, 2), (0, 3)];
        let mut next = 4;
        for hub in 1..=3 {
            for _ in 0..35 {
                edges.push((hub, next));
                next += 1;
            }
        }
        let g = AbstractGraph::from_edges(next, edges).unwrap();
        assert_eq!(g.degree(1), 36);
        assert!(configuration_at(&g, 0).is_none());
        assert_eq!(find_configuration(&g).unwrap().center, 4);
    }

    #[test]
    fn light_paths_and_stars() {
        let oct = named_instance("octahedron").unwrap().base().clone();
        let p = find_light_path3(&oct).unwrap();
        assert_eq!(p.degrees, [4, 4, 4]);
        assert!(oct.has_edge(p.path[0], p.path[1]) && oct.has_edge(p.path[1], p.path[2]));
        assert_eq!(
            find_light_star3(&oct),
            Err(StructureError::MinDegree { required: 5, found: 4 })
        );
        let ico = named_instance("icosahedron").unwrap().base().clone();
        let s = find_light_star3(&ico).unwrap();
        assert_eq!(s.degrees, [5; 4]);
        let k4 = AbstractGraph::complete(4);
        assert_eq!(
            find_light_path3(&k4),
            Err(StructureError::MinDegree { required: 4, found: 3 })
        );
    }
}
