use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::faces::{trace_faces, FaceList};
use super::graph::{edge, AbstractGraph, Edge};
use super::ModelError;

/// Which piece of an original edge a planarization edge is.
///
/// `Half1` is the piece between the smaller endpoint and the crossing,
/// `Half2` the piece between the crossing and the larger endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    Whole,
    Half1,
    Half2,
}

/// An edge-end token: a planarization edge named by its original edge and slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub edge: Edge,
    pub slot: Slot,
}

impl EdgeEnd {
    pub fn new(u: usize, v: usize, slot: Slot) -> Self {
        EdgeEnd {
            edge: edge(u, v),
            slot,
        }
    }

    pub fn whole(u: usize, v: usize) -> Self {
        EdgeEnd::new(u, v, Slot::Whole)
    }

    /// The half of `u v` that touches the real endpoint `x`.
    pub fn half_at(u: usize, v: usize, x: usize) -> Self {
        let e = edge(u, v);
        let slot = if x == e.0 { Slot::Half1 } else { Slot::Half2 };
        EdgeEnd { edge: e, slot }
    }

    /// Real endpoint of a half token.
    pub fn real_end(&self) -> usize {
        match self.slot {
            Slot::Half2 => self.edge.1,
            _ => self.edge.0,
        }
    }
}

impl fmt::Display for EdgeEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slot = match self.slot {
            Slot::Whole => "whole",
            Slot::Half1 => "half1",
            Slot::Half2 => "half2",
        };
        write!(f, "[{},{},{}]", self.edge.0, self.edge.1, slot)
    }
}

/// Two original edges crossing at one point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub e1: Edge,
    pub e2: Edge,
}

impl Crossing {
    pub fn new(e1: Edge, e2: Edge) -> Self {
        Crossing {
            e1: edge(e1.0, e1.1),
            e2: edge(e2.0, e2.1),
        }
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.e1 == e || self.e2 == e
    }

    /// The crossed edge incident with `v`, if any.
    pub fn edge_at(&self, v: usize) -> Option<Edge> {
        if self.e1.0 == v || self.e1.1 == v {
            Some(self.e1)
        } else if self.e2.0 == v || self.e2.1 == v {
            Some(self.e2)
        } else {
            None
        }
    }

    pub fn other(&self, e: Edge) -> Edge {
        if self.e1 == e {
            self.e2
        } else {
            self.e1
        }
    }

    pub fn endpoints(&self) -> [usize; 4] {
        [self.e1.0, self.e1.1, self.e2.0, self.e2.1]
    }
}

/// A 1-planar drawing stored as the rotation system of its planarization.
///
/// Real vertices are `0..n`; the crossing with index `i` is the
/// planarization vertex `n + i`. The constructor performs no checks so that
/// broken drawings can be represented and reported by [`validate_drawing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePlanarDrawing {
    base: AbstractGraph,
    crossings: Vec<Crossing>,
    rotation: Vec<Vec<EdgeEnd>>,
}

impl OnePlanarDrawing {
    pub fn from_parts(base: AbstractGraph, crossings: Vec<Crossing>, rotation: Vec<Vec<EdgeEnd>>) -> Self {
        OnePlanarDrawing {
            base,
            crossings,
            rotation,
        }
    }

    /// The abstract graph `G`.
    pub fn base(&self) -> &AbstractGraph {
        &self.base
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn rotation(&self) -> &[Vec<EdgeEnd>] {
        &self.rotation
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn crossing_vertex(&self, index: usize) -> usize {
        self.n() + index
    }

    pub fn is_crossing_vertex(&self, x: usize) -> bool {
        x >= self.n()
    }

    pub fn planarization_order(&self) -> usize {
        self.n() + self.crossings.len()
    }

    pub fn into_parts(self) -> (AbstractGraph, Vec<Crossing>, Vec<Vec<EdgeEnd>>) {
        (self.base, self.crossings, self.rotation)
    }

    /// Map from each crossed edge to the crossings it takes part in.
    fn crossings_by_edge(&self) -> HashMap<Edge, Vec<usize>> {
        let mut map: HashMap<Edge, Vec<usize>> = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            map.entry(c.e1).or_default().push(i);
            map.entry(c.e2).or_default().push(i);
        }
        map
    }

    /// Checks ids and edge references; failures here are hard errors, not
    /// invariant violations.
    pub fn check_well_formed(&self) -> Result<(), ModelError> {
        let n = self.n();
        let expected = self.planarization_order();
        if self.rotation.len() != expected {
            return Err(ModelError::RotationLength {
                expected,
                found: self.rotation.len(),
            });
        }
        for (i, c) in self.crossings.iter().enumerate() {
            for e in [c.e1, c.e2] {
                if e.1 >= n {
                    return Err(ModelError::VertexOutOfRange { vertex: e.1, n });
                }
                if !self.base.has_edge(e.0, e.1) {
                    return Err(ModelError::CrossingNotAnEdge { crossing: i, edge: e });
                }
            }
        }
        for (x, ends) in self.rotation.iter().enumerate() {
            for t in ends {
                if t.edge.1 >= n {
                    return Err(ModelError::VertexOutOfRange { vertex: t.edge.1, n });
                }
                if t.edge.0 == t.edge.1 || !self.base.has_edge(t.edge.0, t.edge.1) {
                    return Err(ModelError::UnknownEdge { vertex: x, token: *t });
                }
            }
        }
        Ok(())
    }

    /// The planarization vertices joined by an edge-end token, or `None` if
    /// the token names a half of an edge that is not crossed exactly once.
    fn token_ends(&self, t: &EdgeEnd, by_edge: &HashMap<Edge, Vec<usize>>) -> Option<(usize, usize)> {
        match t.slot {
            Slot::Whole => Some(t.edge),
            Slot::Half1 | Slot::Half2 => {
                let cs = by_edge.get(&t.edge)?;
                if cs.len() != 1 {
                    return None;
                }
                Some((t.real_end(), self.crossing_vertex(cs[0])))
            }
        }
    }

    /// Converts the token rotation to neighbour ids; the drawing must be valid.
    pub(crate) fn neighbor_rotation(&self) -> Vec<Vec<usize>> {
        let by_edge = self.crossings_by_edge();
        self.rotation
            .iter()
            .enumerate()
            .map(|(x, ends)| {
                ends.iter()
                    .map(|t| {
                        let (a, b) = self.token_ends(t, &by_edge).expect("valid drawing");
                        if a == x {
                            b
                        } else {
                            a
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// One violated drawing invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    CrossingEndpointsNotDistinct { crossing: usize },
    EdgeCrossedMoreThanOnce { edge: Edge, crossings: Vec<usize> },
    CrossingDegree { crossing: usize, degree: usize },
    CrossingNotAlternating { crossing: usize },
    RotationMismatch { vertex: usize, detail: String },
    NonPlanar { genus: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CrossingEndpointsNotDistinct { crossing } => {
                write!(f, "crossing {crossing}: end vertices not pairwise distinct")
            }
            Violation::EdgeCrossedMoreThanOnce { edge, crossings } => {
                write!(f, "edge {edge:?} crossed more than once (crossings {crossings:?})")
            }
            Violation::CrossingDegree { crossing, degree } => {
                write!(f, "crossing {crossing}: crossing degree ≠ 4 (found {degree})")
            }
            Violation::CrossingNotAlternating { crossing } => {
                write!(f, "crossing {crossing}: rotation does not alternate between its two edges")
            }
            Violation::RotationMismatch { vertex, detail } => {
                write!(f, "vertex {vertex}: {detail}")
            }
            Violation::NonPlanar { genus } => write!(f, "rotation system has genus {genus}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Genus from face tracing; absent when the rotation could not be traced.
    pub genus: Option<i64>,
    pub faces: Option<usize>,
    pub components: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid (genus 0, {} faces)", self.faces.unwrap_or(0));
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every invariant of a 1-planar drawing.
///
/// Malformed ids are returned as `Err`; invariant violations are collected
/// in the report.
pub fn validate_drawing(d: &OnePlanarDrawing) -> Result<ValidationReport, ModelError> {
    d.check_well_formed()?;
    let n = d.n();
    let by_edge = d.crossings_by_edge();
    let mut violations = Vec::new();

    for (i, c) in d.crossings.iter().enumerate() {
        let ends: HashSet<usize> = c.endpoints().into_iter().collect();
        if ends.len() != 4 {
            violations.push(Violation::CrossingEndpointsNotDistinct { crossing: i });
        }
    }
    let mut multiply_crossed: Vec<(Edge, Vec<usize>)> = by_edge
        .iter()
        .filter(|(_, cs)| cs.len() > 1)
        .map(|(e, cs)| (*e, cs.clone()))
        .collect();
    multiply_crossed.sort();
    for (e, cs) in multiply_crossed {
        violations.push(Violation::EdgeCrossedMoreThanOnce { edge: e, crossings: cs });
    }

    let mut incidence_ok = violations.is_empty();

    // Crossing vertices: four halves, alternating between the two edges.
    for (i, c) in d.crossings.iter().enumerate() {
        let z = d.crossing_vertex(i);
        let ends = &d.rotation[z];
        if ends.len() != 4 {
            violations.push(Violation::CrossingDegree {
                crossing: i,
                degree: ends.len(),
            });
            incidence_ok = false;
            continue;
        }
        let expected: HashSet<EdgeEnd> = [c.e1, c.e2]
            .iter()
            .flat_map(|e| [EdgeEnd::new(e.0, e.1, Slot::Half1), EdgeEnd::new(e.0, e.1, Slot::Half2)])
            .collect();
        let found: HashSet<EdgeEnd> = ends.iter().copied().collect();
        if found != expected {
            violations.push(Violation::RotationMismatch {
                vertex: z,
                detail: "crossing rotation does not list the four halves of its edges".into(),
            });
            incidence_ok = false;
            continue;
        }
        let alternating = ends[0].edge == ends[2].edge && ends[1].edge == ends[3].edge && ends[0].edge != ends[1].edge;
        if !alternating {
            violations.push(Violation::CrossingNotAlternating { crossing: i });
            incidence_ok = false;
        }
    }

    // Real vertices: exactly one end per incident edge.
    for x in 0..n {
        let mut expected: Vec<EdgeEnd> = d
            .base
            .neighbors(x)
            .map(|y| match by_edge.get(&edge(x, y)).map(Vec::len) {
                Some(1) => EdgeEnd::half_at(x, y, x),
                _ => EdgeEnd::whole(x, y),
            })
            .collect();
        let mut found = d.rotation[x].clone();
        expected.sort();
        found.sort();
        if expected != found {
            let missing: Vec<String> = expected
                .iter()
                .filter(|t| !found.contains(t))
                .map(ToString::to_string)
                .collect();
            let extra: Vec<String> = found
                .iter()
                .filter(|t| !expected.contains(t))
                .map(ToString::to_string)
                .collect();
            let duplicated = found.windows(2).any(|w| w[0] == w[1]);
            violations.push(Violation::RotationMismatch {
                vertex: x,
                detail: format!(
                    "rotation ends do not match incident edges (missing {missing:?}, unexpected {extra:?}{})",
                    if duplicated { ", duplicated end" } else { "" }
                ),
            });
            incidence_ok = false;
        }
    }

    let components = d.base.component_count();
    let (genus, faces) = if incidence_ok {
        let fl = trace_faces(&d.neighbor_rotation());
        if !fl.is_planar() {
            violations.push(Violation::NonPlanar { genus: fl.genus() });
        }
        (Some(fl.genus()), Some(fl.faces.len()))
    } else {
        (None, None)
    };

    Ok(ValidationReport {
        violations,
        genus,
        faces,
        components,
    })
}

/// Outcome of the `e <= 4v - 8` test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBound {
    pub pass: bool,
    pub vertices: usize,
    pub edges: usize,
    /// `4v - 8`; negative for `v < 2`.
    pub bound: i64,
}

impl EdgeBound {
    /// Vacuously passes for fewer than three vertices.
    pub fn check(vertices: usize, edges: usize) -> Self {
        let bound = 4 * vertices as i64 - 8;
        let pass = vertices < 3 || edges as i64 <= bound;
        EdgeBound {
            pass,
            vertices,
            edges,
            bound,
        }
    }
}

pub fn edge_bound_check(d: &OnePlanarDrawing) -> EdgeBound {
    EdgeBound::check(d.n(), d.base().edge_count())
}

/// The associated plane graph `G^×`: real vertices `0..real`, then one
/// vertex per crossing, with a neighbour rotation at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    pub(crate) real: usize,
    pub(crate) rotation: Vec<Vec<usize>>,
    pub(crate) crossings: Vec<Crossing>,
}

impl PlaneGraph {
    pub fn real_count(&self) -> usize {
        self.real
    }

    pub fn order(&self) -> usize {
        self.rotation.len()
    }

    pub fn is_crossing(&self, x: usize) -> bool {
        x >= self.real
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, x: usize) -> Option<&Crossing> {
        x.checked_sub(self.real).and_then(|i| self.crossings.get(i))
    }

    pub fn degree(&self, x: usize) -> usize {
        self.rotation[x].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// `G^×` as an abstract simple graph.
    pub fn graph(&self) -> AbstractGraph {
        let edges = self
            .rotation
            .iter()
            .enumerate()
            .flat_map(|(x, r)| r.iter().filter(move |&&y| x < y).map(move |&y| (x, y)));
        AbstractGraph::from_edges(self.order(), edges).expect("planarization is simple")
    }

    pub fn faces(&self) -> FaceList {
        trace_faces(&self.rotation)
    }

    /// Rebuilds the token form of the drawing, keeping every rotation list's
    /// starting position.
    pub(crate) fn to_drawing(&self) -> OnePlanarDrawing {
        let mut edges: Vec<Edge> = Vec::new();
        for (x, r) in self.rotation.iter().enumerate().take(self.real) {
            edges.extend(r.iter().filter(|&&y| y < self.real && x < y).map(|&y| (x, y)));
        }
        for c in &self.crossings {
            edges.push(c.e1);
            edges.push(c.e2);
        }
        let base = AbstractGraph::from_edges(self.real, edges).expect("planarization encodes a simple graph");
        let rotation = self
            .rotation
            .iter()
            .enumerate()
            .map(|(x, r)| {
                r.iter()
                    .map(|&y| {
                        if x < self.real && y < self.real {
                            EdgeEnd::whole(x, y)
                        } else if x < self.real {
                            let e = self.crossings[y - self.real].edge_at(x).expect("half edge at its end");
                            EdgeEnd::half_at(e.0, e.1, x)
                        } else {
                            let e = self.crossings[x - self.real].edge_at(y).expect("half edge at its end");
                            EdgeEnd::half_at(e.0, e.1, y)
                        }
                    })
                    .collect()
            })
            .collect();
        OnePlanarDrawing::from_parts(base, self.crossings.clone(), rotation)
    }
}

/// Builds `G^×` for a valid drawing.
pub fn associated_plane_graph(d: &OnePlanarDrawing) -> Result<PlaneGraph, ModelError> {
    let report = validate_drawing(d)?;
    if !report.is_valid() {
        return Err(ModelError::Invalid(report));
    }
    Ok(plane_graph_unchecked(d))
}

pub(crate) fn plane_graph_unchecked(d: &OnePlanarDrawing) -> PlaneGraph {
    PlaneGraph {
        real: d.n(),
        rotation: d.neighbor_rotation(),
        crossings: d.crossings.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named_instance;

    fn kite_parts() -> OnePlanarDrawing {
        named_instance("kite").unwrap()
    }

    #[test]
    fn octahedron_is_valid_genus_zero() {
        let d = named_instance("octahedron").unwrap();
        let r = validate_drawing(&d).unwrap();
        assert!(r.is_valid(), "{r}");
        assert_eq!(r.genus, Some(0));
        assert!(d.crossings().is_empty());
    }

    #[test]
    fn minimal_crossing_is_valid() {
        // Only the two crossing edges pq and rs, with z alternating p, r, q, s.
        let (p, r, q, s) = (0, 1, 2, 3);
        let base = AbstractGraph::from_edges(4, [(p, q), (r, s)]).unwrap();
        let crossing = Crossing::new((p, q), (r, s));
        let rotation = vec![
            vec![EdgeEnd::half_at(p, q, p)],
            vec![EdgeEnd::half_at(r, s, r)],
            vec![EdgeEnd::half_at(p, q, q)],
            vec![EdgeEnd::half_at(r, s, s)],
            vec![
                EdgeEnd::half_at(p, q, p),
                EdgeEnd::half_at(r, s, r),
                EdgeEnd::half_at(p, q, q),
                EdgeEnd::half_at(r, s, s),
            ],
        ];
        let d = OnePlanarDrawing::from_parts(base, vec![crossing], rotation);
        let rep = validate_drawing(&d).unwrap();
        assert!(rep.is_valid(), "{rep}");
        assert_eq!(rep.genus, Some(0));
    }

    #[test]
    fn crossing_with_three_ends_is_reported() {
        let (base, crossings, mut rotation) = kite_parts().into_parts();
        let z = base.n();
        rotation[z].pop();
        let d = OnePlanarDrawing::from_parts(base, crossings, rotation);
        let rep = validate_drawing(&d).unwrap();
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, Violation::CrossingDegree { crossing: 0, degree: 3 })));
        assert!(rep.to_string().contains("crossing degree ≠ 4"));
        assert_eq!(rep.genus, None);
    }

    #[test]
    fn non_alternating_crossing_is_reported() {
        let (base, crossings, mut rotation) = kite_parts().into_parts();
        let z = base.n();
        rotation[z].swap(1, 2);
        let d = OnePlanarDrawing::from_parts(base, crossings, rotation);
        let rep = validate_drawing(&d).unwrap();
        assert!(rep
            .violations
            .contains(&Violation::CrossingNotAlternating { crossing: 0 }));
    }

    #[test]
    fn malformed_ids_are_hard_errors() {
        let (base, crossings, mut rotation) = kite_parts().into_parts();
        rotation[0].push(EdgeEnd::whole(0, 7));
        let d = OnePlanarDrawing::from_parts(base, crossings, rotation);
        assert!(matches!(
            validate_drawing(&d),
            Err(ModelError::VertexOutOfRange { vertex: 7, .. })
        ));

        let (base, _, rotation) = kite_parts().into_parts();
        let d = OnePlanarDrawing::from_parts(base, vec![], rotation);
        assert!(matches!(validate_drawing(&d), Err(ModelError::RotationLength { .. })));
    }

    #[test]
    fn shared_endpoint_crossing_is_reported() {
        let base = AbstractGraph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let c = Crossing::new((0, 1), (0, 2));
        let rotation = vec![
            vec![EdgeEnd::half_at(0, 1, 0), EdgeEnd::half_at(0, 2, 0)],
            vec![EdgeEnd::half_at(0, 1, 1)],
            vec![EdgeEnd::half_at(0, 2, 2)],
            vec![
                EdgeEnd::half_at(0, 1, 0),
                EdgeEnd::half_at(0, 2, 0),
                EdgeEnd::half_at(0, 1, 1),
                EdgeEnd::half_at(0, 2, 2),
            ],
        ];
        let d = OnePlanarDrawing::from_parts(base, vec![c], rotation);
        let rep = validate_drawing(&d).unwrap();
        assert!(rep
            .violations
            .contains(&Violation::CrossingEndpointsNotDistinct { crossing: 0 }));
    }

    #[test]
    fn edge_bound_examples() {
        let k6 = named_instance("k6_1planar").unwrap();
        let b = edge_bound_check(&k6);
        assert!(b.pass);
        assert_eq!((b.vertices, b.edges, b.bound), (6, 15, 16));
        assert!(edge_bound_check(&named_instance("octahedron").unwrap()).pass);
        assert!(!EdgeBound::check(6, 17).pass);
        assert!(EdgeBound::check(2, 1).pass);
        assert!(EdgeBound::check(1, 0).pass);
    }

    #[test]
    fn plane_graph_counts() {
        let oct = named_instance("octahedron").unwrap();
        let pg = associated_plane_graph(&oct).unwrap();
        assert_eq!(pg.graph(), *oct.base());

        let kite = kite_parts();
        let pg = associated_plane_graph(&kite).unwrap();
        assert_eq!(pg.order(), 5);
        assert_eq!(pg.edge_count(), 8);
        let z = 4;
        let g = pg.graph();
        for v in 0..4 {
            assert!(g.has_edge(v, z));
            assert_eq!(pg.degree(v), kite.base().degree(v));
        }

        let k6 = named_instance("k6_1planar").unwrap();
        let pg = associated_plane_graph(&k6).unwrap();
        assert_eq!(pg.order(), 9);
        assert_eq!(pg.edge_count(), 21);
        assert_eq!(pg.to_drawing(), k6);
    }
}
