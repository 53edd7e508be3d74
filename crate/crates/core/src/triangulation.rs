//! Canonical triangulation of a 1-planar drawing.
//!
//! Kite edges are drawn around every crossing (an existing copy of a kite
//! edge elsewhere in the drawing is rerouted), and the remaining faces are
//! triangulated with chords between real vertices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{
    associated_plane_graph, edge, plane_graph_unchecked, validate_drawing, Edge, ModelError, OnePlanarDrawing,
    PlaneGraph,
};

/// Edges touched while triangulating, in the order they were touched.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    /// Kite edges that were not edges of the input.
    pub added_kite_edges: Vec<Edge>,
    /// Input edges rerouted onto a kite (their old copy was deleted).
    pub removed_duplicates: Vec<Edge>,
    /// One edge per crossing pair, the lexicographically larger one. These
    /// are kept in the planarization and count as present when chords are
    /// chosen, so adding them back cannot create parallel edges.
    pub temporarily_removed: Vec<Edge>,
    pub added_fill_edges: Vec<Edge>,
}

impl Provenance {
    pub fn is_empty(&self) -> bool {
        self.added_kite_edges.is_empty()
            && self.removed_duplicates.is_empty()
            && self.added_fill_edges.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalTriangulation {
    drawing: OnePlanarDrawing,
    plane: PlaneGraph,
    provenance: Provenance,
}

impl CanonicalTriangulation {
    pub fn drawing(&self) -> &OnePlanarDrawing {
        &self.drawing
    }

    /// The planarization of the triangulated drawing.
    pub fn plane(&self) -> &PlaneGraph {
        &self.plane
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn into_drawing(self) -> OnePlanarDrawing {
        self.drawing
    }
}

#[derive(Debug, Error)]
pub enum TriangulationError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("drawing is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("drawing needs at least 3 vertices, has {0}")]
    TooSmall(usize),
    #[error("no admissible chord in face {face:?}")]
    Step4Deadlock {
        face: Vec<usize>,
        /// State reached when the search stopped.
        partial: Box<CanonicalTriangulation>,
    },
}

/// Whether some face of `pg` on the edge `p q` is a triangle through a
/// crossing vertex other than `z`.
fn bound_to_other_crossing(pg: &PlaneGraph, p: usize, q: usize, z: usize) -> bool {
    [(p, q), (q, p)].into_iter().any(|(a, b)| {
        let y = pg.succ(b, a);
        y != z && pg.is_crossing(y) && pg.succ(y, b) == a
    })
}

fn corner_is_triangle(pg: &PlaneGraph, p: usize, z: usize, q: usize) -> bool {
    pg.adjacent(p, q) && pg.succ(q, z) == p && pg.succ(p, q) == z
}

/// Draws the four kite edges around every crossing.
fn add_kites(pg: &mut PlaneGraph, prov: &mut Provenance) {
    let mut i = 0;
    while i < pg.crossings.len() {
        for k in 0..4 {
            let z = pg.real + i;
            let (p, q) = (pg.rotation[z][k], pg.rotation[z][(k + 1) % 4]);
            if corner_is_triangle(pg, p, z, q) {
                continue;
            }
            let e = edge(p, q);
            if pg.adjacent(p, q) {
                if bound_to_other_crossing(pg, p, q, z) {
                    continue;
                }
                pg.remove_plain_edge(p, q);
                prov.removed_duplicates.push(e);
            } else if let Some(j) = pg.crossing_index_of(e) {
                pg.remove_crossed_edge(j, e);
                prov.removed_duplicates.push(e);
                if j < i {
                    i -= 1;
                }
            } else {
                prov.added_kite_edges.push(e);
            }
            let z = pg.real + i;
            pg.insert_chord(p, z, q, z);
        }
        i += 1;
    }
}

/// Lexicographically smallest chord `(u, w)` between face vertices at
/// distance two, with its middle vertex.
fn best_chord(pg: &PlaneGraph, face: &[usize]) -> Option<(Edge, usize)> {
    let len = face.len();
    (0..len)
        .filter_map(|i| {
            let (u, w) = (face[i], face[(i + 2) % len]);
            let ok = u != w && !pg.is_crossing(u) && !pg.is_crossing(w) && !pg.has_original_edge(u, w);
            ok.then_some((edge(u, w), i))
        })
        .min()
}

fn fill_faces(pg: &mut PlaneGraph, prov: &mut Provenance) -> Result<(), Vec<usize>> {
    let mut faces: Vec<Vec<usize>> = pg
        .faces()
        .faces
        .into_iter()
        .map(|f| f.vertices)
        .filter(|f| f.len() > 3)
        .collect();
    while let Some(idx) = (0..faces.len()).max_by_key(|&i| (faces[i].len(), std::cmp::Reverse(i))) {
        let face = &faces[idx];
        let Some((chord, i)) = best_chord(pg, face) else {
            return Err(face.clone());
        };
        let len = face.len();
        let (u, x, w) = (face[i], face[(i + 1) % len], face[(i + 2) % len]);
        pg.insert_chord(u, x, w, x);
        prov.added_fill_edges.push(chord);
        let mut rest = face.clone();
        rest.remove((i + 1) % len);
        if rest.len() > 3 {
            faces[idx] = rest;
        } else {
            faces.swap_remove(idx);
        }
    }
    Ok(())
}

fn finish(pg: PlaneGraph, mut prov: Provenance) -> CanonicalTriangulation {
    prov.temporarily_removed = pg.crossings.iter().map(|c| c.e1.max(c.e2)).collect();
    CanonicalTriangulation {
        drawing: pg.to_drawing(),
        plane: pg,
        provenance: prov,
    }
}

/// Triangulates a valid drawing with connected planarization on at least
/// three vertices.
///
/// Every face of the result's planarization is a triangle and every crossing
/// sits inside its kite. The vertex set is never changed; if some face admits
/// no chord between non-adjacent real vertices the search stops with
/// [`TriangulationError::Step4Deadlock`]. Already canonical drawings are
/// returned unchanged.
pub fn canonical_triangulate(d: &OnePlanarDrawing) -> Result<CanonicalTriangulation, TriangulationError> {
    if d.n() < 3 {
        return Err(TriangulationError::TooSmall(d.n()));
    }
    let mut pg = associated_plane_graph(d)?;
    let components = pg.graph().component_count();
    if components != 1 {
        return Err(TriangulationError::Disconnected { components });
    }
    let mut prov = Provenance::default();
    add_kites(&mut pg, &mut prov);
    match fill_faces(&mut pg, &mut prov) {
        Ok(()) => Ok(finish(pg, prov)),
        Err(face) => Err(TriangulationError::Step4Deadlock {
            face,
            partial: Box::new(finish(pg, prov)),
        }),
    }
}

/// Wraps a drawing that is already canonical, with empty provenance.
pub fn as_canonical(d: &OnePlanarDrawing) -> Option<CanonicalTriangulation> {
    is_canonical(d).then(|| finish(plane_graph_unchecked(d), Provenance::default()))
}

/// True iff `d` is valid, has a connected planarization, has at least three vertices and every
/// face of its planarization is a triangle. Crossings then lie inside their
/// kites automatically: the face at each corner of a crossing is a triangle
/// on the crossing and two consecutive real neighbours.
pub fn is_canonical(d: &OnePlanarDrawing) -> bool {
    if d.n() < 3 {
        return false;
    }
    match validate_drawing(d) {
        Ok(rep) if rep.is_valid() => {}
        _ => return false,
    }
    let pg = plane_graph_unchecked(d);
    if !pg.graph().is_connected() {
        return false;
    }
    pg.faces().faces.iter().all(|f| f.len() == 3) && kites_present(&pg)
}

fn kites_present(pg: &PlaneGraph) -> bool {
    (pg.real..pg.order()).all(|z| {
        let r = &pg.rotation[z];
        (0..4).all(|k| corner_is_triangle(pg, r[k], z, r[(k + 1) % 4]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{gen_random_oneplanar, named_instance};
    use crate::model::{AbstractGraph, Crossing, EdgeEnd};
    use num_rational::Ratio;

    fn bare_crossing() -> OnePlanarDrawing {
        // p=0, r=1, q=2, s=3; edges pq and rs cross at vertex 4.
        let base = AbstractGraph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        let rotation = vec![
            vec![EdgeEnd::half_at(0, 2, 0)],
            vec![EdgeEnd::half_at(1, 3, 1)],
            vec![EdgeEnd::half_at(0, 2, 2)],
            vec![EdgeEnd::half_at(1, 3, 3)],
            vec![
                EdgeEnd::half_at(0, 2, 0),
                EdgeEnd::half_at(1, 3, 1),
                EdgeEnd::half_at(0, 2, 2),
                EdgeEnd::half_at(1, 3, 3),
            ],
        ];
        OnePlanarDrawing::from_parts(base, vec![Crossing::new((0, 2), (1, 3))], rotation)
    }

    #[test]
    fn plane_triangulation_is_unchanged() {
        let d = named_instance("octahedron").unwrap();
        let t = canonical_triangulate(&d).unwrap();
        assert_eq!(*t.drawing(), d);
        assert!(t.provenance().is_empty());
        assert!(t.provenance().temporarily_removed.is_empty());
        assert!(is_canonical(&d));
    }

    #[test]
    fn bare_crossing_gets_its_kite_then_deadlocks() {
        // Four vertices and one crossing cannot be fully triangulated: the
        // outer 4-face's diagonals are the crossing edges themselves.
        let d = bare_crossing();
        assert!(validate_drawing(&d).unwrap().is_valid());
        match canonical_triangulate(&d) {
            Err(TriangulationError::Step4Deadlock { face, partial }) => {
                assert_eq!(face.len(), 4);
                assert_eq!(partial.provenance().added_kite_edges, vec![(0, 1), (1, 2), (2, 3), (0, 3)]);
                assert_eq!(partial.drawing().base().edge_count(), 6);
                assert!(kites_present(partial.plane()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn kite_is_not_canonical() {
        let d = named_instance("kite").unwrap();
        assert!(!is_canonical(&d));
        assert!(!is_canonical(&bare_crossing()));
    }

    #[test]
    fn octahedron_with_one_crossing_is_canonical() {
        let mut pg = crate::corpus::octahedron_plane();
        pg.insert_crossing_edge(2, 4);
        let d = pg.to_drawing();
        let t = canonical_triangulate(&d).unwrap();
        assert_eq!(*t.drawing(), d);
        assert_eq!(t.provenance().temporarily_removed, vec![(2, 4)]);
    }

    #[test]
    fn duplicate_of_kite_edge_is_rerouted() {
        // Crossing 0-2 x 1-3 at vertex 5 with vertex 4 sitting in the corner
        // between 0 and 1; the edge 0-1 runs around the outside.
        let pg = PlaneGraph {
            real: 5,
            rotation: vec![vec![5, 4, 1], vec![0, 4, 5], vec![5], vec![5], vec![1, 0], vec![2, 1, 0, 3]],
            crossings: vec![Crossing::new((0, 2), (1, 3))],
        };
        let d = pg.to_drawing();
        assert!(validate_drawing(&d).unwrap().is_valid());
        let t = canonical_triangulate(&d).unwrap();
        let prov = t.provenance();
        assert_eq!(prov.removed_duplicates, vec![(0, 1)]);
        assert_eq!(prov.added_kite_edges, vec![(1, 2), (0, 3), (2, 3)]);
        assert_eq!(prov.added_fill_edges, vec![(2, 4), (3, 4)]);
        assert!(is_canonical(t.drawing()));
        assert!(t.drawing().base().has_edge(0, 1));
        assert_eq!(t.drawing().base().edge_count(), 10);
    }

    #[test]
    fn corpus_outputs_are_canonical_and_idempotent() {
        for seed in 0..20 {
            let d = gen_random_oneplanar(30 + seed as usize, Ratio::new(1, 2), seed).unwrap();
            let t = canonical_triangulate(&d).unwrap();
            assert!(is_canonical(t.drawing()), "seed {seed}");
            let again = canonical_triangulate(t.drawing()).unwrap();
            assert_eq!(again.drawing(), t.drawing(), "seed {seed}");
            assert!(again.provenance().is_empty());
        }
    }

    #[test]
    fn small_and_disconnected_inputs_are_rejected() {
        let g = AbstractGraph::from_edges(2, [(0, 1)]).unwrap();
        let d = OnePlanarDrawing::from_parts(g, vec![], vec![vec![EdgeEnd::whole(0, 1)], vec![EdgeEnd::whole(0, 1)]]);
        assert!(matches!(canonical_triangulate(&d), Err(TriangulationError::TooSmall(2))));
        let g = AbstractGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let rot = vec![
            vec![EdgeEnd::whole(0, 1)],
            vec![EdgeEnd::whole(0, 1)],
            vec![EdgeEnd::whole(2, 3)],
            vec![EdgeEnd::whole(2, 3)],
        ];
        let d = OnePlanarDrawing::from_parts(g, vec![], rot);
        assert!(matches!(
            canonical_triangulate(&d),
            Err(TriangulationError::Disconnected { components: 2 })
        ));
    }

    #[test]
    fn paths_and_trees_triangulate() {
        // Path 0-1-2-3-4: one face of length 8.
        let g = AbstractGraph::path(5);
        let rot: Vec<Vec<EdgeEnd>> = (0..5)
            .map(|v| {
                let mut r = Vec::new();
                if v > 0 {
                    r.push(EdgeEnd::whole(v - 1, v));
                }
                if v < 4 {
                    r.push(EdgeEnd::whole(v, v + 1));
                }
                r
            })
            .collect();
        let d = OnePlanarDrawing::from_parts(g, vec![], rot);
        let t = canonical_triangulate(&d).unwrap();
        assert!(is_canonical(t.drawing()));
        assert_eq!(t.drawing().base().edge_count(), 3 * 5 - 6);
    }
}
