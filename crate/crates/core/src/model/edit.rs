//! In-place edits of a planarization that keep it a plane embedding.
//!
//! All insertions are expressed through face corners, using the tracing
//! convention of [`super::faces`]: the face walking `x -> y -> z` has its
//! corner at `y` between the rotation entries `x` and `succ_y(x) = z`.

use super::drawing::{Crossing, PlaneGraph};
use super::faces::{rotation_from_faces, succ};
use super::graph::{edge, Edge};

fn insert_after(list: &mut Vec<usize>, anchor: usize, value: usize) {
    let i = list.iter().position(|&w| w == anchor).expect("anchor in rotation");
    list.insert(i + 1, value);
}

fn insert_before(list: &mut Vec<usize>, anchor: usize, value: usize) {
    let i = list.iter().position(|&w| w == anchor).expect("anchor in rotation");
    list.insert(i, value);
}

fn replace(list: &mut [usize], old: usize, new: usize) {
    let slot = list.iter_mut().find(|w| **w == old).expect("entry in rotation");
    *slot = new;
}

fn remove(list: &mut Vec<usize>, value: usize) {
    let i = list.iter().position(|&w| w == value).expect("entry in rotation");
    list.remove(i);
}

impl PlaneGraph {
    /// A crossing-free plane graph from consistently oriented faces.
    pub(crate) fn from_faces(n: usize, faces: &[Vec<usize>]) -> Self {
        PlaneGraph {
            real: n,
            rotation: rotation_from_faces(n, faces),
            crossings: Vec::new(),
        }
    }

    pub(crate) fn with_crossings(real: usize, faces: &[Vec<usize>], crossings: Vec<Crossing>) -> Self {
        let order = real + crossings.len();
        PlaneGraph {
            real,
            rotation: rotation_from_faces(order, faces),
            crossings,
        }
    }

    pub(crate) fn succ(&self, y: usize, x: usize) -> usize {
        succ(&self.rotation, y, x)
    }

    pub(crate) fn adjacent(&self, x: usize, y: usize) -> bool {
        self.rotation[x].contains(&y)
    }

    /// Whether `u v` is an edge of the underlying 1-planar graph, crossed or not.
    pub(crate) fn has_original_edge(&self, u: usize, v: usize) -> bool {
        self.adjacent(u, v) || self.crossing_index_of(edge(u, v)).is_some()
    }

    pub(crate) fn crossing_index_of(&self, e: Edge) -> Option<usize> {
        self.crossings.iter().position(|c| c.contains_edge(e))
    }

    /// Adds a real vertex inside the triangular face `a -> b -> c` and returns
    /// its id. Only allowed while the planarization has no crossings.
    pub(crate) fn insert_vertex_in_face(&mut self, a: usize, b: usize, c: usize) -> usize {
        assert!(self.crossings.is_empty(), "real vertices precede crossing ids");
        let w = self.rotation.len();
        insert_after(&mut self.rotation[a], c, w);
        insert_after(&mut self.rotation[b], a, w);
        insert_after(&mut self.rotation[c], b, w);
        self.rotation.push(vec![b, a, c]);
        self.real += 1;
        w
    }

    /// Apexes `(a, c)` of the two faces at the uncrossed edge `b d` when both
    /// are triangles on real vertices.
    pub(crate) fn real_triangle_apexes(&self, b: usize, d: usize) -> Option<(usize, usize)> {
        if !self.adjacent(b, d) || self.is_crossing(b) || self.is_crossing(d) {
            return None;
        }
        let a = self.succ(d, b);
        let c = self.succ(b, d);
        if self.is_crossing(a) || self.is_crossing(c) {
            return None;
        }
        if self.succ(a, d) != b || self.succ(c, b) != d {
            return None;
        }
        Some((a, c))
    }

    /// Draws the edge `a c` across `b d`, where `a` and `c` are the apexes of
    /// the two real triangles on `b d`. Returns the new crossing vertex.
    pub(crate) fn insert_crossing_edge(&mut self, b: usize, d: usize) -> usize {
        let (a, c) = self.real_triangle_apexes(b, d).expect("two real triangles at the edge");
        let z = self.rotation.len();
        replace(&mut self.rotation[b], d, z);
        replace(&mut self.rotation[d], b, z);
        insert_after(&mut self.rotation[a], d, z);
        insert_after(&mut self.rotation[c], b, z);
        self.rotation.push(vec![b, a, d, c]);
        self.crossings.push(Crossing::new((b, d), (a, c)));
        z
    }

    /// Inserts the chord `u w` into the face whose corners are
    /// `(_, u, x)` and `(x', w, _)`: `w` goes before `x` at `u`, and `u`
    /// goes after `x'` at `w`.
    pub(crate) fn insert_chord(&mut self, u: usize, before_at_u: usize, w: usize, after_at_w: usize) {
        insert_before(&mut self.rotation[u], before_at_u, w);
        insert_after(&mut self.rotation[w], after_at_w, u);
    }

    /// Removes an uncrossed edge between real vertices.
    pub(crate) fn remove_plain_edge(&mut self, u: usize, v: usize) {
        remove(&mut self.rotation[u], v);
        remove(&mut self.rotation[v], u);
    }

    /// Removes one edge of the crossing `index`; the other edge becomes
    /// uncrossed and crossing ids above `index` shift down by one.
    pub(crate) fn remove_crossed_edge(&mut self, index: usize, e: Edge) {
        let c = self.crossings[index];
        debug_assert!(c.contains_edge(e));
        let other = c.other(e);
        let z = self.real + index;
        remove(&mut self.rotation[e.0], z);
        remove(&mut self.rotation[e.1], z);
        replace(&mut self.rotation[other.0], z, other.1);
        replace(&mut self.rotation[other.1], z, other.0);
        self.rotation.remove(z);
        self.crossings.remove(index);
        for r in &mut self.rotation {
            for y in r.iter_mut() {
                if *y > z {
                    *y -= 1;
                }
            }
        }
    }

    /// Removes an edge of the underlying graph, crossed or not.
    pub(crate) fn remove_original_edge(&mut self, e: Edge) {
        match self.crossing_index_of(e) {
            Some(i) => self.remove_crossed_edge(i, e),
            None => self.remove_plain_edge(e.0, e.1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::validate_drawing;

    fn octahedron() -> PlaneGraph {
        PlaneGraph::from_faces(
            6,
            &[
                vec![0, 2, 4],
                vec![0, 4, 3],
                vec![0, 3, 5],
                vec![0, 5, 2],
                vec![1, 4, 2],
                vec![1, 3, 4],
                vec![1, 5, 3],
                vec![1, 2, 5],
            ],
        )
    }

    #[test]
    fn crossing_insertion_keeps_drawing_valid() {
        let mut pg = octahedron();
        assert!(pg.faces().is_planar());
        let (a, c) = pg.real_triangle_apexes(2, 4).unwrap();
        assert_eq!(edge(a, c), (0, 1));
        pg.insert_crossing_edge(2, 4);
        let d = pg.to_drawing();
        let rep = validate_drawing(&d).unwrap();
        assert!(rep.is_valid(), "{rep}");
        assert_eq!(d.base().edge_count(), 13);
        assert!(pg.faces().faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn removing_crossed_edge_restores_plain_edge() {
        let mut pg = octahedron();
        let before = pg.clone();
        pg.insert_crossing_edge(2, 4);
        pg.remove_crossed_edge(0, (0, 1));
        assert_eq!(pg.crossings().len(), 0);
        assert_eq!(pg.graph(), before.graph());
        assert!(validate_drawing(&pg.to_drawing()).unwrap().is_valid());
    }

    #[test]
    fn vertex_insertion() {
        let mut pg = PlaneGraph::from_faces(3, &[vec![0, 1, 2], vec![0, 2, 1]]);
        let w = pg.insert_vertex_in_face(0, 1, 2);
        assert_eq!(w, 3);
        let fl = pg.faces();
        assert_eq!(fl.faces.len(), 4);
        assert!(fl.is_planar());
    }
}
