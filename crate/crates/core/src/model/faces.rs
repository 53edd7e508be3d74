//! Face tracing for rotation systems.
//!
//! A rotation system lists, for every vertex, its neighbours in cyclic order.
//! Faces are traced with the rule: after walking the dart `x -> y`, continue
//! with `y -> succ_y(x)`, where `succ_y(x)` is the entry following `x` in the
//! rotation at `y`. Every dart lies on exactly one face.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

/// One traced face: the vertices at which its darts start, in walk order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Darts of the face in walk order.
    pub fn darts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceList {
    pub faces: Vec<Face>,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Connected components of the underlying graph (isolated vertices included).
    pub components: usize,
    pub isolated_vertices: usize,
}

impl FaceList {
    /// `v - e + f`, counting one face for each isolated vertex.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count as i64
            + (self.faces.len() + self.isolated_vertices) as i64
    }

    /// Total genus of the embedding, summed over components.
    ///
    /// Each component contributes `2 - 2g`, so the sum is
    /// `2 * components - 2 * genus`.
    pub fn genus(&self) -> i64 {
        (2 * self.components as i64 - self.euler_characteristic()) / 2
    }

    /// `v - e + f = 1 + components` for the plane count of faces, which is the
    /// traced count minus the `components - 1` duplicated outer faces.
    pub fn is_planar(&self) -> bool {
        self.genus() == 0
    }

    pub fn total_length(&self) -> usize {
        self.faces.iter().map(Face::len).sum()
    }
}

/// Traces all faces of a rotation system.
///
/// The rotation must be symmetric: `y` appears in `rotation[x]` exactly once
/// iff `x` appears in `rotation[y]` exactly once.
///
/// # Panics
///
/// Panics if the rotation is not symmetric.
pub fn trace_faces(rotation: &[Vec<usize>]) -> FaceList {
    let n = rotation.len();
    let position: Vec<HashMap<usize, usize>> = rotation
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &y)| (y, i)).collect())
        .collect();
    let mut seen: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = Vec::new();

    for start in 0..n {
        for first in 0..rotation[start].len() {
            if seen[start][first] {
                continue;
            }
            let mut vertices = Vec::new();
            let (mut x, mut i) = (start, first);
            while !seen[x][i] {
                seen[x][i] = true;
                vertices.push(x);
                let y = rotation[x][i];
                let back = *position[y]
                    .get(&x)
                    .unwrap_or_else(|| panic!("rotation is not symmetric: {x}->{y} has no reverse"));
                let next = (back + 1) % rotation[y].len();
                x = y;
                i = next;
            }
            faces.push(Face { vertices });
        }
    }

    let darts: usize = rotation.iter().map(Vec::len).sum();
    FaceList {
        faces,
        vertex_count: n,
        edge_count: darts / 2,
        components: components(rotation),
        isolated_vertices: rotation.iter().filter(|r| r.is_empty()).count(),
    }
}

fn components(rotation: &[Vec<usize>]) -> usize {
    let n = rotation.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(x) = stack.pop() {
            for &y in &rotation[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Successor of `x` in the rotation at `y`.
pub(crate) fn succ(rotation: &[Vec<usize>], y: usize, x: usize) -> usize {
    let r = &rotation[y];
    let i = r.iter().position(|&w| w == x).expect("dart present in rotation");
    r[(i + 1) % r.len()]
}

/// Builds a rotation system from consistently oriented face boundaries.
///
/// For every face `(a, b, c, ...)` the successor of `a` at `b` is `c`; the
/// cyclic list at each vertex starts from its smallest neighbour.
pub(crate) fn rotation_from_faces(n: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ_map: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (a, b, c) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            let prev = succ_map[b].insert(a, c);
            assert!(prev.is_none(), "dart {a}->{b} used by two faces");
        }
    }
    succ_map
        .into_iter()
        .map(|m| {
            let Some(&first) = m.keys().min() else {
                return Vec::new();
            };
            let mut order = vec![first];
            let mut cur = m[&first];
            while cur != first {
                order.push(cur);
                cur = m[&cur];
            }
            assert_eq!(order.len(), m.len(), "faces do not close up around a vertex");
            order
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_two_faces() {
        let rot = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        let fl = trace_faces(&rot);
        assert_eq!(fl.faces.len(), 2);
        assert!(fl.faces.iter().all(|f| f.len() == 3));
        assert_eq!(fl.genus(), 0);
        assert_eq!(fl.total_length(), 2 * fl.edge_count);
    }

    #[test]
    fn toroidal_k4_is_flagged() {
        // Planar rotation of K4 traced to 4 triangles; swapping two entries at
        // one vertex gives a rotation with fewer faces (genus 1).
        let planar = rotation_from_faces(4, &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]]);
        let fl = trace_faces(&planar);
        assert_eq!(fl.faces.len(), 4);
        assert!(fl.is_planar());

        let mut twisted = planar.clone();
        twisted[0].swap(0, 1);
        let fl = trace_faces(&twisted);
        assert_eq!(fl.euler_characteristic(), 0);
        assert_eq!(fl.genus(), 1);
        assert!(!fl.is_planar());
    }

    #[test]
    fn isolated_vertices_and_trees() {
        let fl = trace_faces(&[vec![], vec![2], vec![1]]);
        assert_eq!(fl.components, 2);
        assert_eq!(fl.faces.len(), 1);
        assert_eq!(fl.faces[0].len(), 2);
        assert_eq!(fl.genus(), 0);
    }
}
