use crate::model::{Crossing, OnePlanarDrawing, PlaneGraph};

use super::CorpusError;

pub const NAMED_INSTANCES: [&str; 6] = ["k3", "k4", "octahedron", "icosahedron", "k6_1planar", "kite"];

/// Outward-oriented faces of the octahedron on `±x = 0/1, ±y = 2/3, ±z = 4/5`.
fn octahedron_faces() -> Vec<Vec<usize>> {
    let mut faces = Vec::with_capacity(8);
    for sx in [1i32, -1] {
        for sy in [1i32, -1] {
            for sz in [1i32, -1] {
                let x = if sx > 0 { 0 } else { 1 };
                let y = if sy > 0 { 2 } else { 3 };
                let z = if sz > 0 { 4 } else { 5 };
                if sx * sy * sz > 0 {
                    faces.push(vec![x, y, z]);
                } else {
                    faces.push(vec![x, z, y]);
                }
            }
        }
    }
    faces
}

/// Icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, bottom 11.
/// Lower vertex `5 + i` sits between upper `i` and `i + 1`.
fn icosahedron_faces() -> Vec<Vec<usize>> {
    let up = |i: usize| 1 + (i % 5);
    let low = |i: usize| 6 + (i % 5);
    let mut faces = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push(vec![0, up(i), up(i + 1)]);
        faces.push(vec![up(i), low(i), up(i + 1)]);
        faces.push(vec![up(i + 1), low(i), low(i + 1)]);
        faces.push(vec![11, low(i + 1), low(i)]);
    }
    faces
}

pub(crate) fn octahedron_plane() -> PlaneGraph {
    PlaneGraph::from_faces(6, &octahedron_faces())
}

/// One of the fixed drawings used throughout tests and examples.
///
/// `kite` is K4 drawn with its diagonals `0 2` and `1 3` crossing and the
/// 4-cycle `0 1 2 3` around them; `k6_1planar` is the octahedron with its
/// three antipodal pairs joined across three disjoint pairs of faces.
pub fn named_instance(name: &str) -> Result<OnePlanarDrawing, CorpusError> {
    let pg = match name {
        "k3" => PlaneGraph::from_faces(3, &[vec![0, 1, 2], vec![0, 2, 1]]),
        "k4" => PlaneGraph::from_faces(4, &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]]),
        "octahedron" => octahedron_plane(),
        "icosahedron" => PlaneGraph::from_faces(12, &icosahedron_faces()),
        "k6_1planar" => {
            let mut pg = octahedron_plane();
            pg.insert_crossing_edge(2, 4);
            pg.insert_crossing_edge(0, 5);
            pg.insert_crossing_edge(1, 3);
            pg
        }
        "kite" => PlaneGraph::with_crossings(
            4,
            &[vec![0, 1, 4], vec![1, 2, 4], vec![2, 3, 4], vec![3, 0, 4], vec![0, 3, 2, 1]],
            vec![Crossing::new((0, 2), (1, 3))],
        ),
        other => return Err(CorpusError::UnknownInstance(other.to_string())),
    };
    Ok(pg.to_drawing())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{associated_plane_graph, edge_bound_check, validate_drawing};

    #[test]
    fn all_named_instances_validate() {
        for name in NAMED_INSTANCES {
            let d = named_instance(name).unwrap();
            let rep = validate_drawing(&d).unwrap();
            assert!(rep.is_valid(), "{name}: {rep}");
            assert!(edge_bound_check(&d).pass, "{name}");
        }
    }

    #[test]
    fn octahedron_counts() {
        let d = named_instance("octahedron").unwrap();
        assert_eq!((d.n(), d.base().edge_count()), (6, 12));
        let faces = associated_plane_graph(&d).unwrap().faces();
        assert_eq!(faces.faces.len(), 8);
        assert!(faces.faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn icosahedron_is_five_regular() {
        let d = named_instance("icosahedron").unwrap();
        assert_eq!((d.n(), d.base().edge_count()), (12, 30));
        assert!(d.base().degrees().iter().all(|&k| k == 5));
    }

    #[test]
    fn k6_has_three_crossings() {
        let d = named_instance("k6_1planar").unwrap();
        assert_eq!((d.n(), d.base().edge_count(), d.crossings().len()), (6, 15, 3));
        assert_eq!(*d.base(), crate::model::AbstractGraph::complete(6));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(named_instance("k7"), Err(CorpusError::UnknownInstance(_))));
    }
}
