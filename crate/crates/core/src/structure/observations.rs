use serde::{Deserialize, Serialize};

use crate::model::PlaneGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Warning,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    /// Which of the four local conditions failed.
    pub item: u8,
    pub severity: Severity,
    /// The offending vertex, or the vertices of the offending face.
    pub vertices: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservationReport {
    pub findings: Vec<Finding>,
}

impl ObservationReport {
    pub fn passes(&self, item: u8) -> bool {
        !self.findings.iter().any(|f| f.item == item)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity == Severity::Warning)
    }

    pub fn errors(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity == Severity::Error)
    }

    /// No errors; warnings are allowed.
    pub fn is_ok(&self) -> bool {
        self.errors().next().is_none()
    }
}

/// Checks the local degree/crossing conditions of a canonical triangulation:
///
/// 1. no two crossing vertices are adjacent or share a face (warning);
/// 2. a real vertex of degree 3 has no crossing neighbour;
/// 3. a real vertex of degree 4 has at most one;
/// 4. a real vertex of degree `d >= 5` has at most `d / 2`.
pub fn check_observations(pg: &PlaneGraph) -> ObservationReport {
    let mut findings = Vec::new();
    for z in pg.real_count()..pg.order() {
        for &y in &pg.rotation()[z] {
            if pg.is_crossing(y) && z < y {
                findings.push(Finding {
                    item: 1,
                    severity: Severity::Warning,
                    vertices: vec![z, y],
                    detail: "adjacent crossing vertices".into(),
                });
            }
        }
    }
    for f in pg.faces().faces {
        let crossings = f.vertices.iter().filter(|&&x| pg.is_crossing(x)).count();
        if crossings >= 2 {
            findings.push(Finding {
                item: 1,
                severity: Severity::Warning,
                vertices: f.vertices,
                detail: format!("face with {crossings} crossing vertices"),
            });
        }
    }
    for v in 0..pg.real_count() {
        let d = pg.degree(v);
        let c = pg.rotation()[v].iter().filter(|&&y| pg.is_crossing(y)).count();
        let failed = match d {
            3 => (c > 0).then_some(2),
            4 => (c > 1).then_some(3),
            d if d >= 5 => (2 * c > d).then_some(4),
            _ => None,
        };
        if let Some(item) = failed {
            findings.push(Finding {
                item,
                severity: Severity::Error,
                vertices: vec![v],
                detail: format!("degree {d} with {c} crossing neighbours"),
            });
        }
    }
    ObservationReport { findings }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named_instance;
    use crate::model::{plane_graph_unchecked, validate_drawing, Crossing};

    fn rotation_by_angle(points: &[(f64, f64)], edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut rot = vec![Vec::new(); points.len()];
        for &(a, b) in edges {
            rot[a].push(b);
            rot[b].push(a);
        }
        for (x, r) in rot.iter_mut().enumerate() {
            let (px, py) = points[x];
            r.sort_by(|&a, &b| {
                let ta = (points[a].1 - py).atan2(points[a].0 - px);
                let tb = (points[b].1 - py).atan2(points[b].0 - px);
                ta.total_cmp(&tb)
            });
        }
        rot
    }

    #[test]
    fn plane_triangulation_passes() {
        let pg = plane_graph_unchecked(&named_instance("icosahedron").unwrap());
        let rep = check_observations(&pg);
        assert!(rep.findings.is_empty());
        let pg = plane_graph_unchecked(&named_instance("k6_1planar").unwrap());
        assert!(check_observations(&pg).findings.is_empty());
    }

    #[test]
    fn two_crossings_on_one_face_warn() {
        // Crossing 6 at 0-2 x 1-3 and crossing 7 at 2-4 x 3-5; the face
        // 6-2-7-3 holds both, and so does the outer face.
        let points = [
            (-2.0, -1.0),
            (-2.0, 1.0),
            (0.0, 1.0),
            (0.0, -1.0),
            (2.0, -1.0),
            (2.0, 1.0),
            (-1.0, 0.0),
            (1.0, 0.0),
        ];
        let edges = [(0, 6), (6, 2), (1, 6), (6, 3), (2, 7), (7, 4), (3, 7), (7, 5)];
        let pg = PlaneGraph {
            real: 6,
            rotation: rotation_by_angle(&points, &edges),
            crossings: vec![Crossing::new((0, 2), (1, 3)), Crossing::new((2, 4), (3, 5))],
        };
        assert!(validate_drawing(&pg.to_drawing()).unwrap().is_valid());
        let rep = check_observations(&pg);
        assert!(!rep.passes(1));
        assert!(rep.is_ok());
        let mut faces: Vec<Vec<usize>> = rep.warnings().map(|w| w.vertices.clone()).collect();
        assert_eq!(faces.len(), 2);
        faces.iter_mut().for_each(|f| f.sort());
        assert!(faces.contains(&vec![2, 3, 6, 7]));
    }

    #[test]
    fn crossing_at_degree_three_vertex_is_an_error() {
        let pg = plane_graph_unchecked(&named_instance("kite").unwrap());
        let rep = check_observations(&pg);
        assert!(!rep.is_ok());
        assert!(!rep.passes(2));
        assert_eq!(rep.errors().count(), 4);
    }
}
