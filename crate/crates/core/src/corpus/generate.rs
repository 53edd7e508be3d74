use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::model::{edge, plane_graph_unchecked, AbstractGraph, Edge, OnePlanarDrawing, PlaneGraph};

use super::named::named_instance;
use super::rng::XorShift64Star;
use super::CorpusError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    PlaneTriangulation,
    RandomOneplanar,
    /// A random 1-planar drawing with a share of its edges deleted.
    ThinnedOneplanar,
    Named,
}

/// Everything needed to reproduce one generated drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    #[serde(default)]
    pub n: usize,
    #[serde(default = "zero_fraction")]
    pub crossing_fraction: Ratio<u32>,
    /// Share of edges deleted by the thinned kind.
    #[serde(default = "zero_fraction")]
    pub removal_fraction: Ratio<u32>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

fn zero_fraction() -> Ratio<u32> {
    Ratio::from_integer(0)
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<OnePlanarDrawing, CorpusError> {
        match self.kind {
            GeneratorKind::PlaneTriangulation => gen_plane_triangulation(self.n, self.seed),
            GeneratorKind::RandomOneplanar => gen_random_oneplanar(self.n, self.crossing_fraction, self.seed),
            GeneratorKind::ThinnedOneplanar => {
                let d = gen_random_oneplanar(self.n, self.crossing_fraction, self.seed)?;
                Ok(thin_drawing(&d, self.removal_fraction, self.seed ^ 0x7468_696e))
            }
            GeneratorKind::Named => named_instance(self.name.as_deref().unwrap_or_default()),
        }
    }

    pub fn label(&self) -> String {
        match self.kind {
            GeneratorKind::Named => format!("named:{}", self.name.as_deref().unwrap_or_default()),
            GeneratorKind::PlaneTriangulation => format!("plane(n={},seed={})", self.n, self.seed),
            GeneratorKind::RandomOneplanar => {
                format!("oneplanar(n={},f={},seed={})", self.n, self.crossing_fraction, self.seed)
            }
            GeneratorKind::ThinnedOneplanar => format!(
                "thinned(n={},f={},r={},seed={})",
                self.n, self.crossing_fraction, self.removal_fraction, self.seed
            ),
        }
    }
}

fn check_fraction(f: Ratio<u32>) -> Result<(), CorpusError> {
    if *f.denom() == 0 || f > Ratio::from_integer(1) {
        return Err(CorpusError::BadFraction(f.to_string()));
    }
    Ok(())
}

fn plane_triangulation(n: usize, rng: &mut XorShift64Star) -> PlaneGraph {
    let mut pg = PlaneGraph::from_faces(3, &[vec![0, 1, 2], vec![0, 2, 1]]);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for _ in 3..n {
        let f = rng.below(faces.len());
        let [a, b, c] = faces[f];
        let w = pg.insert_vertex_in_face(a, b, c);
        faces[f] = [a, b, w];
        faces.push([b, c, w]);
        faces.push([c, a, w]);
    }
    pg
}

/// Random maximal plane graph: a seed triangle, then each new vertex is
/// dropped into a uniformly chosen face.
pub fn gen_plane_triangulation(n: usize, seed: u64) -> Result<OnePlanarDrawing, CorpusError> {
    if n < 3 {
        return Err(CorpusError::TooFewVertices { n, min: 3 });
    }
    let mut rng = XorShift64Star::new(seed);
    Ok(plane_triangulation(n, &mut rng).to_drawing())
}

/// Whether a vertex with `degree` and `crossings` crossing neighbours agrees
/// with the degree/crossing relations every proper drawing satisfies.
fn crossing_load_ok(degree: usize, crossings: usize) -> bool {
    match degree {
        0..=3 => crossings == 0,
        4 => crossings <= 1,
        _ => 2 * crossings <= degree,
    }
}

/// Random 1-planar drawing grown from a random plane triangulation.
///
/// Edges `b d` whose two faces `a b d`, `c b d` are uncrossed triangles with
/// `a`, `c` non-adjacent are visited in shuffled order, and `a c` is drawn
/// across `b d` until `floor(fraction * (n - 2))` crossings exist (each
/// crossing consumes two of the `2n - 4` faces, so `n - 2` is the ceiling).
/// An insertion is skipped if it would give some vertex of degree 3 a
/// crossing, or a vertex of degree 4 two crossings. The achieved count is the
/// drawing's crossing count.
pub fn gen_random_oneplanar(n: usize, fraction: Ratio<u32>, seed: u64) -> Result<OnePlanarDrawing, CorpusError> {
    if n < 4 {
        return Err(CorpusError::TooFewVertices { n, min: 4 });
    }
    check_fraction(fraction)?;
    let mut rng = XorShift64Star::new(seed);
    let mut pg = plane_triangulation(n, &mut rng);
    let target = ((n as u64 - 2) * u64::from(*fraction.numer()) / u64::from(*fraction.denom())) as usize;
    if target == 0 {
        return Ok(pg.to_drawing());
    }

    let mut graph = pg.graph();
    let mut crossing_load = vec![0usize; n];
    let mut candidates: Vec<Edge> = graph.edges();
    rng.shuffle(&mut candidates);

    let mut placed = 0;
    for (b, d) in candidates {
        if placed == target {
            break;
        }
        let Some((a, c)) = pg.real_triangle_apexes(b, d) else {
            continue;
        };
        if a == c || graph.has_edge(a, c) {
            continue;
        }
        let ok = [a, c].iter().all(|&x| crossing_load_ok(graph.degree(x) + 1, crossing_load[x] + 1))
            && [b, d].iter().all(|&x| crossing_load_ok(graph.degree(x), crossing_load[x] + 1));
        if !ok {
            continue;
        }
        pg.insert_crossing_edge(b, d);
        graph.insert_edge(a, c);
        for x in [a, b, c, d] {
            crossing_load[x] += 1;
        }
        placed += 1;
    }
    Ok(pg.to_drawing())
}

/// Deletes `floor(fraction * e)` edges chosen at random, skipping any
/// deletion that would disconnect the graph. Deleting a crossed edge
/// removes its crossing.
pub fn thin_drawing(d: &OnePlanarDrawing, fraction: Ratio<u32>, seed: u64) -> OnePlanarDrawing {
    let mut pg = plane_graph_unchecked(d);
    let mut graph: AbstractGraph = d.base().clone();
    let target = (graph.edge_count() as u64 * u64::from(*fraction.numer()) / u64::from((*fraction.denom()).max(1))) as usize;
    let mut rng = XorShift64Star::new(seed);
    let mut candidates = graph.edges();
    rng.shuffle(&mut candidates);
    let mut removed = 0;
    for (u, v) in candidates {
        if removed == target {
            break;
        }
        graph.remove_edge(u, v);
        if !graph.is_connected() {
            graph.insert_edge(u, v);
            continue;
        }
        pg.remove_original_edge(edge(u, v));
        removed += 1;
    }
    pg.to_drawing()
}

/// A reproducible list of generator specs: `count` drawings with `n` drawn
/// from `[n_min, n_max]` and crossing fractions cycling through
/// 0, 1/8, 1/4, 1/2, 3/4, 1. Every third drawing is thinned by 1/3.
pub fn standard_corpus(count: usize, n_min: usize, n_max: usize, seed: u64) -> Vec<GeneratorSpec> {
    const FRACTIONS: [(u32, u32); 6] = [(0, 1), (1, 8), (1, 4), (1, 2), (3, 4), (1, 1)];
    let mut rng = XorShift64Star::new(seed);
    (0..count)
        .map(|i| {
            let n = n_min + rng.below(n_max - n_min + 1);
            let (num, den) = FRACTIONS[i % FRACTIONS.len()];
            let thinned = i % 3 == 2;
            GeneratorSpec {
                kind: if thinned {
                    GeneratorKind::ThinnedOneplanar
                } else {
                    GeneratorKind::RandomOneplanar
                },
                n,
                crossing_fraction: Ratio::new(num, den),
                removal_fraction: if thinned { Ratio::new(1, 3) } else { Ratio::from_integer(0) },
                seed: rng.next_u64(),
                name: None,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{associated_plane_graph, edge_bound_check, validate_drawing};

    #[test]
    fn small_plane_triangulations() {
        let k3 = gen_plane_triangulation(3, 1).unwrap();
        assert_eq!(k3.base().edge_count(), 3);
        assert_eq!(associated_plane_graph(&k3).unwrap().faces().faces.len(), 2);
        let k4 = gen_plane_triangulation(4, 1).unwrap();
        assert_eq!(*k4.base(), AbstractGraph::complete(4));
        assert!(gen_plane_triangulation(2, 0).is_err());
    }

    #[test]
    fn plane_triangulation_n50() {
        let d = gen_plane_triangulation(50, 7).unwrap();
        assert_eq!(d.base().edge_count(), 144);
        let faces = associated_plane_graph(&d).unwrap().faces();
        assert!(faces.faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn zero_fraction_is_planar() {
        let d = gen_random_oneplanar(30, Ratio::from_integer(0), 3).unwrap();
        assert!(d.crossings().is_empty());
        assert_eq!(d.base().edge_count(), 3 * 30 - 6);
    }

    #[test]
    fn four_vertices_admit_no_crossing() {
        // K4 is complete, so no non-adjacent apex pair exists.
        let d = gen_random_oneplanar(4, Ratio::from_integer(1), 11).unwrap();
        assert_eq!(*d.base(), AbstractGraph::complete(4));
        assert!(d.crossings().is_empty());
        let b = edge_bound_check(&d);
        assert!(b.pass && b.edges <= 8);
    }

    #[test]
    fn hundred_vertices_quarter_fraction() {
        let d = gen_random_oneplanar(100, Ratio::new(1, 4), 42).unwrap();
        assert!(validate_drawing(&d).unwrap().is_valid());
        assert!(edge_bound_check(&d).pass);
        assert!(!d.crossings().is_empty());
        assert!(d.crossings().len() <= 24);
        assert_eq!(d.base().edge_count(), 3 * 100 - 6 + d.crossings().len());
    }

    #[test]
    fn generation_is_deterministic() {
        let a = gen_random_oneplanar(60, Ratio::new(1, 2), 5).unwrap();
        let b = gen_random_oneplanar(60, Ratio::new(1, 2), 5).unwrap();
        assert_eq!(a, b);
        let c = gen_random_oneplanar(60, Ratio::new(1, 2), 6).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn thinned_drawings_stay_valid_and_connected() {
        let d = gen_random_oneplanar(40, Ratio::new(3, 4), 9).unwrap();
        let t = thin_drawing(&d, Ratio::new(1, 3), 1);
        assert!(validate_drawing(&t).unwrap().is_valid());
        assert!(t.base().is_connected());
        assert_eq!(t.base().edge_count(), d.base().edge_count() - d.base().edge_count() / 3);
    }

    #[test]
    fn rejects_bad_fraction() {
        assert!(gen_random_oneplanar(10, Ratio::new(3, 2), 0).is_err());
    }
}
