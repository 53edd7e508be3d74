use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::model::PlaneGraph;

use super::StructureError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Mirror,
    Image,
    Normal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriangleClass {
    #[serde(rename = "heavy")]
    Heavy,
    I,
    II,
    III,
}

impl TriangleClass {
    /// `mirror` and `images` are the degrees of the mirror and image vertex.
    pub fn of(mirror: usize, images: [usize; 2]) -> Self {
        let min_image = images[0].min(images[1]);
        let max = mirror.max(images[0]).max(images[1]);
        if max > 7 {
            TriangleClass::Heavy
        } else if min_image <= 5 {
            TriangleClass::II
        } else if mirror <= 5 {
            TriangleClass::I
        } else {
            TriangleClass::III
        }
    }
}

/// The triangle on a mirror neighbour and the two image neighbours of one
/// crossing at the centre.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorTriangle {
    pub crossing: usize,
    pub mirror: usize,
    pub images: [usize; 2],
    pub degrees: [usize; 3],
    pub class: TriangleClass,
}

/// A maximal image, mirror, image, ..., image run on the associated cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    /// Position of the first vertex on the associated cycle.
    pub start: usize,
    pub vertices: Vec<usize>,
    pub scope: usize,
    /// The run wraps the whole cycle and so has `2 * scope` vertices
    /// instead of `2 * scope + 1`.
    pub closed: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub heavy: usize,
    pub class_i: usize,
    pub class_ii: usize,
    pub class_iii: usize,
}

impl ClassCounts {
    pub fn light(&self) -> usize {
        self.class_i + self.class_ii + self.class_iii
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureCensus {
    pub center: usize,
    pub degree: usize,
    /// Neighbours in rotation order with crossings replaced by mirrors.
    pub cyclic_neighbors: Vec<usize>,
    pub labels: Vec<Label>,
    pub mirror_triangles: Vec<MirrorTriangle>,
    pub segments: Vec<Segment>,
    /// Vertices strictly between consecutive segments; a single gap holding
    /// every neighbour when there is no segment.
    pub intervals: Vec<Vec<usize>>,
    /// Crossing vertices adjacent to the centre.
    pub c: usize,
    /// Total scope.
    pub t: usize,
    /// Light mirror triangles.
    pub x: usize,
    pub x1: usize,
    pub x2: usize,
    pub i: usize,
    pub j: usize,
    pub classes: ClassCounts,
    /// Number of neighbours of each degree.
    pub n_k: BTreeMap<usize, usize>,
}

impl StructureCensus {
    /// Neighbours of degree at least `k`.
    pub fn n_plus(&self, k: usize) -> usize {
        self.n_k.range(k..).map(|(_, &c)| c).sum()
    }

    pub fn n(&self, k: usize) -> usize {
        self.n_k.get(&k).copied().unwrap_or(0)
    }

    pub fn interval(&self) -> Vec<usize> {
        self.intervals.concat()
    }
}

/// Labels the neighbours of the real vertex `v` in a planarization whose
/// crossings at `v` are each flanked, in `v`'s rotation, by the two ends of
/// the edge they cross (true in every canonical triangulation and in a kite).
pub fn classify_neighbors(pg: &PlaneGraph, v: usize) -> Result<StructureCensus, StructureError> {
    if v >= pg.real_count() {
        return Err(StructureError::NotRealVertex {
            vertex: v,
            real: pg.real_count(),
        });
    }
    let rot = &pg.rotation()[v];
    let d = rot.len();
    let mut cyclic = rot.clone();
    let mut labels = vec![Label::Normal; d];
    let mut triangles = Vec::new();
    let mut crossing_at = vec![false; d];

    for (k, &z) in rot.iter().enumerate() {
        let Some(c) = pg.crossing(z) else {
            continue;
        };
        let bad = StructureError::NotLocallyCanonical { vertex: v, crossing: z };
        let e = c.edge_at(v).ok_or(bad.clone())?;
        let mirror = if e.0 == v { e.1 } else { e.0 };
        let image = c.other(e);
        let (prev, next) = (rot[(k + d - 1) % d], rot[(k + 1) % d]);
        if d < 3 || !((prev, next) == image || (next, prev) == image) {
            return Err(bad);
        }
        cyclic[k] = mirror;
        crossing_at[k] = true;
        labels[k] = Label::Mirror;
        let degrees = [pg.degree(mirror), pg.degree(prev), pg.degree(next)];
        triangles.push(MirrorTriangle {
            crossing: z,
            mirror,
            images: [prev, next],
            degrees,
            class: TriangleClass::of(degrees[0], [degrees[1], degrees[2]]),
        });
    }
    for k in 0..d {
        if crossing_at[k] {
            labels[(k + d - 1) % d] = Label::Image;
            labels[(k + 1) % d] = Label::Image;
        }
    }

    let (segments, intervals) = segments(&cyclic, &crossing_at);

    let mut classes = ClassCounts::default();
    for t in &triangles {
        match t.class {
            TriangleClass::Heavy => classes.heavy += 1,
            TriangleClass::I => classes.class_i += 1,
            TriangleClass::II => classes.class_ii += 1,
            TriangleClass::III => classes.class_iii += 1,
        }
    }
    let mut n_k = BTreeMap::new();
    for &u in &cyclic {
        *n_k.entry(pg.degree(u)).or_insert(0) += 1;
    }
    let c = triangles.len();
    Ok(StructureCensus {
        center: v,
        degree: d,
        cyclic_neighbors: cyclic,
        labels,
        mirror_triangles: triangles,
        t: segments.iter().map(|s| s.scope).sum(),
        segments,
        intervals,
        c,
        x: classes.light(),
        x1: classes.class_i + classes.class_ii,
        x2: classes.class_iii,
        i: classes.class_i,
        j: classes.class_ii,
        classes,
        n_k,
    })
}

fn segments(cyclic: &[usize], crossing_at: &[bool]) -> (Vec<Segment>, Vec<Vec<usize>>) {
    let d = cyclic.len();
    let count = crossing_at.iter().filter(|&&b| b).count();
    if count == 0 {
        return (Vec::new(), vec![cyclic.to_vec()]);
    }
    let at = |k: usize| cyclic[k % d];
    if d == 2 * count && (0..d).all(|k| crossing_at[k] != crossing_at[(k + 1) % d]) {
        let first = crossing_at.iter().position(|&b| b).expect("a crossing");
        let start = (first + d - 1) % d;
        let seg = Segment {
            start,
            vertices: (start..start + d).map(at).collect(),
            scope: count,
            closed: true,
        };
        return (vec![seg], Vec::new());
    }
    // (start position, end position) of each run, in cyclic order.
    let mut runs = Vec::new();
    for k in 0..d {
        if crossing_at[k] && !crossing_at[(k + d - 2) % d] {
            let mut last = k;
            let mut scope = 1;
            while crossing_at[(last + 2) % d] && (last + 2) % d != k {
                last = (last + 2) % d;
                scope += 1;
            }
            runs.push(((k + d - 1) % d, (last + 1) % d, scope));
        }
    }
    let segs: Vec<Segment> = runs
        .iter()
        .map(|&(s, e, scope)| {
            let len = 2 * scope + 1;
            debug_assert_eq!((s + len - 1) % d, e);
            Segment {
                start: s,
                vertices: (s..s + len).map(at).collect(),
                scope,
                closed: false,
            }
        })
        .collect();
    let intervals = (0..runs.len())
        .map(|r| {
            let end = runs[r].1;
            let next_start = runs[(r + 1) % runs.len()].0;
            let gap = (next_start + d - end - 1) % d;
            (end + 1..end + 1 + gap).map(at).collect()
        })
        .collect();
    (segs, intervals)
}

/// Mirror-triangle class counts at `v`.
pub fn mirror_triangle_census(pg: &PlaneGraph, v: usize) -> Result<ClassCounts, StructureError> {
    Ok(classify_neighbors(pg, v)?.classes)
}
