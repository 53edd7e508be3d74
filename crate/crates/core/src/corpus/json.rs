use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::model::{AbstractGraph, Crossing, Edge, EdgeEnd, OnePlanarDrawing, Slot};

use super::CorpusError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossingRecord {
    e1: Edge,
    e2: Edge,
}

/// On-disk layout of a drawing. Rotation keys are planarization vertex ids.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingFile {
    pub n: usize,
    pub edges: Vec<Edge>,
    #[serde(default)]
    crossings: Vec<CrossingRecord>,
    rotation: BTreeMap<usize, Vec<(usize, usize, Slot)>>,
}

impl From<&OnePlanarDrawing> for DrawingFile {
    fn from(d: &OnePlanarDrawing) -> Self {
        DrawingFile {
            n: d.n(),
            edges: d.base().edges(),
            crossings: d
                .crossings()
                .iter()
                .map(|c| CrossingRecord { e1: c.e1, e2: c.e2 })
                .collect(),
            rotation: d
                .rotation()
                .iter()
                .enumerate()
                .map(|(x, ends)| (x, ends.iter().map(|t| (t.edge.0, t.edge.1, t.slot)).collect()))
                .collect(),
        }
    }
}

impl TryFrom<DrawingFile> for OnePlanarDrawing {
    type Error = CorpusError;

    fn try_from(f: DrawingFile) -> Result<Self, CorpusError> {
        let base = AbstractGraph::from_edges(f.n, f.edges)?;
        let crossings: Vec<Crossing> = f.crossings.into_iter().map(|c| Crossing::new(c.e1, c.e2)).collect();
        let order = f.n + crossings.len();
        let mut rotation = vec![Vec::new(); order];
        let mut seen = vec![false; order];
        for (x, ends) in f.rotation {
            if x >= order {
                return Err(CorpusError::Drawing(format!(
                    "rotation key {x} outside the {order} planarization vertices"
                )));
            }
            seen[x] = true;
            rotation[x] = ends.into_iter().map(|(u, v, s)| EdgeEnd::new(u, v, s)).collect();
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            return Err(CorpusError::Drawing(format!("rotation has no entry for vertex {x}")));
        }
        let d = OnePlanarDrawing::from_parts(base, crossings, rotation);
        d.check_well_formed()?;
        Ok(d)
    }
}

/// Deserializes JSON, reporting the path of the offending field on error.
pub fn from_json_str<T: DeserializeOwned>(text: &str) -> Result<T, CorpusError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| CorpusError::Json {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })
}

/// Parses a drawing file and checks that every id and edge reference exists.
/// Invariant violations are left for `validate_drawing`.
pub fn read_drawing(text: &str) -> Result<OnePlanarDrawing, CorpusError> {
    let f: DrawingFile = from_json_str(text)?;
    f.try_into()
}

/// Canonical serialization: compact JSON followed by a newline.
pub fn write_drawing(d: &OnePlanarDrawing) -> String {
    let mut s = serde_json::to_string(&DrawingFile::from(d)).expect("drawing serializes");
    s.push('\n');
    s
}
