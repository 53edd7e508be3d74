use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::model::{edge, Edge};

/// `max(2Δ - 2, Δ + 83)`.
pub fn palette_size(max_degree: usize) -> usize {
    (max_degree + 83).max((2 * max_degree).saturating_sub(2))
}

/// An edge coloring with colors `0..palette`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "ColoringRepr", into = "ColoringRepr")]
pub struct EdgeColoring {
    pub palette: usize,
    pub assignment: BTreeMap<Edge, usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringRepr {
    #[serde(rename = "L")]
    palette: usize,
    edges: Vec<(usize, usize, usize)>,
}

impl From<ColoringRepr> for EdgeColoring {
    fn from(r: ColoringRepr) -> Self {
        EdgeColoring {
            palette: r.palette,
            assignment: r.edges.into_iter().map(|(u, v, c)| (edge(u, v), c)).collect(),
        }
    }
}

impl From<EdgeColoring> for ColoringRepr {
    fn from(c: EdgeColoring) -> Self {
        ColoringRepr {
            palette: c.palette,
            edges: c.assignment.into_iter().map(|((u, v), c)| (u, v, c)).collect(),
        }
    }
}

impl EdgeColoring {
    pub fn color(&self, u: usize, v: usize) -> Option<usize> {
        self.assignment.get(&edge(u, v)).copied()
    }

    pub fn colors_used(&self) -> usize {
        self.assignment.values().collect::<BTreeSet<_>>().len()
    }
}

/// Allowed colors per edge.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "ListsRepr", into = "ListsRepr")]
pub struct ColorLists {
    pub lists: BTreeMap<Edge, BTreeSet<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ListsRepr {
    lists: Vec<(usize, usize, Vec<usize>)>,
}

impl From<ListsRepr> for ColorLists {
    fn from(r: ListsRepr) -> Self {
        ColorLists {
            lists: r
                .lists
                .into_iter()
                .map(|(u, v, cs)| (edge(u, v), cs.into_iter().collect()))
                .collect(),
        }
    }
}

impl From<ColorLists> for ListsRepr {
    fn from(l: ColorLists) -> Self {
        ListsRepr {
            lists: l
                .lists
                .into_iter()
                .map(|((u, v), cs)| (u, v, cs.into_iter().collect()))
                .collect(),
        }
    }
}

impl ColorLists {
    /// Every edge gets `0..palette`.
    pub fn full(edges: impl IntoIterator<Item = Edge>, palette: usize) -> Self {
        let all: BTreeSet<usize> = (0..palette).collect();
        ColorLists {
            lists: edges.into_iter().map(|e| (e, all.clone())).collect(),
        }
    }

    pub fn get(&self, e: Edge) -> Option<&BTreeSet<usize>> {
        self.lists.get(&e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palette_examples() {
        assert_eq!(palette_size(5), 88);
        assert_eq!(palette_size(85), 168);
        assert_eq!(palette_size(84), 167);
        assert_eq!(palette_size(100), 198);
        assert_eq!(palette_size(0), 83);
    }

    #[test]
    fn json_shapes() {
        let mut c = EdgeColoring {
            palette: 85,
            ..Default::default()
        };
        c.assignment.insert((0, 1), 2);
        c.assignment.insert((1, 2), 0);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"L":85,"edges":[[0,1,2],[1,2,0]]}"#);
        assert_eq!(serde_json::from_str::<EdgeColoring>(&s).unwrap(), c);
        let l = ColorLists::full([(0, 1)], 3);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"lists":[[0,1,[0,1,2]]]}"#);
        assert_eq!(serde_json::from_str::<ColorLists>(&s).unwrap(), l);
    }
}
