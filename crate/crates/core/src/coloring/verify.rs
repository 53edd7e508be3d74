use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::model::{AbstractGraph, Edge};

use super::types::EdgeColoring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ColoringViolation {
    Uncolored { edge: Edge },
    NotAnEdge { edge: Edge },
    Conflict { vertex: usize, color: usize, edges: [Edge; 2] },
    /// Closed walk `cycle[0] .. cycle[k-1] cycle[0]` using only colors `a` and `b`.
    BichromaticCycle { colors: (usize, usize), cycle: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub total: bool,
    pub proper: bool,
    pub acyclic: bool,
    pub colors_used: usize,
    pub max_color: Option<usize>,
    pub violations: Vec<ColoringViolation>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.total && self.proper && self.acyclic
    }
}

struct Dsu(HashMap<usize, usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let p = *self.0.entry(x).or_insert(x);
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0.insert(x, r);
        r
    }
}

fn path(adj: &HashMap<usize, Vec<usize>>, from: usize, to: usize) -> Vec<usize> {
    let mut prev = HashMap::from([(from, from)]);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in adj.get(&x).into_iter().flatten() {
            if let std::collections::hash_map::Entry::Vacant(slot) = prev.entry(y) {
                slot.insert(x);
                queue.push_back(y);
            }
        }
    }
    let mut out = vec![to];
    let mut x = to;
    while x != from {
        x = prev[&x];
        out.push(x);
    }
    out.reverse();
    out
}

/// Checks totality, properness and that every two color classes span a forest.
pub fn verify_acyclic(g: &AbstractGraph, coloring: &EdgeColoring) -> VerifyReport {
    let mut violations = Vec::new();
    for e in g.edges() {
        if !coloring.assignment.contains_key(&e) {
            violations.push(ColoringViolation::Uncolored { edge: e });
        }
    }
    let mut by_color: BTreeMap<usize, Vec<Edge>> = BTreeMap::new();
    for (&e, &c) in &coloring.assignment {
        if e.0 >= g.n() || e.1 >= g.n() || !g.has_edge(e.0, e.1) {
            violations.push(ColoringViolation::NotAnEdge { edge: e });
        } else {
            by_color.entry(c).or_default().push(e);
        }
    }
    let total = violations.is_empty();

    let mut proper = true;
    for (&c, es) in &by_color {
        let mut seen: HashMap<usize, Edge> = HashMap::new();
        for &e in es {
            for x in [e.0, e.1] {
                if let Some(&other) = seen.get(&x) {
                    proper = false;
                    violations.push(ColoringViolation::Conflict {
                        vertex: x,
                        color: c,
                        edges: [other, e],
                    });
                } else {
                    seen.insert(x, e);
                }
            }
        }
    }

    let mut acyclic = true;
    let colors: Vec<usize> = by_color.keys().copied().collect();
    for (i, &a) in colors.iter().enumerate() {
        for &b in &colors[i + 1..] {
            let mut dsu = Dsu(HashMap::new());
            let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
            for &(u, v) in by_color[&a].iter().chain(&by_color[&b]) {
                if dsu.find(u) == dsu.find(v) {
                    acyclic = false;
                    violations.push(ColoringViolation::BichromaticCycle {
                        colors: (a, b),
                        cycle: path(&adj, u, v),
                    });
                    continue;
                }
                let (ru, rv) = (dsu.find(u), dsu.find(v));
                dsu.0.insert(ru, rv);
                adj.entry(u).or_default().push(v);
                adj.entry(v).or_default().push(u);
            }
        }
    }

    VerifyReport {
        total,
        proper,
        acyclic,
        colors_used: colors.len(),
        max_color: colors.last().copied(),
        violations,
    }
}
