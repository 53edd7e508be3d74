use std::collections::{BTreeSet, HashMap};

use crate::model::{edge, Edge};

pub(super) struct Partial {
    pub(super) color: HashMap<Edge, usize>,
    /// color -> other endpoint, per vertex
    pub(super) at: Vec<HashMap<usize, usize>>,
}

impl Partial {
    pub(super) fn new(n: usize) -> Self {
        Partial {
            color: HashMap::new(),
            at: vec![HashMap::new(); n],
        }
    }

    pub(super) fn set(&mut self, u: usize, v: usize, c: usize) {
        self.color.insert(edge(u, v), c);
        self.at[u].insert(c, v);
        self.at[v].insert(c, u);
    }

    pub(super) fn unset(&mut self, u: usize, v: usize) {
        if let Some(c) = self.color.remove(&edge(u, v)) {
            self.at[u].remove(&c);
            self.at[v].remove(&c);
        }
    }

    pub(super) fn phi(&self, x: usize) -> BTreeSet<usize> {
        self.at[x].keys().copied().collect()
    }

    /// With `uv` colored `a`, is there an `a/b` cycle through it?
    pub(super) fn closes_cycle(&self, u: usize, v: usize, a: usize) -> bool {
        let limit = self.color.len() + 1;
        self.at[u].keys().filter(|&&b| b != a && self.at[v].contains_key(&b)).any(|&b| {
            let (mut x, mut col) = (u, b);
            for _ in 0..limit {
                let Some(&y) = self.at[x].get(&col) else {
                    return false;
                };
                if y == v {
                    return true;
                }
                x = y;
                col = if col == b { a } else { b };
            }
            false
        })
    }
}
