use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::ModelError;

/// An undirected edge stored with its smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes a vertex pair so the smaller id comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency is kept in ordered sets so that every iteration order (and
/// therefore every witness reported downstream) is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct AbstractGraph {
    adj: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<GraphRepr> for AbstractGraph {
    type Error = ModelError;

    fn try_from(repr: GraphRepr) -> Result<Self, Self::Error> {
        AbstractGraph::from_edges(repr.n, repr.edges)
    }
}

impl From<AbstractGraph> for GraphRepr {
    fn from(g: AbstractGraph) -> Self {
        GraphRepr {
            n: g.n(),
            edges: g.edges(),
        }
    }
}

impl AbstractGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        AbstractGraph {
            adj: vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a simple graph, rejecting loops, duplicate edges and ids out of range.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, ModelError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = AbstractGraph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(ModelError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(ModelError::Loop(u));
            }
            if !g.insert_edge(u, v) {
                return Err(ModelError::DuplicateEdge(edge(u, v)));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        AbstractGraph::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        AbstractGraph::from_edges(n, (0..n).map(|i| edge(i, (i + 1) % n))).expect("simple cycle")
    }

    pub fn path(n: usize) -> Self {
        AbstractGraph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("simple path")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        AbstractGraph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("simple star")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// All edges, normalized and sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(BTreeSet::len).min()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Number of connected components; isolated vertices count individually.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.adj[u].contains(&v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        true
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.adj[u].remove(&v) {
            return false;
        }
        self.adj[v].remove(&u);
        self.edge_count -= 1;
        true
    }

    /// Deletes every edge at `v`, leaving it isolated.
    pub(crate) fn isolate(&mut self, v: usize) {
        let nbrs: Vec<usize> = self.adj[v].iter().copied().collect();
        for u in nbrs {
            self.remove_edge(u, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            AbstractGraph::from_edges(3, [(1, 1)]),
            Err(ModelError::Loop(1))
        ));
        assert!(matches!(
            AbstractGraph::from_edges(3, [(0, 1), (1, 0)]),
            Err(ModelError::DuplicateEdge((0, 1)))
        ));
        assert!(matches!(
            AbstractGraph::from_edges(3, [(0, 3)]),
            Err(ModelError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = AbstractGraph::complete(5);
        assert_eq!(g.edge_count(), 10);
        for (u, v) in g.edges() {
            assert!(g.has_edge(u, v) && g.has_edge(v, u));
        }
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.min_degree(), Some(4));
    }

    #[test]
    fn components() {
        let g = AbstractGraph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.component_count(), 3);
        assert!(!g.is_connected());
        assert!(AbstractGraph::path(4).is_connected());
    }
}
