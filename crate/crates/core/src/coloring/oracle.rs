use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::model::{edge, AbstractGraph, Edge};

use super::partial::Partial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleResult {
    Exact(usize),
    Exceeded,
}

/// Edges in breadth-first order so each new edge touches an earlier one.
fn edge_order(g: &AbstractGraph) -> Vec<Edge> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::with_capacity(g.edge_count());
    let mut seen_edges = HashSet::new();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
                if seen_edges.insert(edge(x, y)) {
                    out.push(edge(x, y));
                }
            }
        }
    }
    out
}

fn search(order: &[Edge], pos: usize, k: usize, used: usize, partial: &mut Partial) -> bool {
    let Some(&(u, v)) = order.get(pos) else {
        return true;
    };
    // A fresh color is interchangeable with any other fresh one.
    for c in 0..k.min(used + 1) {
        if partial.at[u].contains_key(&c) || partial.at[v].contains_key(&c) {
            continue;
        }
        partial.set(u, v, c);
        if !partial.closes_cycle(u, v, c) && search(order, pos + 1, k, used.max(c + 1), partial) {
            return true;
        }
        partial.unset(u, v);
    }
    false
}

/// The least `k <= limit` admitting an acyclic edge coloring, by exhaustive
/// search. Meant for graphs with about ten vertices.
pub fn oracle_chi_a(g: &AbstractGraph, limit: usize) -> OracleResult {
    if g.edge_count() == 0 {
        return OracleResult::Exact(0);
    }
    let order = edge_order(g);
    for k in g.max_degree()..=limit {
        let mut partial = Partial::new(g.n());
        if search(&order, 0, k, 0, &mut partial) {
            return OracleResult::Exact(k);
        }
    }
    OracleResult::Exceeded
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named_instance;

    #[test]
    fn small_values() {
        assert_eq!(oracle_chi_a(&AbstractGraph::complete(3), 10), OracleResult::Exact(3));
        assert_eq!(oracle_chi_a(&AbstractGraph::path(3), 10), OracleResult::Exact(2));
        assert_eq!(oracle_chi_a(&AbstractGraph::cycle(4), 10), OracleResult::Exact(3));
        assert_eq!(oracle_chi_a(&AbstractGraph::cycle(4), 2), OracleResult::Exceeded);
        assert_eq!(oracle_chi_a(&AbstractGraph::empty(3), 0), OracleResult::Exact(0));
        // Four colors on K4 force two perfect matchings, which form a 4-cycle.
        assert_eq!(oracle_chi_a(&AbstractGraph::complete(4), 10), OracleResult::Exact(5));
        let oct = named_instance("octahedron").unwrap().base().clone();
        assert!(matches!(oracle_chi_a(&oct, 10), OracleResult::Exact(k) if k >= 4));
    }

    #[test]
    fn edge_order_covers_everything() {
        let g = AbstractGraph::complete(5);
        let mut o = edge_order(&g);
        assert_eq!(o.len(), 10);
        o.sort();
        assert_eq!(o, g.edges());
    }
}
