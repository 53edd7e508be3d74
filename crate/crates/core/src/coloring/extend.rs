use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::model::{edge, AbstractGraph, Edge};

use super::partial::Partial;
use super::plan::{build_elimination_plan, EliminationPlan, PlanStep, StepCase};
use super::types::{palette_size, ColorLists, EdgeColoring};
use super::ColoringError;

/// Rejected color choices allowed per step before giving up.
pub const DEFAULT_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepStats {
    /// Index into the plan.
    pub step: usize,
    pub vertex: usize,
    pub case: StepCase,
    /// Admissible-set sizes in coloring order, as first computed.
    pub set_sizes: Vec<usize>,
    /// Whether `vv_1` fell in the branch where `τ(vv_{d-1})` is not at `v_1`.
    pub primed_branch: bool,
    pub backtracks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringRun {
    pub coloring: EdgeColoring,
    pub plan: EliminationPlan,
    pub steps: Vec<StepStats>,
}

impl ColoringRun {
    pub fn total_backtracks(&self) -> usize {
        self.steps.iter().map(|s| s.backtracks).sum()
    }
}

/// Colors `g` from the full palette `0..palette_size(Δ)`.
pub fn acyclic_edge_color(g: &AbstractGraph) -> Result<EdgeColoring, ColoringError> {
    Ok(color_with_stats(g, None, DEFAULT_BUDGET)?.coloring)
}

/// Colors `g` choosing each edge's color from its own list.
pub fn acyclic_edge_color_lists(g: &AbstractGraph, lists: &ColorLists) -> Result<EdgeColoring, ColoringError> {
    Ok(color_with_stats(g, Some(lists), DEFAULT_BUDGET)?.coloring)
}

/// The full run: plan, coloring and per-step statistics.
pub fn color_with_stats(
    g: &AbstractGraph,
    lists: Option<&ColorLists>,
    budget: usize,
) -> Result<ColoringRun, ColoringError> {
    let palette = palette_size(g.max_degree());
    let full;
    let lists = match lists {
        Some(l) => {
            for e in g.edges() {
                let size = l.get(e).ok_or(ColoringError::MissingList(e))?.len();
                if size < palette {
                    return Err(ColoringError::ListTooSmall {
                        edge: e,
                        size,
                        required: palette,
                    });
                }
            }
            l
        }
        None => {
            full = ColorLists::full(g.edges(), palette);
            &full
        }
    };
    let plan = build_elimination_plan(g)?;

    // Aux edges inherit the list of v v_{d-1}.
    let mut working: HashMap<Edge, &BTreeSet<usize>> = g.edges().into_iter().map(|e| (e, &lists.lists[&e])).collect();
    for s in &plan.steps {
        if let Some(aux) = s.aux_edge.filter(|a| a.added) {
            let from = edge(s.vertex, s.neighbors[s.neighbors.len() - 2]);
            let l = working[&from];
            working.insert(aux.edge, l);
        }
    }

    let mut partial = Partial::new(g.n());
    let mut stats = Vec::with_capacity(plan.steps.len());
    for (idx, s) in plan.steps.iter().enumerate().rev() {
        let mut ext = Extension::new(idx, s, &partial, palette, plan.max_degree, &working, budget);
        if let Some(aux) = s.aux_edge.filter(|a| a.added) {
            partial.unset(aux.edge.0, aux.edge.1);
        }
        ext.run(&mut partial)?;
        stats.push(ext.stats);
    }
    stats.reverse();

    let assignment = partial.color.into_iter().collect();
    Ok(ColoringRun {
        coloring: EdgeColoring { palette, assignment },
        plan,
        steps: stats,
    })
}

/// How the admissible set of one edge at `v` is formed.
#[derive(Clone, Copy)]
enum Slot {
    /// Reuse the color the aux edge had.
    Reuse(usize),
    /// Avoid `φ` at the listed neighbour indices plus every color already
    /// chosen at `v`.
    Avoid { from: usize, to: usize, extra: Option<usize> },
}

struct Extension<'a> {
    step: usize,
    vertex: usize,
    neighbors: &'a [usize],
    order: Vec<(usize, Slot)>,
    phi: Vec<BTreeSet<usize>>,
    lists: Vec<&'a BTreeSet<usize>>,
    bound: Option<i64>,
    budget: usize,
    failures: usize,
    visited: Vec<bool>,
    stats: StepStats,
}

impl<'a> Extension<'a> {
    fn new(
        step: usize,
        s: &'a PlanStep,
        partial: &Partial,
        palette: usize,
        max_degree: usize,
        working: &HashMap<Edge, &'a BTreeSet<usize>>,
        budget: usize,
    ) -> Self {
        let nb = &s.neighbors;
        let d = nb.len();
        let phi: Vec<BTreeSet<usize>> = nb.iter().map(|&x| partial.phi(x)).collect();
        let reuse = s
            .aux_edge
            .filter(|a| a.added)
            .map(|a| partial.color[&a.edge]);
        let avoid = |from, to, extra| Slot::Avoid { from, to, extra };
        let mut order = Vec::with_capacity(d);
        let mut bound = None;
        match (s.case, d) {
            (_, 1) => order.push((0, avoid(0, 0, None))),
            (StepCase::Deg2, _) => {
                order.push((0, reuse.map_or(avoid(0, 1, None), Slot::Reuse)));
                order.push((1, avoid(1, 1, None)));
            }
            (StepCase::Config(kind), _) => {
                order.push((d - 2, reuse.map_or(avoid(d - 2, d - 1, None), Slot::Reuse)));
                // S_d skips v_{d-1}: φ(v_1..v_{d-2}) then φ(v_d).
                order.push((d - 1, avoid(0, d - 3, Some(d - 1))));
                for i in 0..d - 2 {
                    order.push((i, avoid(i, d - 2, None)));
                }
                let sum: usize = kind.thresholds().iter().map(|c| c - 1).sum();
                bound = Some(palette as i64 - (sum + max_degree) as i64);
            }
        }
        let lists = nb.iter().map(|&x| working[&edge(s.vertex, x)]).collect();
        Extension {
            step,
            vertex: s.vertex,
            neighbors: nb,
            visited: vec![false; order.len()],
            order,
            phi,
            lists,
            bound,
            budget,
            failures: 0,
            stats: StepStats {
                step,
                vertex: s.vertex,
                case: s.case,
                set_sizes: Vec::new(),
                primed_branch: false,
                backtracks: 0,
            },
        }
    }

    fn admissible(&self, pos: usize, chosen: &[usize]) -> Vec<usize> {
        let (k, slot) = self.order[pos];
        match slot {
            Slot::Reuse(c) => vec![c],
            Slot::Avoid { from, to, extra } => {
                let mut forbidden: BTreeSet<usize> = chosen.iter().copied().collect();
                for set in self.phi[from..=to].iter().chain(extra.map(|e| &self.phi[e])) {
                    forbidden.extend(set);
                }
                self.lists[k].difference(&forbidden).copied().collect()
            }
        }
    }

    fn check_first_visit(&mut self, pos: usize, set: &[usize], chosen: &[usize]) -> Result<(), ColoringError> {
        self.visited[pos] = true;
        self.stats.set_sizes.push(set.len());
        let is_config = matches!(self.stats.case, StepCase::Config(_));
        let d = self.neighbors.len();
        if is_config && self.order[pos].0 == 0 && d >= 3 {
            self.stats.primed_branch = !self.phi[0].contains(&chosen[0]);
        }
        let label = match (pos, is_config) {
            (0, true) if matches!(self.order[0].1, Slot::Avoid { .. }) => "C \\ S_{d-1}",
            (1, true) => "T_d",
            (2, true) => "T_1",
            _ => return Ok(()),
        };
        let bound = if pos == 0 { 1 } else { self.bound.unwrap_or(1) };
        if (set.len() as i64) < bound {
            return Err(ColoringError::BoundViolated {
                step: self.step,
                vertex: self.vertex,
                set: label.to_string(),
                size: set.len(),
                bound,
            });
        }
        Ok(())
    }

    fn run(&mut self, partial: &mut Partial) -> Result<(), ColoringError> {
        let mut chosen = Vec::with_capacity(self.order.len());
        let ok = self.search(partial, &mut chosen)?;
        self.stats.backtracks = self.failures;
        if ok {
            Ok(())
        } else {
            Err(ColoringError::ExtensionFailed {
                step: self.step,
                vertex: self.vertex,
                set_sizes: self.stats.set_sizes.clone(),
            })
        }
    }

    fn search(&mut self, partial: &mut Partial, chosen: &mut Vec<usize>) -> Result<bool, ColoringError> {
        let pos = chosen.len();
        if pos == self.order.len() {
            return Ok(true);
        }
        let set = self.admissible(pos, chosen);
        if !self.visited[pos] {
            self.check_first_visit(pos, &set, chosen)?;
        }
        let (v, u) = (self.vertex, self.neighbors[self.order[pos].0]);
        for c in set {
            if self.failures > self.budget {
                return Ok(false);
            }
            if partial.at[v].contains_key(&c) || partial.at[u].contains_key(&c) {
                self.failures += 1;
                continue;
            }
            partial.set(v, u, c);
            if !partial.closes_cycle(v, u, c) {
                chosen.push(c);
                if self.search(partial, chosen)? {
                    return Ok(true);
                }
                chosen.pop();
            }
            partial.unset(v, u);
            self.failures += 1;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_acyclic;
    use crate::corpus::named_instance;

    fn check(g: &AbstractGraph) -> EdgeColoring {
        let c = acyclic_edge_color(g).unwrap();
        let rep = verify_acyclic(g, &c);
        assert!(rep.is_ok(), "{:?}", rep.violations);
        assert!(c.assignment.values().all(|&x| x < c.palette));
        c
    }

    #[test]
    fn star_gets_distinct_colors() {
        let c = check(&AbstractGraph::star(3));
        assert_eq!(c.colors_used(), 3);
    }

    #[test]
    fn c4_needs_three() {
        let c = check(&AbstractGraph::cycle(4));
        assert!(c.colors_used() >= 3);
        assert_eq!(c.palette, 85);
    }

    #[test]
    fn named_instances() {
        for name in ["k6_1planar", "octahedron", "icosahedron"] {
            let g = named_instance(name).unwrap().base().clone();
            let c = check(&g);
            assert!(c.palette <= 88);
        }
    }

    #[test]
    fn full_lists_match_plain() {
        let g = named_instance("icosahedron").unwrap().base().clone();
        let lists = ColorLists::full(g.edges(), palette_size(g.max_degree()));
        assert_eq!(acyclic_edge_color_lists(&g, &lists).unwrap(), acyclic_edge_color(&g).unwrap());
    }

    #[test]
    fn disjoint_lists_on_a_star() {
        let g = AbstractGraph::star(3);
        let l = palette_size(3);
        let mut lists = ColorLists::default();
        for (i, e) in g.edges().into_iter().enumerate() {
            lists.lists.insert(e, (i * l..(i + 1) * l).collect());
        }
        let c = acyclic_edge_color_lists(&g, &lists).unwrap();
        for (e, col) in &c.assignment {
            assert!(lists.lists[e].contains(col));
        }
        assert!(verify_acyclic(&g, &c).is_ok());
    }

    #[test]
    fn equal_lists_on_c4() {
        let g = AbstractGraph::cycle(4);
        let l = palette_size(2);
        let lists = ColorLists {
            lists: g.edges().into_iter().map(|e| (e, (100..100 + l).collect())).collect(),
        };
        let c = acyclic_edge_color_lists(&g, &lists).unwrap();
        assert!(c.assignment.values().all(|&x| (100..100 + l).contains(&x)));
        assert!(verify_acyclic(&g, &c).is_ok());
    }

    #[test]
    fn short_list_is_rejected() {
        let g = AbstractGraph::path(3);
        let mut lists = ColorLists::full(g.edges(), 85);
        lists.lists.get_mut(&(0, 1)).unwrap().pop_last();
        assert!(matches!(
            acyclic_edge_color_lists(&g, &lists),
            Err(ColoringError::ListTooSmall { edge: (0, 1), size: 84, required: 85 })
        ));
    }

    #[test]
    fn k9_has_no_plan() {
        assert!(matches!(
            acyclic_edge_color(&AbstractGraph::complete(9)),
            Err(ColoringError::Plan(_))
        ));
    }
}
