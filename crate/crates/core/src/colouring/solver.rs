use std::collections::HashSet;

use super::Colouring;
use crate::planar::{EdgeId, Graph, VertexId, VertexSet};
use crate::target::{cut_value, odd_sets, vertex_degree, DEFAULT_ODD_SET_CAP};

/// Default number of search nodes before giving up.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of search nodes; 0 answers "unknown" immediately.
    pub budget: u64,
    /// Require every residual to stay oddly (d−k)-edge-connected. Costs a pass
    /// over all odd sets per node; skipped above `odd_set_cap` vertices.
    pub odd_cut_pruning: bool,
    pub odd_set_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: DEFAULT_BUDGET,
            odd_cut_pruning: false,
            odd_set_cap: DEFAULT_ODD_SET_CAP,
        }
    }
}

impl SolveOptions {
    pub fn with_budget(budget: u64) -> Self {
        SolveOptions {
            budget,
            ..Self::default()
        }
    }
}

/// Three-valued solver answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Colourable(Colouring),
    /// Exhaustive search (or a necessary condition) rules out a colouring.
    NotColourable(String),
    /// The node budget ran out first.
    Unknown {
        nodes: u64,
    },
}

impl SolveOutcome {
    pub fn colouring(&self) -> Option<&Colouring> {
        match self {
            SolveOutcome::Colourable(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_colourable(&self) -> Option<bool> {
        match self {
            SolveOutcome::Colourable(_) => Some(true),
            SolveOutcome::NotColourable(_) => Some(false),
            SolveOutcome::Unknown { .. } => None,
        }
    }
}

enum Flow {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    opts: SolveOptions,
    nodes: u64,
    failed: HashSet<Vec<u32>>,
    stack: Vec<Vec<EdgeId>>,
}

/// Decide whether `m` on `g` is a sum of `d` perfect matchings. Planarity is not
/// used, so any simple graph is accepted.
pub fn solve(g: &Graph, d: u32, m: &[u32], opts: SolveOptions) -> SolveOutcome {
    assert_eq!(m.len(), g.edge_count(), "one multiplicity per edge");
    if opts.budget == 0 {
        return SolveOutcome::Unknown { nodes: 0 };
    }
    if g.vertex_count() % 2 == 1 {
        return SolveOutcome::NotColourable(format!("{} vertices: no perfect matching exists", g.vertex_count()));
    }
    if let Some(v) = g.vertices().find(|&v| vertex_degree(g, m, v) != u64::from(d)) {
        return SolveOutcome::NotColourable(format!(
            "vertex {} has m-degree {} != {}",
            g.name(v),
            vertex_degree(g, m, v),
            d
        ));
    }
    let mut search = Search {
        g,
        opts,
        nodes: 0,
        failed: HashSet::new(),
        stack: Vec::new(),
    };
    let mut residual = m.to_vec();
    match search.node(&mut residual, d) {
        Flow::Found => SolveOutcome::Colourable(Colouring::new(search.stack)),
        Flow::Exhausted => SolveOutcome::NotColourable(format!(
            "exhaustive search over {} nodes found no colouring",
            search.nodes
        )),
        Flow::OutOfBudget => SolveOutcome::Unknown { nodes: search.nodes },
    }
}

impl Search<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.opts.budget
    }

    // `residual` has m-degree k at every vertex
    fn node(&mut self, residual: &mut Vec<u32>, k: u32) -> Flow {
        if k == 0 {
            return Flow::Found;
        }
        if !self.tick() {
            return Flow::OutOfBudget;
        }
        if self.failed.contains(residual) {
            return Flow::Exhausted;
        }
        if self.opts.odd_cut_pruning && !self.oddly_connected(residual, k) {
            self.failed.insert(residual.clone());
            return Flow::Exhausted;
        }
        // edges with m(e) = k lie in every remaining matching
        let mut forced = vec![None; self.g.vertex_count()];
        for e in self.g.edge_ids() {
            if residual[e.0] == k {
                let edge = self.g.edge(e);
                if forced[edge.u.0].is_some() || forced[edge.v.0].is_some() {
                    self.failed.insert(residual.clone());
                    return Flow::Exhausted;
                }
                forced[edge.u.0] = Some(e);
                forced[edge.v.0] = Some(e);
            }
        }
        let mut chosen = Vec::with_capacity(self.g.vertex_count() / 2);
        let flow = self.extend(residual, k, &forced, 0, &mut chosen);
        if matches!(flow, Flow::Exhausted) {
            self.failed.insert(residual.clone());
        }
        flow
    }

    fn extend(
        &mut self,
        residual: &mut Vec<u32>,
        k: u32,
        forced: &[Option<EdgeId>],
        matched: u64,
        chosen: &mut Vec<EdgeId>,
    ) -> Flow {
        let n = self.g.vertex_count();
        if matched.count_ones() as usize == n {
            for &e in chosen.iter() {
                residual[e.0] -= 1;
            }
            self.stack.push(chosen.clone());
            let flow = self.node(residual, k - 1);
            if matches!(flow, Flow::Found) {
                return flow;
            }
            self.stack.pop();
            for &e in chosen.iter() {
                residual[e.0] += 1;
            }
            return flow;
        }
        if !self.tick() {
            return Flow::OutOfBudget;
        }
        let v = (!matched).trailing_zeros() as usize;
        let g = self.g;
        for &(w, e) in g.incident(VertexId(v)) {
            if residual[e.0] == 0 || matched >> w.0 & 1 == 1 {
                continue;
            }
            if forced[v].is_some_and(|f| f != e) || forced[w.0].is_some_and(|f| f != e) {
                continue;
            }
            let next = matched | 1 << v | 1 << w.0;
            if !self.even_components(residual, next) {
                continue;
            }
            chosen.push(e);
            let flow = self.extend(residual, k, forced, next, chosen);
            chosen.pop();
            if !matches!(flow, Flow::Exhausted) {
                return flow;
            }
        }
        Flow::Exhausted
    }

    // every component of the unmatched support must have an even number of vertices
    fn even_components(&self, residual: &[u32], matched: u64) -> bool {
        let n = self.g.vertex_count();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut left = !matched & full;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(w, e) in self.g.incident(VertexId(v)) {
                    let bit = 1u64 << w.0;
                    if residual[e.0] > 0 && left & bit != 0 && comp & bit == 0 {
                        comp |= bit;
                        stack.push(w.0);
                    }
                }
            }
            if comp.count_ones() % 2 == 1 {
                return false;
            }
            left &= !comp;
        }
        true
    }

    fn oddly_connected(&self, residual: &[u32], k: u32) -> bool {
        let n = self.g.vertex_count();
        if n > self.opts.odd_set_cap {
            return true;
        }
        odd_sets(n).all(|x: VertexSet| cut_value(self.g, residual, x) >= u64::from(k))
    }
}
