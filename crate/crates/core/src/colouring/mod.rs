//! d-edge-colourings: lists of d perfect matchings covering each edge e exactly
//! m(e) times.

mod matchings;
mod solver;

use std::fmt;

use thiserror::Error;

use crate::planar::{EdgeId, Graph, VertexId, VertexSet};
use crate::target::Target;

pub use matchings::{enumerate_perfect_matchings, perfect_matching_defect, MatchingList};
pub use solver::{solve, SolveOptions, SolveOutcome, DEFAULT_BUDGET};

/// A list of perfect matchings, each sorted by edge, the list sorted
/// lexicographically. Repeated matchings are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colouring {
    matchings: Vec<Vec<EdgeId>>,
}

impl Colouring {
    pub fn new(mut matchings: Vec<Vec<EdgeId>>) -> Colouring {
        for f in &mut matchings {
            f.sort();
        }
        matchings.sort();
        Colouring { matchings }
    }

    pub fn matchings(&self) -> &[Vec<EdgeId>] {
        &self.matchings
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    /// How many matchings contain each edge.
    pub fn coverage(&self, edge_count: usize) -> Vec<u32> {
        let mut c = vec![0u32; edge_count];
        for f in &self.matchings {
            for e in f {
                c[e.0] += 1;
            }
        }
        c
    }

    /// Classes (0-based) containing `e`.
    pub fn classes_containing(&self, e: EdgeId) -> Vec<usize> {
        (0..self.matchings.len())
            .filter(|&i| self.matchings[i].contains(&e))
            .collect()
    }
}

/// Why a list of matchings is not a d-edge-colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColouringFailure {
    /// The list does not have d entries.
    Count { expected: u32, got: usize },
    /// Matching `index` (0-based) covers `vertex` `covered` times.
    NotPerfect {
        index: usize,
        vertex: VertexId,
        covered: usize,
    },
    /// Edge covered `got` times instead of m(e).
    Coverage { edge: EdgeId, expected: u32, got: u32 },
}

impl ColouringFailure {
    pub fn describe(&self, g: &Graph) -> String {
        match self {
            ColouringFailure::Count { expected, got } => {
                format!("{got} matchings given, expected {expected}")
            }
            ColouringFailure::NotPerfect { index, vertex, covered } => format!(
                "matching {} covers vertex {} {} times",
                index + 1,
                g.name(*vertex),
                covered
            ),
            ColouringFailure::Coverage { edge, expected, got } => {
                format!("edge {} covered {} != {}", g.edge_label(*edge), got, expected)
            }
        }
    }
}

/// Every failed check, in order: count, then per-matching, then per-edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColouringReport {
    pub failures: Vec<ColouringFailure>,
}

impl ColouringReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ColouringReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass")
        } else {
            write!(f, "{} failures", self.failures.len())
        }
    }
}

/// Check `matchings` against `(g, d, m)`.
pub fn verify_matchings(g: &Graph, d: u32, m: &[u32], matchings: &[Vec<EdgeId>]) -> ColouringReport {
    let mut failures = Vec::new();
    if matchings.len() != d as usize {
        failures.push(ColouringFailure::Count {
            expected: d,
            got: matchings.len(),
        });
    }
    for (index, f) in matchings.iter().enumerate() {
        if let Some((vertex, covered)) = perfect_matching_defect(g, f) {
            failures.push(ColouringFailure::NotPerfect { index, vertex, covered });
        }
    }
    let mut cover = vec![0u32; g.edge_count()];
    for f in matchings {
        for e in f {
            cover[e.0] += 1;
        }
    }
    for e in g.edge_ids() {
        if cover[e.0] != m[e.0] {
            failures.push(ColouringFailure::Coverage {
                edge: e,
                expected: m[e.0],
                got: cover[e.0],
            });
        }
    }
    ColouringReport { failures }
}

pub fn verify_colouring(t: &Target, c: &Colouring) -> ColouringReport {
    verify_matchings(t.graph(), t.d(), t.multiplicities(), c.matchings())
}

pub fn solve_colouring(t: &Target, opts: SolveOptions) -> SolveOutcome {
    solve(t.graph(), t.d(), t.multiplicities(), opts)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecombineError {
    #[error("X must have odd size, got {0}")]
    EvenSet(usize),
    #[error("input {0} is not a perfect matching")]
    NotPerfect(usize),
    #[error("cut edges in F1 ∪ F2 must be exactly one edge shared by both, found {0:?}")]
    CutEdges(Vec<EdgeId>),
}

/// `F1' = (F1∩Z) ∪ (F2∖Z)` and `F2' = (F2∩Z) ∪ (F1∖Z)` with `Z` the edges
/// inside `X`.
pub fn recombine_across_cut(
    g: &Graph,
    f1: &[EdgeId],
    f2: &[EdgeId],
    x: VertexSet,
) -> Result<(Vec<EdgeId>, Vec<EdgeId>), RecombineError> {
    if x.len().is_multiple_of(2) {
        return Err(RecombineError::EvenSet(x.len()));
    }
    if perfect_matching_defect(g, f1).is_some() {
        return Err(RecombineError::NotPerfect(1));
    }
    if perfect_matching_defect(g, f2).is_some() {
        return Err(RecombineError::NotPerfect(2));
    }
    let crosses = |e: &EdgeId| {
        let edge = g.edge(*e);
        x.contains(edge.u) != x.contains(edge.v)
    };
    let mut cut: Vec<EdgeId> = f1.iter().chain(f2).copied().filter(crosses).collect();
    cut.sort();
    cut.dedup();
    let shared = cut.len() == 1 && f1.contains(&cut[0]) && f2.contains(&cut[0]);
    if !shared {
        return Err(RecombineError::CutEdges(cut));
    }
    let inside = |e: &EdgeId| {
        let edge = g.edge(*e);
        x.contains(edge.u) && x.contains(edge.v)
    };
    let mix = |a: &[EdgeId], b: &[EdgeId]| {
        let mut out: Vec<EdgeId> = a
            .iter()
            .copied()
            .filter(inside)
            .chain(b.iter().copied().filter(|e| !inside(e)))
            .collect();
        out.sort();
        out
    };
    let g1 = mix(f1, f2);
    let g2 = mix(f2, f1);
    debug_assert!(perfect_matching_defect(g, &g1).is_none());
    debug_assert!(perfect_matching_defect(g, &g2).is_none());
    Ok((g1, g2))
}

#[cfg(test)]
mod tests;
