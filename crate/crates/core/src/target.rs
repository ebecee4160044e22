//! d-targets: plane graphs with edge multiplicities, their axioms, the
//! counterexample preconditions, score sequences and the "smaller" order.

use std::fmt;

use thiserror::Error;

use crate::planar::{EdgeId, Embedding, Graph, VertexId, VertexSet};

/// Default vertex cap for exhaustive odd-set searches.
pub const DEFAULT_ODD_SET_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TargetError {
    #[error("d must be a positive integer")]
    ZeroDegree,
    #[error("{got} multiplicities given for {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid target: {0}")]
    Invalid(String),
    #[error("odd-set search over {vertices} vertices exceeds the cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("targets have different d ({0} and {1})")]
    DegreeMismatch(u32, u32),
}

/// Evidence that a condition fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A vertex with m(δ(v)) ≠ d.
    Degree { vertex: VertexId, value: u64 },
    /// An odd vertex set whose cut value is below the required bound.
    OddSet { set: VertexSet, value: u64 },
    /// An edge whose multiplicity breaks a bound.
    Edge { edge: EdgeId, multiplicity: u32 },
    /// Too few vertices.
    VertexCount(usize),
    /// A vertex set of size at most two whose removal disconnects the graph.
    Separator(Vec<VertexId>),
}

impl Witness {
    pub fn describe(&self, g: &Graph) -> String {
        match self {
            Witness::Degree { vertex, value } => {
                format!("vertex {} has m-degree {}", g.name(*vertex), value)
            }
            Witness::OddSet { set, value } => {
                format!("X = {{{}}} has cut value {}", set_label(g, *set), value)
            }
            Witness::Edge { edge, multiplicity } => {
                format!("edge {} has multiplicity {}", g.edge_label(*edge), multiplicity)
            }
            Witness::VertexCount(n) => format!("{n} vertices"),
            Witness::Separator(vs) => format!(
                "separator {{{}}}",
                vs.iter().map(|v| g.name(*v)).collect::<Vec<_>>().join(",")
            ),
        }
    }
}

/// Comma-separated vertex names of a set, in index order.
pub fn set_label(g: &Graph, set: VertexSet) -> String {
    set.iter().map(|v| g.name(v)).collect::<Vec<_>>().join(",")
}

/// Outcome of checking one condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
    /// The check was not run (for example, a vertex cap was exceeded).
    Unchecked(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fail(w) => Some(w),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail(_) => "fail",
            Verdict::Unchecked(_) => "unchecked",
        }
    }
}

/// Verdicts for the two d-target axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub degree: Verdict,
    pub odd_cuts: Verdict,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.degree.passed() && self.odd_cuts.passed()
    }
}

/// m(δ(X)).
pub fn cut_value(g: &Graph, m: &[u32], set: VertexSet) -> u64 {
    g.edges()
        .iter()
        .zip(m)
        .filter(|(e, _)| set.contains(e.u) != set.contains(e.v))
        .map(|(_, &w)| u64::from(w))
        .sum()
}

/// m(δ(v)).
pub fn vertex_degree(g: &Graph, m: &[u32], v: VertexId) -> u64 {
    g.incident(v).iter().map(|&(_, e)| u64::from(m[e.0])).sum()
}

/// Odd vertex sets up to complementation, in canonical order: the masks
/// containing vertex 0 in increasing numeric order, each mapped to its odd side.
pub fn odd_sets(n: usize) -> impl Iterator<Item = VertexSet> {
    assert!((1..=crate::planar::MAX_VERTICES).contains(&n));
    let half = 1u64 << (n - 1);
    (0..half).filter_map(move |rest| {
        let x = VertexSet::from_bits((rest << 1) | 1);
        if x.len() % 2 == 1 {
            Some(x)
        } else if (n - x.len()) % 2 == 1 {
            Some(x.complement(n))
        } else {
            None
        }
    })
}

fn check_cap(n: usize, cap: usize) -> Result<(), TargetError> {
    if n > cap.min(crate::planar::MAX_VERTICES) {
        Err(TargetError::CapExceeded { vertices: n, cap })
    } else {
        Ok(())
    }
}

/// Check the degree and odd-cut axioms for `(emb, d, m)`.
pub fn validate_target(emb: &Embedding, d: u32, m: &[u32], cap: usize) -> ValidationReport {
    let g = emb.graph();
    let degree = match g
        .vertices()
        .map(|v| (v, vertex_degree(g, m, v)))
        .find(|&(_, value)| value != u64::from(d))
    {
        Some((vertex, value)) => Verdict::Fail(Witness::Degree { vertex, value }),
        None => Verdict::Pass,
    };
    let odd_cuts = match check_cap(g.vertex_count(), cap) {
        Err(e) => Verdict::Unchecked(e.to_string()),
        Ok(()) => match odd_sets(g.vertex_count())
            .map(|x| (x, cut_value(g, m, x)))
            .find(|&(_, value)| value < u64::from(d))
        {
            Some((set, value)) => Verdict::Fail(Witness::OddSet { set, value }),
            None => Verdict::Pass,
        },
    };
    ValidationReport { degree, odd_cuts }
}

/// A d-target: a plane graph with multiplicities where every vertex has
/// m-degree d and every odd vertex set has cut value at least d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    emb: Embedding,
    d: u32,
    m: Vec<u32>,
}

impl Target {
    /// Validate with the default odd-set cap.
    pub fn new(emb: Embedding, d: u32, m: Vec<u32>) -> Result<Target, TargetError> {
        Self::with_cap(emb, d, m, DEFAULT_ODD_SET_CAP)
    }

    pub fn with_cap(emb: Embedding, d: u32, m: Vec<u32>, cap: usize) -> Result<Target, TargetError> {
        if d == 0 {
            return Err(TargetError::ZeroDegree);
        }
        if m.len() != emb.graph().edge_count() {
            return Err(TargetError::LengthMismatch {
                expected: emb.graph().edge_count(),
                got: m.len(),
            });
        }
        let report = validate_target(&emb, d, &m, cap);
        let g = emb.graph();
        match (&report.degree, &report.odd_cuts) {
            (Verdict::Fail(w), _) | (_, Verdict::Fail(w)) => Err(TargetError::Invalid(w.describe(g))),
            (_, Verdict::Unchecked(_)) => Err(TargetError::CapExceeded {
                vertices: g.vertex_count(),
                cap,
            }),
            _ => Ok(Target { emb, d, m }),
        }
    }

    /// For callers that have already established both axioms.
    pub(crate) fn from_valid_parts(emb: Embedding, d: u32, m: Vec<u32>) -> Target {
        debug_assert_eq!(m.len(), emb.graph().edge_count());
        Target { emb, d, m }
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    pub fn graph(&self) -> &Graph {
        self.emb.graph()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.m
    }

    pub fn m(&self, e: EdgeId) -> u32 {
        self.m[e.0]
    }

    pub fn vertex_count(&self) -> usize {
        self.emb.graph().vertex_count()
    }

    /// m(δ(X)).
    pub fn cut_value(&self, set: VertexSet) -> u64 {
        cut_value(self.graph(), &self.m, set)
    }

    /// Edges with multiplicity zero; accepted, but never present in a minimum counterexample.
    pub fn zero_edges(&self) -> Vec<EdgeId> {
        self.graph().edge_ids().filter(|&e| self.m[e.0] == 0).collect()
    }

    /// Total multiplicity m(E).
    pub fn total_multiplicity(&self) -> u64 {
        self.m.iter().map(|&x| u64::from(x)).sum()
    }

    /// Minimum cut value over odd sets (up to complementation), first minimiser in
    /// canonical order. With `exclude_trivial`, only sets with `1 < |X| < |V| - 1`.
    /// `None` when no set qualifies.
    pub fn min_odd_cut(&self, exclude_trivial: bool, cap: usize) -> Result<Option<(VertexSet, u64)>, TargetError> {
        let n = self.vertex_count();
        check_cap(n, cap)?;
        let mut best: Option<(VertexSet, u64)> = None;
        for x in odd_sets(n) {
            if exclude_trivial && (x.len() == 1 || n - x.len() == 1) {
                continue;
            }
            let value = self.cut_value(x);
            if best.is_none_or(|(_, b)| value < b) {
                best = Some((x, value));
            }
        }
        Ok(best)
    }

    pub fn score_sequence(&self) -> ScoreSequence {
        let mut counts = vec![0usize; self.d as usize + 1];
        for &x in &self.m {
            counts[x as usize] += 1;
        }
        ScoreSequence(counts)
    }

    /// Vertex count and score sequence, the data the "smaller" order compares.
    pub fn size_key(&self) -> SizeKey {
        SizeKey {
            vertices: self.vertex_count(),
            score: self.score_sequence(),
        }
    }

    /// Whether `self` is smaller than `other`.
    pub fn is_smaller_than(&self, other: &Target) -> Result<bool, TargetError> {
        if self.d != other.d {
            return Err(TargetError::DegreeMismatch(self.d, other.d));
        }
        Ok(self.size_key().is_smaller_than(&other.size_key()))
    }

    /// Evaluate the conditions every non-colourable target with no smaller
    /// counterexample satisfies.
    pub fn counterexample_conditions(&self, cap: usize) -> CounterexampleReport {
        let g = self.graph();
        let n = self.vertex_count();
        let d = u64::from(self.d);
        let min_vertices = if n >= 6 {
            Verdict::Pass
        } else {
            Verdict::Fail(Witness::VertexCount(n))
        };
        let nontrivial_odd_cuts = match self.min_odd_cut(true, cap) {
            Err(e) => Verdict::Unchecked(e.to_string()),
            Ok(Some((set, value))) if value < d + 2 => Verdict::Fail(Witness::OddSet { set, value }),
            Ok(_) => Verdict::Pass,
        };
        let three_connected = if n < 4 {
            Verdict::Fail(Witness::VertexCount(n))
        } else {
            match g.separator(2) {
                Some(sep) => Verdict::Fail(Witness::Separator(sep)),
                None => Verdict::Pass,
            }
        };
        let bound = self.d.saturating_sub(2);
        let max_multiplicity = match g.edge_ids().find(|&e| self.m[e.0] > bound) {
            Some(edge) => Verdict::Fail(Witness::Edge {
                edge,
                multiplicity: self.m[edge.0],
            }),
            None => Verdict::Pass,
        };
        let positive_multiplicities = match self.zero_edges().first() {
            Some(&edge) => Verdict::Fail(Witness::Edge { edge, multiplicity: 0 }),
            None => Verdict::Pass,
        };
        CounterexampleReport {
            min_vertices,
            nontrivial_odd_cuts,
            three_connected,
            max_multiplicity,
            positive_multiplicities,
        }
    }
}

/// Verdicts for the minimum-counterexample preconditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReport {
    /// |V| ≥ 6.
    pub min_vertices: Verdict,
    /// m(δ(X)) ≥ d + 2 for odd X with |X|, |V∖X| ≠ 1.
    pub nontrivial_odd_cuts: Verdict,
    pub three_connected: Verdict,
    /// m(e) ≤ d − 2.
    pub max_multiplicity: Verdict,
    /// m(e) > 0.
    pub positive_multiplicities: Verdict,
}

impl CounterexampleReport {
    pub fn entries(&self) -> [(&'static str, &Verdict); 5] {
        [
            ("min_vertices", &self.min_vertices),
            ("nontrivial_odd_cuts", &self.nontrivial_odd_cuts),
            ("three_connected", &self.three_connected),
            ("max_multiplicity", &self.max_multiplicity),
            ("positive_multiplicities", &self.positive_multiplicities),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.entries().iter().all(|(_, v)| v.passed())
    }
}

/// `(n_0, …, n_d)` with `n_i` the number of edges of multiplicity `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScoreSequence(pub Vec<usize>);

impl ScoreSequence {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    pub fn edge_total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for ScoreSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Vertex count plus score sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SizeKey {
    pub vertices: usize,
    pub score: ScoreSequence,
}

impl SizeKey {
    /// Fewer vertices; or, at equal vertex count, the highest index `i ≥ 1` where
    /// the counts differ has more edges in `self`; or the counts agree on `1..=d`
    /// and `self` has fewer zero edges.
    pub fn is_smaller_than(&self, other: &SizeKey) -> bool {
        assert_eq!(self.score.d(), other.score.d(), "score sequences of different d");
        if self.vertices != other.vertices {
            return self.vertices < other.vertices;
        }
        let (a, b) = (self.score.counts(), other.score.counts());
        for i in (1..a.len()).rev() {
            if a[i] != b[i] {
                return a[i] > b[i];
            }
        }
        a[0] < b[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn odd_sets_cover_each_odd_cut_once() {
        for n in 1..=7 {
            let sets: Vec<_> = odd_sets(n).collect();
            assert!(sets.iter().all(|x| x.len() % 2 == 1));
            let mut canon: Vec<u64> = sets.iter().map(|x| x.bits().min(x.complement(n).bits())).collect();
            canon.sort();
            let before = canon.len();
            canon.dedup();
            assert_eq!(before, canon.len(), "n = {n}");
            let expected = (0..1u64 << n)
                .filter(|b| b.count_ones() % 2 == 1)
                .map(|b| b.min(!b & ((1 << n) - 1)))
                .collect::<std::collections::BTreeSet<_>>()
                .len();
            assert_eq!(canon.len(), expected, "n = {n}");
        }
    }

    #[test]
    fn prism7_is_valid() {
        let t = fixtures::prism7();
        let report = validate_target(t.embedding(), 7, t.multiplicities(), DEFAULT_ODD_SET_CAP);
        assert!(report.is_valid());
        assert_eq!(2 * t.total_multiplicity(), 7 * t.vertex_count() as u64);
    }

    #[test]
    fn lowered_vertical_fails_degree_axiom() {
        let t = fixtures::prism7();
        let g = t.graph();
        let mut m = t.multiplicities().to_vec();
        let e = g.edge_by_names("a", "a'").unwrap();
        m[e.0] = 2;
        let report = validate_target(t.embedding(), 7, &m, DEFAULT_ODD_SET_CAP);
        match report.degree {
            Verdict::Fail(Witness::Degree { vertex, value }) => {
                assert_eq!(value, 6);
                assert!(g.edge(e).has_end(vertex));
                assert_eq!(vertex_degree(g, &m, vertex), 6);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(Target::new(t.embedding().clone(), 7, m).is_err());
    }

    #[test]
    fn cap_is_reported_not_passed() {
        let t = fixtures::prism7();
        let report = validate_target(t.embedding(), 7, t.multiplicities(), 4);
        assert!(matches!(report.odd_cuts, Verdict::Unchecked(_)));
        assert!(matches!(
            Target::with_cap(t.embedding().clone(), 7, t.multiplicities().to_vec(), 4),
            Err(TargetError::CapExceeded { .. })
        ));
        assert!(t.min_odd_cut(false, 4).is_err());
    }

    #[test]
    fn prism7_min_odd_cuts() {
        let t = fixtures::prism7();
        let g = t.graph();
        let (x, value) = t.min_odd_cut(false, 20).unwrap().unwrap();
        assert_eq!((x.len(), value), (1, 7));
        let (x, value) = t.min_odd_cut(true, 20).unwrap().unwrap();
        assert_eq!(value, 9);
        assert_eq!(set_label(g, x), "a,b,c");
        assert_eq!(t.cut_value(x), 9);
    }

    #[test]
    fn k4_has_no_nontrivial_odd_set() {
        // every odd set of K4 is a singleton or the complement of one
        let t = fixtures::k4_cubic();
        assert_eq!(t.min_odd_cut(true, 20).unwrap(), None);
        let (x, value) = t.min_odd_cut(false, 20).unwrap().unwrap();
        assert_eq!((x.len() % 2, value), (1, 3));
    }

    #[test]
    fn prism7_counterexample_conditions() {
        let report = fixtures::prism7().counterexample_conditions(20);
        assert!(report.all_pass(), "{report:?}");
        let k4 = fixtures::k4_cubic().counterexample_conditions(20);
        assert_eq!(k4.min_vertices, Verdict::Fail(Witness::VertexCount(4)));
    }

    #[test]
    fn score_sequences() {
        assert_eq!(fixtures::prism7().score_sequence().0, vec![0, 0, 6, 3, 0, 0, 0, 0]);
        assert_eq!(fixtures::k4_cubic().score_sequence().0, vec![0, 6, 0, 0]);
        let s = fixtures::prism7().score_sequence();
        assert_eq!(s.edge_total(), 9);
        assert_eq!(s.0[0], 0);
    }

    fn key(v: usize, s: &[usize]) -> SizeKey {
        SizeKey {
            vertices: v,
            score: ScoreSequence(s.to_vec()),
        }
    }

    #[test]
    fn smaller_order_clauses() {
        assert!(key(5, &[0, 0, 1]).is_smaller_than(&key(6, &[0, 0, 1])));
        let a = key(6, &[0, 0, 7, 2, 0, 0, 0, 0]);
        let b = key(6, &[0, 0, 6, 3, 0, 0, 0, 0]);
        assert!(!a.is_smaller_than(&b));
        assert!(b.is_smaller_than(&a));
        assert!(!a.is_smaller_than(&a));
        assert!(key(6, &[1, 2, 3]).is_smaller_than(&key(6, &[2, 2, 3])));
        assert!(!key(6, &[2, 2, 3]).is_smaller_than(&key(6, &[1, 2, 3])));
    }

    #[test]
    fn is_smaller_requires_same_d() {
        let p = fixtures::prism7();
        let k = fixtures::k4_cubic();
        assert_eq!(p.is_smaller_than(&k), Err(TargetError::DegreeMismatch(7, 3)));
        assert_eq!(k.is_smaller_than(&k), Ok(false));
    }
}
