use crate::planar::{EdgeId, Embedding, VertexId, VertexSet};
use crate::target::{set_label, Target};

use super::confs::{detect_all, ConfMatch};
use super::{Structure, StructureError};

/// The first reason a 7-target is not prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeFailure {
    ZeroEdge(EdgeId),
    FewVertices(usize),
    /// Odd X with |X|, |V∖X| ≠ 1 and m(δ(X)) < 9.
    OddCut {
        set: VertexSet,
        value: u64,
    },
    NotThreeConnected(Vec<VertexId>),
    HeavyEdge {
        edge: EdgeId,
        multiplicity: u32,
    },
    Conf(ConfMatch),
}

impl PrimeFailure {
    pub fn describe(&self, emb: &Embedding) -> String {
        let g = emb.graph();
        match self {
            PrimeFailure::ZeroEdge(e) => format!("zero-edge {}", g.edge_label(*e)),
            PrimeFailure::FewVertices(n) => format!("few-vertices {n}"),
            PrimeFailure::OddCut { set, value } => {
                format!("odd-cut X={{{}}} value={}", set_label(g, *set), value)
            }
            PrimeFailure::NotThreeConnected(sep) => format!(
                "separator {{{}}}",
                sep.iter().map(|v| g.name(*v)).collect::<Vec<_>>().join(",")
            ),
            PrimeFailure::HeavyEdge { edge, multiplicity } => {
                format!("heavy-edge {} m={}", g.edge_label(*edge), multiplicity)
            }
            PrimeFailure::Conf(c) => c.describe(emb),
        }
    }

    /// Re-check that this failure really holds on `t`.
    pub fn recheck(&self, t: &Target) -> bool {
        let g = t.graph();
        match self {
            PrimeFailure::ZeroEdge(e) => t.m(*e) == 0,
            PrimeFailure::FewVertices(n) => *n == g.vertex_count() && *n < 6,
            PrimeFailure::OddCut { set, value } => {
                let n = g.vertex_count();
                set.len() % 2 == 1 && set.len() != 1 && n - set.len() != 1 && t.cut_value(*set) == *value && *value < 9
            }
            PrimeFailure::NotThreeConnected(sep) => {
                let mut rest = g.all_vertices();
                for &v in sep {
                    rest.remove(v);
                }
                sep.len() <= 2 && !rest.is_empty() && !g.is_connected_within(rest)
            }
            PrimeFailure::HeavyEdge { edge, multiplicity } => t.m(*edge) == *multiplicity && *multiplicity > 6,
            PrimeFailure::Conf(c) => Structure::new(t).is_ok_and(|s| c.recheck(&s)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeVerdict {
    Prime,
    /// `matches` lists every configuration instance when the structural
    /// conditions hold, and is empty otherwise.
    NotPrime {
        first: PrimeFailure,
        matches: Vec<ConfMatch>,
    },
    Unknown(String),
}

impl PrimeVerdict {
    pub fn is_prime(&self) -> Option<bool> {
        match self {
            PrimeVerdict::Prime => Some(true),
            PrimeVerdict::NotPrime { .. } => Some(false),
            PrimeVerdict::Unknown(_) => None,
        }
    }
}

/// Check the structural conditions in order, then scan for all sixteen configurations.
pub fn is_prime(t: &Target, cap: usize) -> Result<PrimeVerdict, StructureError> {
    if t.d() != 7 {
        return Err(StructureError::WrongDegree(t.d()));
    }
    let g = t.graph();
    let not_prime = |first| PrimeVerdict::NotPrime {
        first,
        matches: Vec::new(),
    };
    if let Some(&e) = t.zero_edges().first() {
        return Ok(not_prime(PrimeFailure::ZeroEdge(e)));
    }
    if g.vertex_count() < 6 {
        return Ok(not_prime(PrimeFailure::FewVertices(g.vertex_count())));
    }
    match t.min_odd_cut(true, cap) {
        Err(e) => return Ok(PrimeVerdict::Unknown(e.to_string())),
        Ok(Some((set, value))) if value < 9 => {
            return Ok(not_prime(PrimeFailure::OddCut { set, value }));
        }
        Ok(_) => {}
    }
    if let Some(sep) = g.separator(2) {
        return Ok(not_prime(PrimeFailure::NotThreeConnected(sep)));
    }
    if let Some(edge) = g.edge_ids().find(|&e| t.m(e) > 6) {
        return Ok(not_prime(PrimeFailure::HeavyEdge {
            edge,
            multiplicity: t.m(edge),
        }));
    }
    let s = Structure::new(t)?;
    let matches = detect_all(&s)?;
    Ok(match matches.first() {
        Some(first) => PrimeVerdict::NotPrime {
            first: PrimeFailure::Conf(first.clone()),
            matches,
        },
        None => PrimeVerdict::Prime,
    })
}
