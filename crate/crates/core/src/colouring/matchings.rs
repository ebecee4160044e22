use crate::planar::{EdgeId, Graph, VertexId};

/// Perfect matchings of a support graph, possibly cut short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingList {
    pub matchings: Vec<Vec<EdgeId>>,
    pub truncated: bool,
}

/// Perfect matchings of the support `{e : m(e) > 0}` in lexicographic order of
/// their sorted edge lists, at most `limit` of them.
pub fn enumerate_perfect_matchings(g: &Graph, m: &[u32], limit: usize) -> MatchingList {
    assert!(limit >= 1, "limit must be positive");
    let mut out = MatchingList {
        matchings: Vec::new(),
        truncated: false,
    };
    if g.vertex_count() % 2 == 1 {
        return out;
    }
    let mut chosen = Vec::new();
    let mut visit = |f: &[EdgeId]| {
        if out.matchings.len() == limit {
            out.truncated = true;
            return false;
        }
        out.matchings.push(f.to_vec());
        true
    };
    extend(g, m, 0, &mut chosen, &mut visit);
    out
}

/// Depth-first extension from the lowest unmatched vertex; `visit` returns
/// false to stop. Returns false if stopped.
pub(crate) fn extend(
    g: &Graph,
    m: &[u32],
    matched: u64,
    chosen: &mut Vec<EdgeId>,
    visit: &mut dyn FnMut(&[EdgeId]) -> bool,
) -> bool {
    let n = g.vertex_count();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if matched == full {
        return visit(chosen);
    }
    let v = (!matched).trailing_zeros() as usize;
    for &(w, e) in g.incident(VertexId(v)) {
        if m[e.0] == 0 || matched >> w.0 & 1 == 1 {
            continue;
        }
        chosen.push(e);
        let go_on = extend(g, m, matched | 1 << v | 1 << w.0, chosen, visit);
        chosen.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Whether `f` is a perfect matching of `g`; on failure, the first vertex
/// covered a number of times other than one, with that number.
pub fn perfect_matching_defect(g: &Graph, f: &[EdgeId]) -> Option<(VertexId, usize)> {
    let mut cover = vec![0usize; g.vertex_count()];
    for &e in f {
        let edge = g.edge(e);
        cover[edge.u.0] += 1;
        cover[edge.v.0] += 1;
    }
    cover.iter().position(|&c| c != 1).map(|v| (VertexId(v), cover[v]))
}
