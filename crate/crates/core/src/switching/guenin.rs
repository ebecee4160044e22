use std::fmt;

use crate::colouring::{verify_colouring, Colouring};
use crate::planar::{EdgeId, Graph, VertexSet, MAX_VERTICES};
use crate::target::{set_label, Target, TargetError};

use super::{Chord, ResolvedSwitch, SwitchError};

/// A cocycle `Q = δ(X)` of the switched graph for class `class` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GueninCut {
    pub class: usize,
    pub x: VertexSet,
    pub q: Vec<EdgeId>,
    /// `|F_j ∩ Q|` for every class j.
    pub intersections: Vec<usize>,
}

impl GueninCut {
    pub fn describe(&self, g: &Graph) -> String {
        format!(
            "class={} X={{{}}} Q={{{}}} meets=[{}]",
            self.class + 1,
            set_label(g, self.x),
            self.q.iter().map(|&e| g.edge_label(e)).collect::<Vec<_>>().join(","),
            self.intersections
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A failed condition. Classes are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutCondition {
    /// The colouring is not a d-edge-colouring of the switched target.
    Colouring,
    /// A class contains both `uv` and `xy`.
    SharedClass(usize),
    Cocycle,
    /// `δ(X) ≠ Q`, or `|X|` is even.
    CutOfOddSet,
    SingleMeet {
        class: usize,
        count: usize,
    },
    HeavyMeet {
        count: usize,
    },
    ContainsUvXy(EdgeId),
    AvoidsUxVy(EdgeId),
}

impl CutCondition {
    pub fn name(&self) -> &'static str {
        match self {
            CutCondition::Colouring => "colouring",
            CutCondition::SharedClass(_) => "no-shared-class",
            CutCondition::Cocycle => "cocycle",
            CutCondition::CutOfOddSet => "cut-of-odd-set",
            CutCondition::SingleMeet { .. } => "single-meets",
            CutCondition::HeavyMeet { .. } => "heavy-meet",
            CutCondition::ContainsUvXy(_) => "contains-uv-xy",
            CutCondition::AvoidsUxVy(_) => "avoids-ux-vy",
        }
    }

    pub fn describe(&self, g: &Graph) -> String {
        match self {
            CutCondition::SharedClass(k) => format!("no-shared-class: class {} has uv and xy", k + 1),
            CutCondition::SingleMeet { class, count } => {
                format!("single-meets: class {} meets Q {} times", class + 1, count)
            }
            CutCondition::HeavyMeet { count } => format!("heavy-meet: {count} < 5"),
            CutCondition::ContainsUvXy(e) => format!("contains-uv-xy: {} not in Q", g.edge_label(*e)),
            CutCondition::AvoidsUxVy(e) => format!("avoids-ux-vy: {} in Q", g.edge_label(*e)),
            other => other.name().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    pub failures: Vec<CutCondition>,
    pub intersections: Vec<usize>,
}

impl CutReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CutReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("pass");
        }
        let names: Vec<_> = self.failures.iter().map(|c| c.name()).collect();
        write!(f, "fail: {}", names.join(", "))
    }
}

fn shared_class(c: &Colouring, uv: EdgeId, xy: EdgeId) -> Option<usize> {
    c.matchings().iter().position(|f| f.contains(&uv) && f.contains(&xy))
}

/// Check the cut conditions for class `i` (0-based) on the switched target `t`
/// with colouring `c`. Every failed condition is listed.
pub fn verify_guenin_cut(
    t: &Target,
    c: &Colouring,
    sw: &ResolvedSwitch,
    i: usize,
    q: &[EdgeId],
    x: VertexSet,
) -> CutReport {
    let emb = t.embedding();
    let g = emb.graph();
    let mut failures = Vec::new();
    if !verify_colouring(t, c).passed() {
        failures.push(CutCondition::Colouring);
    }
    let [xu, uv, vy, xy] = sw.edges(g);
    if let Some(k) = shared_class(c, uv, xy) {
        failures.push(CutCondition::SharedClass(k));
    }
    let mut q_sorted = q.to_vec();
    q_sorted.sort();
    q_sorted.dedup();
    if !emb.is_cocycle(q) {
        failures.push(CutCondition::Cocycle);
    }
    if x.len().is_multiple_of(2) || g.cut(x) != q_sorted {
        failures.push(CutCondition::CutOfOddSet);
    }
    let intersections: Vec<usize> = c
        .matchings()
        .iter()
        .map(|f| f.iter().filter(|e| q_sorted.binary_search(e).is_ok()).count())
        .collect();
    for (j, &count) in intersections.iter().enumerate() {
        if j != i && count != 1 {
            failures.push(CutCondition::SingleMeet { class: j, count });
        }
    }
    let heavy = intersections.get(i).copied().unwrap_or(0);
    if heavy < 5 {
        failures.push(CutCondition::HeavyMeet { count: heavy });
    }
    for e in [uv, xy] {
        if q_sorted.binary_search(&e).is_err() {
            failures.push(CutCondition::ContainsUvXy(e));
        }
    }
    for e in [xu, vy] {
        if q_sorted.binary_search(&e).is_ok() {
            failures.push(CutCondition::AvoidsUxVy(e));
        }
    }
    CutReport {
        failures,
        intersections,
    }
}

/// First odd `X` (with `u, x ∈ X` and `v, y ∉ X`, in increasing bitmask order)
/// whose cut passes [`verify_guenin_cut`] for class `i` (0-based). `Ok(None)`
/// means no such cut exists.
pub fn find_guenin_cut(
    t: &Target,
    c: &Colouring,
    sw: &ResolvedSwitch,
    i: usize,
    cap: usize,
) -> Result<Option<GueninCut>, SwitchError> {
    let g = t.graph();
    let n = g.vertex_count();
    if i >= c.len() {
        return Err(SwitchError::NoSuchClass {
            class: i + 1,
            d: c.len(),
        });
    }
    let [_, uv, _, xy] = sw.edges(g);
    if matches!(sw.chord, Chord::New(_)) && c.matchings()[i].contains(&xy) {
        return Err(SwitchError::ExcludedClass(i + 1));
    }
    if n > cap.min(MAX_VERTICES) {
        return Err(TargetError::CapExceeded { vertices: n, cap }.into());
    }
    if !verify_colouring(t, c).passed() || shared_class(c, uv, xy).is_some() {
        return Ok(None);
    }
    let base = VertexSet::singleton(sw.u).bits() | VertexSet::singleton(sw.x).bits();
    let fixed = base | VertexSet::singleton(sw.v).bits() | VertexSet::singleton(sw.y).bits();
    let free: Vec<u64> = (0..n).map(|b| 1u64 << b).filter(|b| fixed & b == 0).collect();
    for counter in 0u64..(1u64 << free.len()) {
        let mut bits = base;
        for (k, b) in free.iter().enumerate() {
            if counter >> k & 1 == 1 {
                bits |= b;
            }
        }
        let x = VertexSet::from_bits(bits);
        if x.len().is_multiple_of(2) {
            continue;
        }
        let q = g.cut(x);
        let meets = |f: &Vec<EdgeId>| f.iter().filter(|e| q.binary_search(e).is_ok()).count();
        let intersections: Vec<usize> = c.matchings().iter().map(meets).collect();
        let counts_ok = intersections
            .iter()
            .enumerate()
            .all(|(j, &k)| if j == i { k >= 5 } else { k == 1 });
        if !counts_ok || !g.is_connected_within(x) || !g.is_connected_within(x.complement(n)) {
            continue;
        }
        if verify_guenin_cut(t, c, sw, i, &q, x).passed() {
            return Ok(Some(GueninCut {
                class: i,
                x,
                q,
                intersections,
            }));
        }
    }
    Ok(None)
}
