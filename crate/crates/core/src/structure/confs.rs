use crate::planar::{EdgeId, Embedding, RegionId, VertexId};

use super::{region_label, Structure, StructureError};

pub const CONF_COUNT: usize = 16;

/// A located configuration: the named regions, vertices and edges of one
/// instance, and the quantities its inequalities compare.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConfMatch {
    pub conf: usize,
    pub regions: Vec<RegionId>,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub values: Vec<(&'static str, u32)>,
}

fn vertex_letters(conf: usize) -> &'static [&'static str] {
    match conf {
        1..=5 => &["u", "v", "w", "x"],
        6 | 12 => &["u", "v", "w"],
        13 => &["x", "u", "v", "y", "z"],
        _ => &[],
    }
}

fn edge_letters(conf: usize) -> &'static [&'static str] {
    match conf {
        8 => &["e", "f"],
        14 | 15 => &["f0"],
        7 | 9 | 10 | 11 => &["e"],
        _ => &[],
    }
}

fn region_letters(conf: usize) -> &'static [&'static str] {
    match conf {
        2 | 4 => &["uvw", "uwx"],
        12 => &["r", "uvw"],
        13 => &["xuvy", "uvz"],
        _ => &["r"],
    }
}

impl ConfMatch {
    /// One line: `conf6 u=a v=b w=c r=[a,b,c] m+(uv)+m+(uw)=6`.
    pub fn describe(&self, emb: &Embedding) -> String {
        let g = emb.graph();
        let mut parts = vec![format!("conf{}", self.conf)];
        for (l, v) in vertex_letters(self.conf).iter().zip(&self.vertices) {
            parts.push(format!("{l}={}", g.name(*v)));
        }
        for (l, e) in edge_letters(self.conf).iter().zip(&self.edges) {
            parts.push(format!("{l}={}", g.edge_label(*e)));
        }
        for (l, r) in region_letters(self.conf).iter().zip(&self.regions) {
            parts.push(format!("{l}={}", region_label(emb, *r)));
        }
        for (k, v) in &self.values {
            parts.push(format!("{k}={v}"));
        }
        parts.join(" ")
    }

    /// Re-evaluate the configuration predicate on the named instance.
    pub fn recheck(&self, s: &Structure<'_>) -> bool {
        check(s, self.conf, &self.regions, &self.vertices, &self.edges).as_ref() == Some(&self.values)
    }
}

type Values = Vec<(&'static str, u32)>;

impl Structure<'_> {
    fn e(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.graph().edge_between(a, b)
    }

    fn me(&self, a: VertexId, b: VertexId) -> u32 {
        self.m(self.e(a, b).expect("named edge exists"))
    }

    // whether the boundary of r is the cycle `vs`, in either direction
    fn bounds(&self, r: RegionId, vs: &[VertexId]) -> bool {
        let walk: Vec<VertexId> = self.embedding().region(r).vertices().collect();
        let n = walk.len();
        if n != vs.len() {
            return false;
        }
        let Some(start) = walk.iter().position(|&v| v == vs[0]) else {
            return false;
        };
        let fwd = (0..n).all(|i| walk[(start + i) % n] == vs[i]);
        let back = (0..n).all(|i| walk[(start + n - i) % n] == vs[i]);
        fwd || back
    }

    fn on(&self, e: EdgeId, r: RegionId) -> bool {
        self.embedding().region(r).contains_edge(e)
    }

    fn boundary(&self, r: RegionId) -> Vec<EdgeId> {
        self.embedding().region(r).edges().collect()
    }

    fn disjoint(&self, e: EdgeId, f: EdgeId) -> bool {
        self.graph().edge(e).is_disjoint_from(self.graph().edge(f))
    }

    fn second_small(&self, e: EdgeId, r: RegionId) -> bool {
        self.other(e, r).map(|o| self.is_small(o)).unwrap_or(false)
    }

    fn doors_disjoint_from(&self, r: RegionId, e: EdgeId) -> usize {
        self.doors(r).iter().filter(|&&f| self.disjoint(e, f)).count()
    }

    fn mp(&self, a: VertexId, b: VertexId, disc: &[RegionId]) -> Option<u32> {
        self.m_plus(self.e(a, b)?, disc).ok()
    }
}

fn distinct(vs: &[VertexId]) -> bool {
    (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| vs[i] != vs[j]))
}

fn at_least(ok: bool, values: Values) -> Option<Values> {
    ok.then_some(values)
}

/// Evaluate configuration `conf` on a named instance; `Some(values)` iff it holds.
fn check(s: &Structure<'_>, conf: usize, regions: &[RegionId], vs: &[VertexId], es: &[EdgeId]) -> Option<Values> {
    let g = s.graph();
    if regions.len() != region_letters(conf).len()
        || vs.len() != vertex_letters(conf).len()
        || es.len() != edge_letters(conf).len()
        || !distinct(vs)
    {
        return None;
    }
    match conf {
        1 => {
            let (r, [u, v, w, x]) = (regions[0], [vs[0], vs[1], vs[2], vs[3]]);
            if !s.bounds(r, &[u, v, w]) || g.degree(u) != 3 {
                return None;
            }
            s.e(u, x)?;
            let (ux, rhs) = (s.me(u, x), s.me(u, w) + s.me(v, w));
            at_least(ux < rhs, vec![("m(ux)", ux), ("m(uw)+m(vw)", rhs)])
        }
        2 | 4 => {
            let (t1, t2, [u, v, w, x]) = (regions[0], regions[1], [vs[0], vs[1], vs[2], vs[3]]);
            if t1 == t2 || !s.bounds(t1, &[u, v, w]) || !s.bounds(t2, &[u, w, x]) {
                return None;
            }
            if conf == 2 {
                let sum = s.me(u, v) + s.me(u, w) + s.me(v, w) + s.me(u, x);
                at_least(sum >= 7, vec![("m(uv)+m(uw)+m(vw)+m(ux)", sum)])
            } else {
                let disc = [t1, t2];
                let sum = s.mp(u, v, &disc)? + s.me(u, w) + s.mp(w, x, &disc)?;
                at_least(sum >= 6, vec![("m+(uv)+m(uw)+m+(wx)", sum)])
            }
        }
        3 | 5 => {
            let (r, [u, v, w, x]) = (regions[0], [vs[0], vs[1], vs[2], vs[3]]);
            if !s.bounds(r, &[u, v, w, x]) {
                return None;
            }
            if conf == 3 {
                let sum = s.me(u, v) + s.me(v, w) + s.me(u, x);
                at_least(sum >= 7, vec![("m(uv)+m(vw)+m(ux)", sum)])
            } else {
                let sum = s.mp(u, v, &[r])? + s.mp(w, x, &[r])?;
                at_least(sum >= 6, vec![("m+(uv)+m+(wx)", sum)])
            }
        }
        6 => {
            let (r, [u, v, w]) = (regions[0], [vs[0], vs[1], vs[2]]);
            if !s.bounds(r, &[u, v, w]) {
                return None;
            }
            let sum = s.mp(u, v, &[r])? + s.mp(u, w, &[r])?;
            let (uv, vw, uw) = (s.me(u, v), s.me(v, w), s.me(u, w));
            let side = uv >= 3 || (uv == 2 && vw == 2 && uw == 2) || g.degree(u) >= 4;
            at_least(sum == 6 && side, vec![("m+(uv)+m+(uw)", sum)])
        }
        7 => {
            let (r, e) = (regions[0], es[0]);
            if s.len(r) < 4 || !s.on(e, r) {
                return None;
            }
            let me = s.m_plus(e, &[r]).ok()?;
            let mut not3 = 0;
            for f in s.boundary(r) {
                if !s.disjoint(e, f) {
                    continue;
                }
                let other = s.other(f, r).ok()?;
                let light_triangle = s.is_triangle(other) && s.triangle_multiplicity(other) == 3;
                if !s.is_heavy(f, r, 2) || light_triangle {
                    return None;
                }
                not3 += u32::from(!s.is_heavy(f, r, 3));
            }
            at_least(me == 4 && not3 <= 3, vec![("m+(e)", me), ("not_3_heavy", not3)])
        }
        8 => {
            let (r, e, f) = (regions[0], es[0], es[1]);
            if !s.on(e, r) || !s.on(f, r) || !s.disjoint(e, f) {
                return None;
            }
            let e_ok = s.m(e) == 3 && s.second_small(e, r);
            let f_ok = s.m(f) == 1 && s.second_small(f, r);
            let rest_ok = s
                .boundary(r)
                .into_iter()
                .filter(|&h| h != f && s.disjoint(e, h))
                .all(|h| s.is_heavy(h, r, 3) && s.m(h) >= 2);
            at_least(e_ok && f_ok && rest_ok, vec![("m+(e)", 4), ("m+(f)", 2)])
        }
        9 => {
            let (r, e) = (regions[0], es[0]);
            if s.len(r) < 4 || !s.on(e, r) || s.m(e) != 4 {
                return None;
            }
            if s.doors_disjoint_from(r, e) > 0 {
                return None;
            }
            let neighbours_ok = s
                .boundary(r)
                .into_iter()
                .filter(|&f| f != e && !s.disjoint(e, f) && s.m(f) >= 2)
                .all(|f| s.doors_disjoint_from(r, f) == 0);
            at_least(neighbours_ok, vec![("m(e)", 4)])
        }
        10 => {
            let (r, e) = (regions[0], es[0]);
            if !(4..=6).contains(&s.len(r)) || !s.on(e, r) || s.m(e) != 4 {
                return None;
            }
            let mut least = u32::MAX;
            for f in s.boundary(r) {
                if s.disjoint(e, f) {
                    least = least.min(s.m_plus(f, &[r]).ok()?);
                }
            }
            at_least(least >= 2, vec![("m(e)", 4), ("min_m+(f)", least)])
        }
        11 => {
            let (r, e) = (regions[0], es[0]);
            if !s.on(e, r) {
                return None;
            }
            let doors = s.doors_disjoint_from(r, e) as u32;
            let five = s.m(e) == 5 && doors <= 5;
            let plus = s.m(e) == 4 && s.second_small(e, r) && doors <= 4;
            let mp = s.m_plus(e, &[r]).ok()?;
            at_least(five || plus, vec![("m(e)", s.m(e)), ("m+(e)", mp), ("doors", doors)])
        }
        12 => {
            let (r, t, [u, v, w]) = (regions[0], regions[1], [vs[0], vs[1], vs[2]]);
            let uv = s.e(u, v)?;
            if r == t || !s.on(uv, r) || !s.bounds(t, &[u, v, w]) {
                return None;
            }
            let sum = s.m(uv) + s.me(v, w);
            let doors = s.doors(r).iter().filter(|&&f| !g.edge(f).has_end(v)).count() as u32;
            at_least(sum == 5 && doors <= 5, vec![("m(uv)+m(vw)", sum), ("doors", doors)])
        }
        13 => {
            let (sq, t, [x, u, v, y, z]) = (regions[0], regions[1], [vs[0], vs[1], vs[2], vs[3], vs[4]]);
            if sq == t || !s.bounds(sq, &[x, u, v, y]) || !s.bounds(t, &[u, v, z]) || !s.is_tough(t) {
                return None;
            }
            let xy = s.me(x, y);
            let sum = s.me(u, v) + s.mp(x, y, &[sq, t])?;
            at_least(sum >= 4 && xy >= 2, vec![("m(uv)+m+(xy)", sum), ("m(xy)", xy)])
        }
        14 | 15 => {
            let (r, f0) = (regions[0], es[0]);
            if s.len(r) != 5 || !s.on(f0, r) {
                return None;
            }
            let head = if conf == 14 {
                s.m_plus(f0, &[r]).ok()? >= 2
            } else {
                s.is_heavy(f0, r, 3) && s.m(f0) >= 2
            };
            let bound = if conf == 14 { 4 } else { 3 };
            let mut least = u32::MAX;
            for e in s.boundary(r) {
                if s.disjoint(f0, e) {
                    least = least.min(s.m_plus(e, &[r]).ok()?);
                }
            }
            at_least(head && least >= bound, vec![("min_m+(e)", least)])
        }
        16 => {
            let r = regions[0];
            if s.len(r) != 6 {
                return None;
            }
            let count = s
                .boundary(r)
                .into_iter()
                .filter(|&e| s.is_heavy(e, r, 3) && s.m(e) >= 2)
                .count() as u32;
            at_least(count >= 5, vec![("heavy_edges", count)])
        }
        _ => None,
    }
}

// Vertex relabellings under which a configuration's predicate is invariant,
// as permutations of the vertex tuple positions.
fn symmetries(conf: usize) -> &'static [&'static [usize]] {
    match conf {
        3 => &[&[1, 0, 3, 2]],
        4 => &[&[2, 3, 0, 1]],
        5 => &[&[1, 0, 3, 2], &[2, 3, 0, 1], &[3, 2, 1, 0]],
        13 => &[&[3, 2, 1, 0, 4]],
        _ => &[],
    }
}

fn is_canonical(conf: usize, vs: &[VertexId]) -> bool {
    symmetries(conf).iter().all(|perm| {
        let image: Vec<VertexId> = perm.iter().map(|&i| vs[i]).collect();
        vs <= image.as_slice()
    })
}

// the 2n labellings of a cyclic boundary
fn cyclic_labellings(walk: &[VertexId]) -> Vec<Vec<VertexId>> {
    let n = walk.len();
    let mut out = Vec::with_capacity(2 * n);
    for start in 0..n {
        out.push((0..n).map(|i| walk[(start + i) % n]).collect());
        out.push((0..n).map(|i| walk[(start + n - i) % n]).collect());
    }
    out
}

// (regions, vertices, edges) candidates for a configuration
fn candidates(s: &Structure<'_>, conf: usize) -> Vec<(Vec<RegionId>, Vec<VertexId>, Vec<EdgeId>)> {
    let emb = s.embedding();
    let g = s.graph();
    let mut out = Vec::new();
    let regions_of_len = |len: usize| emb.regions().iter().filter(move |r| r.len() == len);
    match conf {
        1 | 6 => {
            for r in regions_of_len(3) {
                for lab in cyclic_labellings(&r.vertices().collect::<Vec<_>>()) {
                    let (u, v, w) = (lab[0], lab[1], lab[2]);
                    if conf == 6 {
                        out.push((vec![r.id()], vec![u, v, w], vec![]));
                        continue;
                    }
                    for x in g.neighbours(u) {
                        if x != v && x != w {
                            out.push((vec![r.id()], vec![u, v, w, x], vec![]));
                        }
                    }
                }
            }
        }
        2 | 4 => {
            for e in g.edge_ids() {
                let (a, b) = emb.sides(e);
                if a == b || !s.is_triangle(a) || !s.is_triangle(b) {
                    continue;
                }
                let edge = g.edge(e);
                for (t1, t2) in [(a, b), (b, a)] {
                    for (u, w) in [(edge.u, edge.v), (edge.v, edge.u)] {
                        let (v, x) = (s.apex(t1, e).unwrap(), s.apex(t2, e).unwrap());
                        out.push((vec![t1, t2], vec![u, v, w, x], vec![]));
                    }
                }
            }
        }
        3 | 5 => {
            for r in regions_of_len(4) {
                for lab in cyclic_labellings(&r.vertices().collect::<Vec<_>>()) {
                    out.push((vec![r.id()], lab, vec![]));
                }
            }
        }
        7 | 9 | 10 | 11 | 14 | 15 => {
            for r in emb.regions() {
                for e in r.edges() {
                    out.push((vec![r.id()], vec![], vec![e]));
                }
            }
        }
        8 => {
            for r in emb.regions() {
                for e in r.edges() {
                    for f in r.edges() {
                        if s.disjoint(e, f) {
                            out.push((vec![r.id()], vec![], vec![e, f]));
                        }
                    }
                }
            }
        }
        12 => {
            for r in emb.regions() {
                for e in r.edges() {
                    let Some(t) = emb.other_region(e, r.id()) else { continue };
                    let Some(w) = s.apex(t, e) else { continue };
                    let edge = g.edge(e);
                    for (u, v) in [(edge.u, edge.v), (edge.v, edge.u)] {
                        out.push((vec![r.id(), t], vec![u, v, w], vec![]));
                    }
                }
            }
        }
        13 => {
            for sq in regions_of_len(4) {
                for lab in cyclic_labellings(&sq.vertices().collect::<Vec<_>>()) {
                    let (x, u, v, y) = (lab[0], lab[1], lab[2], lab[3]);
                    let uv = g.edge_between(u, v).expect("square edge");
                    let Some(t) = emb.other_region(uv, sq.id()) else {
                        continue;
                    };
                    let Some(z) = s.apex(t, uv) else { continue };
                    out.push((vec![sq.id(), t], vec![x, u, v, y, z], vec![]));
                }
            }
        }
        16 => {
            for r in regions_of_len(6) {
                out.push((vec![r.id()], vec![], vec![]));
            }
        }
        _ => {}
    }
    out
}

/// All instances of configuration `conf`, one per orbit under the
/// configuration's own symmetries, sorted.
pub fn detect_conf(s: &Structure<'_>, conf: usize) -> Result<Vec<ConfMatch>, StructureError> {
    if !(1..=CONF_COUNT).contains(&conf) {
        return Err(StructureError::NoSuchConf(conf));
    }
    if s.target().d() != 7 {
        return Err(StructureError::WrongDegree(s.target().d()));
    }
    let mut out: Vec<ConfMatch> = candidates(s, conf)
        .into_iter()
        .filter(|(_, vs, _)| is_canonical(conf, vs))
        .filter_map(|(regions, vertices, edges)| {
            check(s, conf, &regions, &vertices, &edges).map(|values| ConfMatch {
                conf,
                regions,
                vertices,
                edges,
                values,
            })
        })
        .collect();
    out.sort_by(|a, b| (&a.vertices, &a.edges, &a.regions).cmp(&(&b.vertices, &b.edges, &b.regions)));
    out.dedup();
    Ok(out)
}

/// Matches for every configuration, in configuration order.
pub fn detect_all(s: &Structure<'_>) -> Result<Vec<ConfMatch>, StructureError> {
    let mut out = Vec::new();
    for conf in 1..=CONF_COUNT {
        out.extend(detect_conf(s, conf)?);
    }
    Ok(out)
}
