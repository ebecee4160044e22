//! A reference scanner that transcribes each configuration's quantifiers
//! literally: every region, every labelling, every edge, with its own door,
//! m⁺, toughness and heaviness helpers. No symmetry pruning and no shared code
//! with the library's detector beyond face tracing.

use ptg_core::planar::{EdgeId, RegionId, VertexId};
use ptg_core::Target;

pub type Instance = (Vec<RegionId>, Vec<VertexId>, Vec<EdgeId>);

struct Naive<'a> {
    t: &'a Target,
}

impl Naive<'_> {
    fn edge(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.t.graph().edge_between(a, b)
    }

    fn m(&self, a: VertexId, b: VertexId) -> u32 {
        self.edge(a, b).map_or(0, |e| self.t.m(e))
    }

    fn ends(&self, e: EdgeId) -> [VertexId; 2] {
        let ed = self.t.graph().edge(e);
        [ed.u, ed.v]
    }

    fn disjoint(&self, e: EdgeId, f: EdgeId) -> bool {
        let [a, b] = self.ends(e);
        let [c, d] = self.ends(f);
        e != f && a != c && a != d && b != c && b != d
    }

    fn region_edges(&self, r: RegionId) -> Vec<EdgeId> {
        self.t.embedding().region(r).edges().collect()
    }

    fn on(&self, e: EdgeId, r: RegionId) -> bool {
        self.region_edges(r).contains(&e)
    }

    fn regions_of(&self, e: EdgeId) -> Vec<RegionId> {
        let emb = self.t.embedding();
        emb.regions()
            .iter()
            .map(|r| r.id())
            .filter(|&r| self.on(e, r))
            .collect()
    }

    fn other(&self, e: EdgeId, r: RegionId) -> RegionId {
        let rs = self.regions_of(e);
        assert_eq!(rs.len(), 2, "two-sided edge");
        if rs[0] == r {
            rs[1]
        } else {
            rs[0]
        }
    }

    fn is_triangle(&self, r: RegionId) -> bool {
        self.region_edges(r).len() == 3
    }

    fn vertex_set(&self, r: RegionId) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.region_edges(r).iter().flat_map(|&e| self.ends(e)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    fn is_door(&self, e: EdgeId, r: RegionId) -> bool {
        if self.t.m(e) != 1 {
            return false;
        }
        let r2 = self.other(e, r);
        self.region_edges(r2)
            .into_iter()
            .any(|f| self.disjoint(e, f) && self.t.m(f) == 1)
    }

    fn doors(&self, r: RegionId) -> Vec<EdgeId> {
        self.region_edges(r)
            .into_iter()
            .filter(|&e| self.is_door(e, r))
            .collect()
    }

    fn is_big(&self, r: RegionId) -> bool {
        self.doors(r).len() >= 4
    }

    /// m⁺(e) for the disc formed by `disc`; `e` must be on the disc boundary.
    fn m_plus(&self, e: EdgeId, disc: &[RegionId]) -> u32 {
        let outside: Vec<RegionId> = self.regions_of(e).into_iter().filter(|r| !disc.contains(r)).collect();
        assert_eq!(outside.len(), 1, "edge on the disc boundary");
        self.t.m(e) + u32::from(!self.is_big(outside[0]))
    }

    fn triangle_m(&self, r: RegionId) -> u32 {
        self.region_edges(r).iter().map(|&e| self.t.m(e)).sum()
    }

    fn is_tough(&self, r: RegionId) -> bool {
        self.is_triangle(r) && self.region_edges(r).iter().map(|&e| self.m_plus(e, &[r])).sum::<u32>() >= 7
    }

    fn heavy(&self, e: EdgeId, r: RegionId, i: u32) -> bool {
        assert!(i >= 2);
        if self.t.m(e) >= i {
            return true;
        }
        let r2 = self.other(e, r);
        if !self.is_triangle(r2) {
            return false;
        }
        let [u, v] = self.ends(e);
        let w = self.vertex_set(r2).into_iter().find(|&z| z != u && z != v).unwrap();
        self.t.m(e) + self.m(u, w).min(self.m(v, w)) >= i
    }

    // region r has boundary cycle a0 a1 ... a(k-1) a0, in this order or reversed
    fn is_cycle_of(&self, r: RegionId, walk: &[VertexId]) -> bool {
        let k = walk.len();
        if self.region_edges(r).len() != k {
            return false;
        }
        (0..k).all(|i| match self.edge(walk[i], walk[(i + 1) % k]) {
            Some(e) => self.on(e, r),
            None => false,
        })
    }

    fn degree(&self, v: VertexId) -> usize {
        self.t.graph().edge_ids().filter(|&e| self.ends(e).contains(&v)).count()
    }
}

// every ordering of the boundary vertices of r
fn labellings(s: &Naive<'_>, r: RegionId) -> Vec<Vec<VertexId>> {
    let mut out = vec![vec![]];
    let vs = s.vertex_set(r);
    for _ in 0..vs.len() {
        let mut next = Vec::new();
        for t in &out {
            for &v in &vs {
                if !t.contains(&v) {
                    let mut t2 = t.clone();
                    t2.push(v);
                    next.push(t2);
                }
            }
        }
        out = next;
    }
    out
}

/// Every labelled instance of configuration `conf` in `t`, in the layout of
/// `ConfMatch`: `(regions, vertices, edges)`.
pub fn naive_matches(t: &Target, conf: usize) -> Vec<Instance> {
    let s = Naive { t };
    let emb = t.embedding();
    let n = t.vertex_count();
    let regions: Vec<RegionId> = emb.regions().iter().map(|r| r.id()).collect();
    let mut out = Vec::new();
    match conf {
        // a triangle uvw, u of degree three, third neighbour x, m(ux) < m(uw) + m(vw)
        1 => {
            for &r in regions.iter().filter(|&&r| s.is_triangle(r)) {
                for l in labellings(&s, r) {
                    let [u, v, w] = [l[0], l[1], l[2]];
                    for x in (0..n).map(VertexId) {
                        if l.contains(&x) {
                            continue;
                        }
                        let vs = vec![u, v, w, x];
                        if s.degree(u) == 3 && s.edge(u, x).is_some() && s.m(u, x) < s.m(u, w) + s.m(v, w) {
                            out.push((vec![r], vs, vec![]));
                        }
                    }
                }
            }
        }
        // two triangles uvw, uwx
        2 | 4 => {
            for &t1 in &regions {
                for &t2 in &regions {
                    if t1 == t2 || !s.is_triangle(t1) || !s.is_triangle(t2) {
                        continue;
                    }
                    for l in labellings(&s, t1) {
                        let [u, v, w] = [l[0], l[1], l[2]];
                        let Some(x) = s.vertex_set(t2).into_iter().find(|z| !l.contains(z)) else {
                            continue;
                        };
                        let vs = vec![u, v, w, x];
                        if !s.is_cycle_of(t2, &[u, w, x]) {
                            continue;
                        }
                        let holds = if conf == 2 {
                            s.m(u, v) + s.m(u, w) + s.m(v, w) + s.m(u, x) >= 7
                        } else {
                            let disc = [t1, t2];
                            let uv = s.edge(u, v).unwrap();
                            let wx = s.edge(w, x).unwrap();
                            s.m_plus(uv, &disc) + s.m(u, w) + s.m_plus(wx, &disc) >= 6
                        };
                        if holds {
                            out.push((vec![t1, t2], vs.clone(), vec![]));
                        }
                    }
                }
            }
        }
        // a square uvwx
        3 | 5 => {
            for &r in &regions {
                for vs in labellings(&s, r) {
                    if vs.len() != 4 {
                        continue;
                    }
                    let [u, v, w, x] = [vs[0], vs[1], vs[2], vs[3]];
                    if !s.is_cycle_of(r, &[u, v, w, x]) {
                        continue;
                    }
                    let holds = if conf == 3 {
                        s.m(u, v) + s.m(v, w) + s.m(u, x) >= 7
                    } else {
                        s.m_plus(s.edge(u, v).unwrap(), &[r]) + s.m_plus(s.edge(w, x).unwrap(), &[r]) >= 6
                    };
                    if holds {
                        out.push((vec![r], vs.clone(), vec![]));
                    }
                }
            }
        }
        // a triangle uvw with m⁺(uv) + m⁺(uw) = 6 and a side condition
        6 => {
            for &r in &regions {
                if !s.is_triangle(r) {
                    continue;
                }
                for vs in labellings(&s, r) {
                    let [u, v, w] = [vs[0], vs[1], vs[2]];
                    if !s.is_cycle_of(r, &[u, v, w]) {
                        continue;
                    }
                    let sum = s.m_plus(s.edge(u, v).unwrap(), &[r]) + s.m_plus(s.edge(u, w).unwrap(), &[r]);
                    let side =
                        s.m(u, v) >= 3 || (s.m(u, v) == 2 && s.m(v, w) == 2 && s.m(u, w) == 2) || s.degree(u) >= 4;
                    if sum == 6 && side {
                        out.push((vec![r], vs.clone(), vec![]));
                    }
                }
            }
        }
        7 => {
            for &r in &regions {
                let boundary = s.region_edges(r);
                if boundary.len() < 4 {
                    continue;
                }
                for &e in &boundary {
                    if s.m_plus(e, &[r]) != 4 {
                        continue;
                    }
                    let disjoint: Vec<EdgeId> = boundary.iter().copied().filter(|&f| s.disjoint(e, f)).collect();
                    let all_ok = disjoint.iter().all(|&f| {
                        let r2 = s.other(f, r);
                        s.heavy(f, r, 2) && !(s.is_triangle(r2) && s.triangle_m(r2) == 3)
                    });
                    let not3 = disjoint.iter().filter(|&&f| !s.heavy(f, r, 3)).count();
                    if all_ok && not3 <= 3 {
                        out.push((vec![r], vec![], vec![e]));
                    }
                }
            }
        }
        8 => {
            for &r in &regions {
                let boundary = s.region_edges(r);
                for &e in &boundary {
                    for &f in &boundary {
                        if !s.disjoint(e, f) {
                            continue;
                        }
                        let e_ok = s.m_plus(e, &[r]) == 4 && t.m(e) + 1 == 4;
                        let f_ok = s.m_plus(f, &[r]) == 2 && t.m(f) + 1 == 2;
                        let rest_ok = boundary
                            .iter()
                            .filter(|&&h| h != f && s.disjoint(e, h))
                            .all(|&h| s.heavy(h, r, 3) && t.m(h) >= 2);
                        if e_ok && f_ok && rest_ok {
                            out.push((vec![r], vec![], vec![e, f]));
                        }
                    }
                }
            }
        }
        9 => {
            for &r in &regions {
                let boundary = s.region_edges(r);
                if boundary.len() < 4 {
                    continue;
                }
                let doors = s.doors(r);
                let no_door_disjoint = |e: EdgeId| !doors.iter().any(|&d| s.disjoint(e, d));
                for &e in &boundary {
                    if t.m(e) != 4 || !no_door_disjoint(e) {
                        continue;
                    }
                    let consecutive_ok = boundary
                        .iter()
                        .filter(|&&f| f != e && !s.disjoint(e, f) && t.m(f) >= 2)
                        .all(|&f| no_door_disjoint(f));
                    if consecutive_ok {
                        out.push((vec![r], vec![], vec![e]));
                    }
                }
            }
        }
        10 => {
            for &r in &regions {
                let boundary = s.region_edges(r);
                if !(4..=6).contains(&boundary.len()) {
                    continue;
                }
                for &e in &boundary {
                    if t.m(e) == 4
                        && boundary
                            .iter()
                            .filter(|&&f| s.disjoint(e, f))
                            .all(|&f| s.m_plus(f, &[r]) >= 2)
                    {
                        out.push((vec![r], vec![], vec![e]));
                    }
                }
            }
        }
        11 => {
            for &r in &regions {
                let boundary = s.region_edges(r);
                let doors = s.doors(r);
                for &e in &boundary {
                    let k = doors.iter().filter(|&&d| s.disjoint(e, d)).count();
                    let first = t.m(e) == 5 && k <= 5;
                    let second = s.m_plus(e, &[r]) == 5 && t.m(e) + 1 == 5 && k <= 4;
                    if first || second {
                        out.push((vec![r], vec![], vec![e]));
                    }
                }
            }
        }
        // a region r, an edge uv of C_r and a triangle uvw other than r
        12 => {
            for &r in &regions {
                for &tr in &regions {
                    if tr == r || !s.is_triangle(tr) {
                        continue;
                    }
                    for vs in labellings(&s, tr) {
                        let [u, v, w] = [vs[0], vs[1], vs[2]];
                        let Some(uv) = s.edge(u, v) else { continue };
                        if !s.on(uv, r) || !s.is_cycle_of(tr, &[u, v, w]) {
                            continue;
                        }
                        let away_from_v = s.doors(r).into_iter().filter(|&d| !s.ends(d).contains(&v)).count();
                        if t.m(uv) + s.m(v, w) == 5 && away_from_v <= 5 {
                            out.push((vec![r, tr], vs.clone(), vec![]));
                        }
                    }
                }
            }
        }
        // a square xuvy and a tough triangle uvz
        13 => {
            for &sq in &regions {
                for &tr in &regions {
                    if sq == tr || !s.is_tough(tr) {
                        continue;
                    }
                    if s.region_edges(sq).len() != 4 {
                        continue;
                    }
                    for l in labellings(&s, sq) {
                        let [x, u, v, y] = [l[0], l[1], l[2], l[3]];
                        let Some(z) = s.vertex_set(tr).into_iter().find(|z| *z != u && *z != v) else {
                            continue;
                        };
                        let vs = vec![x, u, v, y, z];
                        if vs[..4].contains(&z) || !s.is_cycle_of(sq, &[x, u, v, y]) || !s.is_cycle_of(tr, &[u, v, z]) {
                            continue;
                        }
                        let xy = s.edge(x, y).unwrap();
                        if t.m(s.edge(u, v).unwrap()) + s.m_plus(xy, &[sq, tr]) >= 4 && t.m(xy) >= 2 {
                            out.push((vec![sq, tr], vs.clone(), vec![]));
                        }
                    }
                }
            }
        }
        14 | 15 => {
            for &r in &regions {
                let boundary = s.region_edges(r);
                if boundary.len() != 5 {
                    continue;
                }
                for &f0 in &boundary {
                    let head = if conf == 14 {
                        s.m_plus(f0, &[r]) >= 2
                    } else {
                        s.heavy(f0, r, 3) && t.m(f0) >= 2
                    };
                    let bound = if conf == 14 { 4 } else { 3 };
                    let tail = boundary
                        .iter()
                        .filter(|&&e| s.disjoint(f0, e))
                        .all(|&e| s.m_plus(e, &[r]) >= bound);
                    if head && tail {
                        out.push((vec![r], vec![], vec![f0]));
                    }
                }
            }
        }
        16 => {
            for &r in &regions {
                let boundary = s.region_edges(r);
                if boundary.len() == 6 && boundary.iter().filter(|&&e| s.heavy(e, r, 3) && t.m(e) >= 2).count() >= 5 {
                    out.push((vec![r], vec![], vec![]));
                }
            }
        }
        _ => panic!("no configuration {conf}"),
    }
    out
}

/// Vertex relabellings (with the induced region order) that leave a
/// configuration's predicate unchanged.
pub fn orbit(conf: usize, inst: &Instance) -> Vec<Instance> {
    let (rs, vs, es) = inst;
    let perms: &[&[usize]] = match conf {
        3 => &[&[1, 0, 3, 2]],
        4 => &[&[2, 3, 0, 1]],
        5 => &[&[1, 0, 3, 2], &[2, 3, 0, 1], &[3, 2, 1, 0]],
        13 => &[&[3, 2, 1, 0, 4]],
        _ => &[],
    };
    let mut out = vec![inst.clone()];
    for p in perms {
        let image: Vec<VertexId> = p.iter().map(|&i| vs[i]).collect();
        // for Conf(4) the two triangles trade places
        let regions = if conf == 4 { vec![rs[1], rs[0]] } else { rs.clone() };
        out.push((regions, image, es.clone()));
    }
    out
}
