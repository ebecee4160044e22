//! Local structure of 7-targets: doors, heavy edges, big/small and tough
//! regions, m⁺ relative to a disc of regions, the sixteen reducible
//! configurations and the prime predicate.

mod confs;
mod prime;

use thiserror::Error;

use crate::planar::{EdgeId, Embedding, Graph, RegionId, VertexId};
use crate::target::Target;

pub use confs::{detect_all, detect_conf, ConfMatch, CONF_COUNT};
pub use prime::{is_prime, PrimeFailure, PrimeVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("the graph is not two-connected")]
    NotTwoConnected,
    #[error("edge {edge} is not on the boundary of region {region}")]
    EdgeNotOnRegion { edge: String, region: String },
    #[error("edge {0} is interior to the disc")]
    InteriorEdge(String),
    #[error("edge {0} is not on the boundary of the disc")]
    NotOnDisc(String),
    #[error("configurations are defined for d = 7, got d = {0}")]
    WrongDegree(u32),
    #[error("configuration number must be in 1..=16, got {0}")]
    NoSuchConf(usize),
}

/// The four region classes used by the discharging rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionKind {
    Big,
    ToughTriangle,
    Triangle,
    /// Small, not a triangle.
    SmallLong,
}

impl RegionKind {
    pub fn label(self) -> &'static str {
        match self {
            RegionKind::Big => "big",
            RegionKind::ToughTriangle => "tough-triangle",
            RegionKind::Triangle => "non-tough-triangle",
            RegionKind::SmallLong => "small-length>=4",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionClass {
    pub region: RegionId,
    /// Doors for the region, in boundary order.
    pub doors: Vec<EdgeId>,
    pub big: bool,
    pub triangle: bool,
    /// m(r), for triangles.
    pub multiplicity: Option<u32>,
    /// m⁺(r) with the disc {r}, for triangles.
    pub multiplicity_plus: Option<u32>,
    pub tough: bool,
}

impl RegionClass {
    pub fn kind(&self) -> RegionKind {
        if self.big {
            RegionKind::Big
        } else if self.tough {
            RegionKind::ToughTriangle
        } else if self.triangle {
            RegionKind::Triangle
        } else {
            RegionKind::SmallLong
        }
    }
}

/// An edge seen from one of its regions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeContext {
    pub edge: EdgeId,
    pub region: RegionId,
    pub other: RegionId,
    pub multiplicity: u32,
    pub door: bool,
    /// Largest i with the edge i-heavy: m(e), or m(uv) + min(m(uw), m(vw)) when
    /// the other region is a triangle uvw. The edge is i-heavy for 2 <= i <= this.
    pub heaviness: u32,
}

impl EdgeContext {
    pub fn is_heavy(&self, i: u32) -> bool {
        i >= 2 && self.heaviness >= i
    }

    /// `[2-heavy, 3-heavy, ..., max-heavy]`.
    pub fn heavy_levels(&self, max: u32) -> Vec<bool> {
        (2..=max).map(|i| self.is_heavy(i)).collect()
    }
}

/// Precomputed doors and classes of a two-connected target.
#[derive(Clone, Debug)]
pub struct Structure<'a> {
    t: &'a Target,
    doors: Vec<Vec<EdgeId>>,
    big: Vec<bool>,
    tough: Vec<bool>,
}

/// Boundary vertices of a region as `[a,b,c]`, walk order, starting at the least name.
pub fn region_label(emb: &Embedding, r: RegionId) -> String {
    let g = emb.graph();
    let mut vs: Vec<VertexId> = emb.region(r).vertices().collect();
    if let Some(start) = vs.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i) {
        vs.rotate_left(start);
    }
    format!("[{}]", vs.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(","))
}

/// Doors for `r` under multiplicities `m`, in boundary order: edges of C_r with
/// m = 1 whose other region has an m = 1 edge disjoint from them.
pub fn door_set(emb: &Embedding, m: &[u32], r: RegionId) -> Vec<EdgeId> {
    let g = emb.graph();
    emb.region(r)
        .edges()
        .filter(|&e| {
            if m[e.0] != 1 {
                return false;
            }
            let Some(other) = emb.other_region(e, r) else {
                return false;
            };
            emb.region(other)
                .edges()
                .any(|f| m[f.0] == 1 && g.edge(f).is_disjoint_from(g.edge(e)))
        })
        .collect()
}

impl<'a> Structure<'a> {
    pub fn new(t: &'a Target) -> Result<Structure<'a>, StructureError> {
        let emb = t.embedding();
        if !emb.is_two_connected() {
            return Err(StructureError::NotTwoConnected);
        }
        let doors: Vec<Vec<EdgeId>> = emb
            .regions()
            .iter()
            .map(|r| door_set(emb, t.multiplicities(), r.id()))
            .collect();
        let big: Vec<bool> = doors.iter().map(|d| d.len() >= 4).collect();
        let mut s = Structure {
            t,
            doors,
            big,
            tough: Vec::new(),
        };
        s.tough = emb
            .regions()
            .iter()
            .map(|r| r.is_triangle() && s.m_plus_region(r.id()) >= 7)
            .collect();
        Ok(s)
    }

    pub fn target(&self) -> &'a Target {
        self.t
    }

    pub fn embedding(&self) -> &'a Embedding {
        self.t.embedding()
    }

    pub fn graph(&self) -> &'a Graph {
        self.t.graph()
    }

    pub fn m(&self, e: EdgeId) -> u32 {
        self.t.m(e)
    }

    pub fn doors(&self, r: RegionId) -> &[EdgeId] {
        &self.doors[r.0]
    }

    pub fn is_door(&self, e: EdgeId, r: RegionId) -> bool {
        self.doors[r.0].contains(&e)
    }

    pub fn is_big(&self, r: RegionId) -> bool {
        self.big[r.0]
    }

    pub fn is_small(&self, r: RegionId) -> bool {
        !self.big[r.0]
    }

    pub fn is_tough(&self, r: RegionId) -> bool {
        self.tough[r.0]
    }

    pub fn is_triangle(&self, r: RegionId) -> bool {
        self.embedding().region(r).is_triangle()
    }

    pub fn len(&self, r: RegionId) -> usize {
        self.embedding().region(r).len()
    }

    pub fn kind(&self, r: RegionId) -> RegionKind {
        self.classify(r).kind()
    }

    /// The region across `e` from `r`.
    pub fn other(&self, e: EdgeId, r: RegionId) -> Result<RegionId, StructureError> {
        self.embedding()
            .other_region(e, r)
            .ok_or_else(|| StructureError::EdgeNotOnRegion {
                edge: self.graph().edge_label(e),
                region: region_label(self.embedding(), r),
            })
    }

    /// m⁺(e) for the disc made of `disc`: m(e), plus one if the region across
    /// the disc boundary is small.
    pub fn m_plus(&self, e: EdgeId, disc: &[RegionId]) -> Result<u32, StructureError> {
        let (a, b) = self.embedding().sides(e);
        let second = match (disc.contains(&a), disc.contains(&b)) {
            (true, true) => return Err(StructureError::InteriorEdge(self.graph().edge_label(e))),
            (false, false) => return Err(StructureError::NotOnDisc(self.graph().edge_label(e))),
            (true, false) => b,
            (false, true) => a,
        };
        Ok(self.m(e) + u32::from(self.is_small(second)))
    }

    /// m(r) for a triangle.
    pub fn triangle_multiplicity(&self, r: RegionId) -> u32 {
        self.embedding().region(r).edges().map(|e| self.m(e)).sum()
    }

    /// Sum of m⁺ over the boundary with the disc {r}.
    pub fn m_plus_region(&self, r: RegionId) -> u32 {
        self.embedding()
            .region(r)
            .edges()
            .map(|e| self.m_plus(e, &[r]).expect("boundary edge of a two-sided region"))
            .sum()
    }

    /// The vertex of triangle `r` that is not an end of `e`.
    pub fn apex(&self, r: RegionId, e: EdgeId) -> Option<VertexId> {
        let region = self.embedding().region(r);
        if !region.is_triangle() {
            return None;
        }
        let edge = self.graph().edge(e);
        region.vertices().find(|&v| !edge.has_end(v))
    }

    pub fn heaviness(&self, e: EdgeId, r: RegionId) -> Result<u32, StructureError> {
        let other = self.other(e, r)?;
        let m = self.m(e);
        Ok(match self.apex(other, e) {
            Some(w) => {
                let g = self.graph();
                let edge = g.edge(e);
                let uw = g.edge_between(edge.u, w).expect("triangle edge");
                let vw = g.edge_between(edge.v, w).expect("triangle edge");
                m + self.m(uw).min(self.m(vw))
            }
            None => m,
        })
    }

    /// Whether `e` is i-heavy for `r`; panics if `e` is not on `r`.
    pub fn is_heavy(&self, e: EdgeId, r: RegionId, i: u32) -> bool {
        i >= 2 && self.heaviness(e, r).expect("edge on region") >= i
    }

    pub fn edge_context(&self, e: EdgeId, r: RegionId) -> Result<EdgeContext, StructureError> {
        let other = self.other(e, r)?;
        Ok(EdgeContext {
            edge: e,
            region: r,
            other,
            multiplicity: self.m(e),
            door: self.is_door(e, r),
            heaviness: self.heaviness(e, r)?,
        })
    }

    pub fn classify(&self, r: RegionId) -> RegionClass {
        let triangle = self.is_triangle(r);
        RegionClass {
            region: r,
            doors: self.doors[r.0].clone(),
            big: self.big[r.0],
            triangle,
            multiplicity: triangle.then(|| self.triangle_multiplicity(r)),
            multiplicity_plus: triangle.then(|| self.m_plus_region(r)),
            tough: self.tough[r.0],
        }
    }
}

pub fn m_plus(t: &Target, e: EdgeId, disc: &[RegionId]) -> Result<u32, StructureError> {
    Structure::new(t)?.m_plus(e, disc)
}

pub fn classify_region(t: &Target, r: RegionId) -> Result<RegionClass, StructureError> {
    Ok(Structure::new(t)?.classify(r))
}

pub fn edge_context(t: &Target, e: EdgeId, r: RegionId) -> Result<EdgeContext, StructureError> {
    Structure::new(t)?.edge_context(e, r)
}
