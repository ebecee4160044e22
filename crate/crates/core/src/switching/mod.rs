//! The `(G,m)+xy` construction, switching on a three-edge path `x-u-v-y`,
//! switchability, and Guenin cuts of a switched target.

mod guenin;

use thiserror::Error;

use crate::colouring::{solve_colouring, SolveOptions, SolveOutcome};
use crate::planar::{EdgeId, Embedding, EmbeddingError, Graph, RegionId, VertexId, VertexSet};
use crate::structure::region_label;
use crate::target::{validate_target, Target, TargetError, Verdict};

pub use guenin::{find_guenin_cut, verify_guenin_cut, CutCondition, CutReport, GueninCut};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwitchError {
    #[error("path vertices must be distinct")]
    RepeatedVertex,
    #[error("no edge {0}-{1} on the path")]
    MissingEdge(String, String),
    #[error("{0} and {1} share no region")]
    NoCommonRegion(String, String),
    #[error("{x} and {y} share several regions ({candidates}); name one")]
    AmbiguousRegion { x: String, y: String, candidates: String },
    #[error("region {region} does not contain both {x} and {y}")]
    RegionMissesEnds { region: String, x: String, y: String },
    #[error("no region has boundary vertices {0}")]
    UnknownRegion(String),
    #[error("switching would make m({0}) negative")]
    NegativeMultiplicity(String),
    #[error("switched multiplicities violate the odd-cut axiom: {witness}")]
    OddCutViolation { witness: String, raw: Box<RawSwitch> },
    #[error("class {class} is out of range 1..={d}")]
    NoSuchClass { class: usize, d: usize },
    #[error("class {0} holds the new chord and is excluded")]
    ExcludedClass(usize),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Target(#[from] TargetError),
}

/// A path `x-u-v-y`, with the region for a new chord `xy` when `x` and `y`
/// share more than one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SwitchSpec {
    pub x: VertexId,
    pub u: VertexId,
    pub v: VertexId,
    pub y: VertexId,
    pub region: Option<RegionId>,
}

/// Whether `xy` was already an edge of the unswitched graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chord {
    Existing,
    New(RegionId),
}

/// A checked [`SwitchSpec`]. Vertex ids are shared by `G` and `G'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolvedSwitch {
    pub x: VertexId,
    pub u: VertexId,
    pub v: VertexId,
    pub y: VertexId,
    pub chord: Chord,
}

impl ResolvedSwitch {
    /// `(xu, uv, vy, xy)` in `g`, which must contain the chord.
    pub fn edges(&self, g: &Graph) -> [EdgeId; 4] {
        let e = |a, b| g.edge_between(a, b).expect("switch edge present");
        [
            e(self.x, self.u),
            e(self.u, self.v),
            e(self.v, self.y),
            e(self.x, self.y),
        ]
    }
}

/// The switched graph and multiplicities before the odd-cut axiom is rechecked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSwitch {
    pub embedding: Embedding,
    pub d: u32,
    pub m: Vec<u32>,
    pub switch: ResolvedSwitch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Switched {
    pub target: Target,
    pub switch: ResolvedSwitch,
}

impl SwitchSpec {
    pub fn new(x: VertexId, u: VertexId, v: VertexId, y: VertexId) -> SwitchSpec {
        SwitchSpec {
            x,
            u,
            v,
            y,
            region: None,
        }
    }

    /// Look up path vertices by name; `region` lists the boundary vertices of a region.
    pub fn from_names(emb: &Embedding, path: [&str; 4], region: Option<&[&str]>) -> Result<SwitchSpec, SwitchError> {
        let g = emb.graph();
        let [x, u, v, y] = path.map(|n| g.vertex_or_err(n));
        let mut spec = SwitchSpec::new(x?, u?, v?, y?);
        if let Some(names) = region {
            spec.region = Some(region_by_names(emb, names)?);
        }
        Ok(spec)
    }

    pub fn resolve(&self, emb: &Embedding) -> Result<ResolvedSwitch, SwitchError> {
        let g = emb.graph();
        let name = |v: VertexId| g.name(v).to_string();
        let path = [self.x, self.u, self.v, self.y];
        for (i, a) in path.iter().enumerate() {
            if path[i + 1..].contains(a) {
                return Err(SwitchError::RepeatedVertex);
            }
        }
        for w in path.windows(2) {
            if g.edge_between(w[0], w[1]).is_none() {
                return Err(SwitchError::MissingEdge(name(w[0]), name(w[1])));
            }
        }
        let common = emb.common_regions(self.x, self.y);
        if common.is_empty() {
            return Err(SwitchError::NoCommonRegion(name(self.x), name(self.y)));
        }
        if let Some(r) = self.region {
            if !common.contains(&r) {
                return Err(SwitchError::RegionMissesEnds {
                    region: region_label(emb, r),
                    x: name(self.x),
                    y: name(self.y),
                });
            }
        }
        let chord = if g.edge_between(self.x, self.y).is_some() {
            Chord::Existing
        } else {
            match (self.region, common.as_slice()) {
                (Some(r), _) => Chord::New(r),
                (None, [r]) => Chord::New(*r),
                (None, _) => {
                    return Err(SwitchError::AmbiguousRegion {
                        x: name(self.x),
                        y: name(self.y),
                        candidates: common
                            .iter()
                            .map(|&r| region_label(emb, r))
                            .collect::<Vec<_>>()
                            .join(" "),
                    })
                }
            }
        };
        Ok(ResolvedSwitch {
            x: self.x,
            u: self.u,
            v: self.v,
            y: self.y,
            chord,
        })
    }
}

/// The region whose boundary vertex set is exactly `names`.
pub fn region_by_names(emb: &Embedding, names: &[&str]) -> Result<RegionId, SwitchError> {
    let g = emb.graph();
    let mut set = VertexSet::empty();
    for n in names {
        set.insert(g.vertex_or_err(n)?);
    }
    let found: Vec<RegionId> = emb
        .regions()
        .iter()
        .filter(|r| r.vertex_set() == set && r.len() == names.len())
        .map(|r| r.id())
        .collect();
    match found.as_slice() {
        [r] => Ok(*r),
        _ => Err(SwitchError::UnknownRegion(names.join(","))),
    }
}

// multiplicities carried over to `new`, whose vertex ids match `old`
fn carry_over(old: &Graph, m: &[u32], new: &Graph) -> Vec<u32> {
    new.edges()
        .iter()
        .map(|e| old.edge_between(e.u, e.v).map_or(0, |f| m[f.0]))
        .collect()
}

/// `(G,m)+xy`: unchanged when `x` and `y` are adjacent, otherwise a new edge
/// of multiplicity zero drawn inside `region` (needed only when they share
/// several regions).
pub fn add_chord(t: &Target, x: VertexId, y: VertexId, region: Option<RegionId>) -> Result<Target, SwitchError> {
    let emb = t.embedding();
    let g = emb.graph();
    if x == y {
        return Err(SwitchError::RepeatedVertex);
    }
    if g.edge_between(x, y).is_some() {
        return Ok(t.clone());
    }
    let common = emb.common_regions(x, y);
    let r = match (region, common.as_slice()) {
        (_, []) => return Err(SwitchError::NoCommonRegion(g.name(x).into(), g.name(y).into())),
        (Some(r), _) if common.contains(&r) => r,
        (Some(r), _) => {
            return Err(SwitchError::RegionMissesEnds {
                region: region_label(emb, r),
                x: g.name(x).into(),
                y: g.name(y).into(),
            })
        }
        (None, [r]) => *r,
        (None, _) => {
            return Err(SwitchError::AmbiguousRegion {
                x: g.name(x).into(),
                y: g.name(y).into(),
                candidates: common
                    .iter()
                    .map(|&r| region_label(emb, r))
                    .collect::<Vec<_>>()
                    .join(" "),
            })
        }
    };
    let new = emb.with_chord(x, y, r)?;
    let m = carry_over(g, t.multiplicities(), new.graph());
    // a zero edge changes no degree and no cut value
    Ok(Target::from_valid_parts(new, t.d(), m))
}

/// Apply the ±1 rewrite without rechecking the odd-cut axiom.
pub fn switch_raw(t: &Target, spec: &SwitchSpec) -> Result<RawSwitch, SwitchError> {
    let sw = spec.resolve(t.embedding())?;
    let g = t.graph();
    for (a, b) in [(sw.x, sw.u), (sw.v, sw.y)] {
        let e = g.edge_between(a, b).expect("resolved");
        if t.m(e) == 0 {
            return Err(SwitchError::NegativeMultiplicity(g.edge_label(e)));
        }
    }
    let region = match sw.chord {
        Chord::New(r) => Some(r),
        Chord::Existing => None,
    };
    let plus = add_chord(t, sw.x, sw.y, region)?;
    let mut m = plus.multiplicities().to_vec();
    let [xu, uv, vy, xy] = sw.edges(plus.graph());
    m[xu.0] -= 1;
    m[uv.0] += 1;
    m[vy.0] -= 1;
    m[xy.0] += 1;
    Ok(RawSwitch {
        embedding: plus.embedding().clone(),
        d: t.d(),
        m,
        switch: sw,
    })
}

/// Switch on `x-u-v-y` and recheck the result as a d-target. Odd sets are
/// enumerated, so `cap` bounds the vertex count.
pub fn switch_on_path(t: &Target, spec: &SwitchSpec, cap: usize) -> Result<Switched, SwitchError> {
    let raw = switch_raw(t, spec)?;
    let report = validate_target(&raw.embedding, raw.d, &raw.m, cap);
    match (&report.degree, &report.odd_cuts) {
        (Verdict::Fail(w), _) => unreachable!("switching preserves degrees: {}", w.describe(raw.embedding.graph())),
        (_, Verdict::Fail(w)) => {
            let witness = w.describe(raw.embedding.graph());
            Err(SwitchError::OddCutViolation {
                witness,
                raw: Box::new(raw),
            })
        }
        (_, Verdict::Unchecked(_)) => Err(TargetError::CapExceeded {
            vertices: raw.embedding.graph().vertex_count(),
            cap,
        }
        .into()),
        _ => Ok(Switched {
            switch: raw.switch,
            target: Target::from_valid_parts(raw.embedding, raw.d, raw.m),
        }),
    }
}

/// Switch, then ask the solver for a d-edge-colouring of the result.
pub fn is_switchable(
    t: &Target,
    spec: &SwitchSpec,
    opts: SolveOptions,
) -> Result<(Switched, SolveOutcome), SwitchError> {
    let switched = switch_on_path(t, spec, opts.odd_set_cap)?;
    let outcome = solve_colouring(&switched.target, opts);
    Ok((switched, outcome))
}
