//! Region charges for 7-targets: α from lengths and multiplicities, β moved
//! across edges by the class of the two regions, and the two global sums.

use std::fmt;

use thiserror::Error;

use crate::planar::{EdgeId, RegionId};
use crate::structure::{region_label, RegionKind, Structure, StructureError};
use crate::target::Target;

/// Σα over all regions of any 7-target.
pub const ALPHA_TOTAL: i64 = 28;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("discharging is defined for d = 7, got d = {0}")]
    WrongDegree(u32),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("internal error: sum of alpha is {alpha}, sum of beta is {beta}")]
    IdentityViolated { alpha: i64, beta: i64 },
}

/// Which transfer rule decided an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BetaRule {
    /// Both big, both tough, or both small and not tough.
    SameClass,
    /// Tough triangle against a small region that is not tough.
    Beta0,
    /// Big against small through a door of the big region.
    Beta1,
    /// Big against a small triangle of multiplicity at least five.
    Beta2,
    /// Any other big/small pair.
    Beta3,
}

impl fmt::Display for BetaRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BetaRule::SameClass => "same-class",
            BetaRule::Beta0 => "beta0",
            BetaRule::Beta1 => "beta1",
            BetaRule::Beta2 => "beta2",
            BetaRule::Beta3 => "beta3",
        })
    }
}

/// β_e on the two sides of `edge`, in the order of [`crate::planar::Embedding::sides`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeTransfer {
    pub edge: EdgeId,
    pub regions: (RegionId, RegionId),
    pub values: (i64, i64),
    pub rule: BetaRule,
}

impl EdgeTransfer {
    pub fn value_at(&self, r: RegionId) -> i64 {
        if r == self.regions.0 {
            self.values.0
        } else if r == self.regions.1 {
            self.values.1
        } else {
            0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionCharge {
    pub region: RegionId,
    pub kind: RegionKind,
    pub alpha: i64,
    pub beta: i64,
}

impl RegionCharge {
    pub fn total(&self) -> i64 {
        self.alpha + self.beta
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DischargeReport {
    pub regions: Vec<RegionCharge>,
    pub edges: Vec<EdgeTransfer>,
    pub sum_alpha: i64,
    pub sum_beta: i64,
}

impl DischargeReport {
    /// Regions with α + β > 0, in region order.
    pub fn overcharged(&self) -> Vec<&RegionCharge> {
        self.regions.iter().filter(|c| c.total() > 0).collect()
    }
}

/// 14 − 7·len + 2·Σm.
pub fn alpha_value(len: usize, multiplicity_sum: u64) -> i64 {
    14 - 7 * len as i64 + 2 * multiplicity_sum as i64
}

pub fn alpha(t: &Target, r: RegionId) -> i64 {
    let region = t.embedding().region(r);
    alpha_value(region.len(), region.edges().map(|e| u64::from(t.m(e))).sum())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Group {
    Big,
    Tough,
    Plain,
}

fn group(kind: RegionKind) -> Group {
    match kind {
        RegionKind::Big => Group::Big,
        RegionKind::ToughTriangle => Group::Tough,
        RegionKind::Triangle | RegionKind::SmallLong => Group::Plain,
    }
}

/// Transfer across one edge. Rules are tried in order; with a big region `r`
/// and a small region `r'`, a door for `r` wins over a heavy triangle `r'`.
pub fn beta_edge(s: &Structure<'_>, e: EdgeId) -> Result<EdgeTransfer, StructureError> {
    let emb = s.embedding();
    let (a, b) = emb.incident_regions(e).map_err(|_| StructureError::NotTwoConnected)?;
    let (ga, gb) = (group(s.kind(a)), group(s.kind(b)));
    let transfer = |values, rule| EdgeTransfer {
        edge: e,
        regions: (a, b),
        values,
        rule,
    };
    if ga == gb {
        return Ok(transfer((0, 0), BetaRule::SameClass));
    }
    let (big, small, flip) = match (ga, gb) {
        (Group::Tough, Group::Plain) => return Ok(transfer((-1, 1), BetaRule::Beta0)),
        (Group::Plain, Group::Tough) => return Ok(transfer((1, -1), BetaRule::Beta0)),
        (Group::Big, _) => (a, b, false),
        _ => (b, a, true),
    };
    let (to_big, rule) = if s.is_door(e, big) {
        (0, BetaRule::Beta1)
    } else if s.is_triangle(small) && s.triangle_multiplicity(small) >= 5 {
        (2, BetaRule::Beta2)
    } else {
        (1, BetaRule::Beta3)
    };
    let values = if flip { (-to_big, to_big) } else { (to_big, -to_big) };
    Ok(transfer(values, rule))
}

/// β(r): the sum of β_e(r) over the boundary of `r`.
pub fn beta(s: &Structure<'_>, r: RegionId) -> Result<i64, StructureError> {
    let mut sum = 0;
    for e in s.embedding().region(r).edges() {
        sum += beta_edge(s, e)?.value_at(r);
    }
    Ok(sum)
}

/// Charges for every region. Fails on d ≠ 7 and on targets that are not two-connected.
pub fn discharge(t: &Target) -> Result<DischargeReport, DischargeError> {
    if t.d() != 7 {
        return Err(DischargeError::WrongDegree(t.d()));
    }
    let s = Structure::new(t)?;
    let emb = t.embedding();
    let edges = emb
        .graph()
        .edge_ids()
        .map(|e| beta_edge(&s, e))
        .collect::<Result<Vec<_>, _>>()?;
    let mut beta_of = vec![0i64; emb.region_count()];
    for tr in &edges {
        beta_of[tr.regions.0 .0] += tr.values.0;
        beta_of[tr.regions.1 .0] += tr.values.1;
    }
    let regions: Vec<RegionCharge> = emb
        .regions()
        .iter()
        .map(|r| RegionCharge {
            region: r.id(),
            kind: s.kind(r.id()),
            alpha: alpha(t, r.id()),
            beta: beta_of[r.id().0],
        })
        .collect();
    let sum_alpha = regions.iter().map(|c| c.alpha).sum();
    let sum_beta = regions.iter().map(|c| c.beta).sum();
    if sum_alpha != ALPHA_TOTAL || sum_beta != 0 {
        return Err(DischargeError::IdentityViolated {
            alpha: sum_alpha,
            beta: sum_beta,
        });
    }
    Ok(DischargeReport {
        regions,
        edges,
        sum_alpha,
        sum_beta,
    })
}

/// `[a,b,c]` label for report lines.
pub fn charge_label(t: &Target, c: &RegionCharge) -> String {
    region_label(t.embedding(), c.region)
}
