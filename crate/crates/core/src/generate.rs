//! Seeded random d-targets: three-connected plane graphs built by vertex
//! insertion, chords and edge deletion, with multiplicities summed from d
//! random perfect matchings.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colouring::enumerate_perfect_matchings;
use crate::fixtures;
use crate::planar::{EdgeId, Embedding, RegionId, VertexId};
use crate::switching::{switch_on_path, SwitchSpec};
use crate::target::Target;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    /// Smallest vertex count; rounded up to even.
    pub min_vertices: usize,
    /// Largest vertex count; rounded down to even.
    pub max_vertices: usize,
    pub max_degree: usize,
    pub d: u32,
    /// Random legal switches along paths with an existing chord, applied after
    /// the matchings are summed. These can make the target non-colourable.
    pub perturbations: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            min_vertices: 6,
            max_vertices: 16,
            max_degree: 7,
            d: 7,
            perturbations: 0,
        }
    }
}

const MATCHING_LIMIT: usize = 20_000;

fn max_degree(emb: &Embedding) -> usize {
    let g = emb.graph();
    g.vertices().map(|v| g.degree(v)).max().unwrap_or(0)
}

fn insert_vertex(rng: &mut ChaCha8Rng, emb: &Embedding, name: &str, cap: usize) -> Option<Embedding> {
    let g = emb.graph();
    let r = emb.regions().choose(rng)?;
    let walk: Vec<VertexId> = r.vertices().filter(|&v| g.degree(v) < cap).collect();
    if walk.len() < 3 {
        return None;
    }
    let k = rng.gen_range(3..=walk.len().min(cap).min(5));
    let mut picks: Vec<usize> = (0..walk.len()).collect();
    picks.shuffle(rng);
    picks.truncate(k);
    picks.sort_unstable();
    let attach: Vec<VertexId> = picks.iter().map(|&i| walk[i]).collect();
    emb.with_vertex_in_region(name, r.id(), &attach).ok()
}

fn add_chord(rng: &mut ChaCha8Rng, emb: &Embedding, cap: usize) -> Option<Embedding> {
    let g = emb.graph();
    let long: Vec<RegionId> = emb.regions().iter().filter(|r| r.len() >= 4).map(|r| r.id()).collect();
    let &r = long.choose(rng)?;
    let walk: Vec<VertexId> = emb.region(r).vertices().collect();
    let x = *walk.choose(rng)?;
    let y = *walk.choose(rng)?;
    if x == y || g.edge_between(x, y).is_some() || g.degree(x) >= cap || g.degree(y) >= cap {
        return None;
    }
    emb.with_chord(x, y, r).ok()
}

fn delete_edge(rng: &mut ChaCha8Rng, emb: &Embedding) -> Option<Embedding> {
    let edges: Vec<EdgeId> = emb.graph().edge_ids().collect();
    let &e = edges.choose(rng)?;
    let next = emb.without_edge(e).ok()?;
    next.graph().is_k_connected(3).then_some(next)
}

/// A random three-connected plane graph with an even number of vertices in
/// the configured range and maximum degree at most `max_degree`.
pub fn random_embedding(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> Embedding {
    let lo = cfg.min_vertices.max(4).div_ceil(2) * 2;
    let hi = (cfg.max_vertices / 2 * 2).max(lo);
    let want = 2 * rng.gen_range(lo / 2..=hi / 2);
    let cap = cfg.max_degree.max(3);
    // larger prisms give long regions, which is where doors and big regions live
    let prisms = (3..=(want / 2).min(6)).count();
    let mut emb = match rng.gen_range(0..=prisms) {
        0 => fixtures::k4_cubic().embedding().clone(),
        k => fixtures::prism(k + 2),
    };
    let mut fresh = 0;
    let mut stalls = 0;
    while emb.graph().vertex_count() < want && stalls < 1000 {
        match insert_vertex(rng, &emb, &format!("n{fresh}"), cap) {
            Some(next) => {
                emb = next;
                fresh += 1;
            }
            None => stalls += 1,
        }
    }
    let edits = rng.gen_range(0..=emb.graph().vertex_count());
    for _ in 0..edits {
        let next = if rng.gen_bool(0.5) {
            add_chord(rng, &emb, cap)
        } else {
            delete_edge(rng, &emb)
        };
        if let Some(next) = next {
            emb = next;
        }
    }
    debug_assert!(emb.graph().is_k_connected(3) && max_degree(&emb) <= cap);
    emb
}

/// Sum of `d` perfect matchings. Each is either uniform, or (with even odds)
/// one covering as many still-uncovered edges as possible, ties broken at
/// random. `None` without a perfect matching.
pub fn random_multiplicities(rng: &mut ChaCha8Rng, emb: &Embedding, d: u32) -> Option<Vec<u32>> {
    let g = emb.graph();
    let ones = vec![1u32; g.edge_count()];
    let list = enumerate_perfect_matchings(g, &ones, MATCHING_LIMIT).matchings;
    if list.is_empty() {
        return None;
    }
    let mut m = vec![0u32; g.edge_count()];
    for _ in 0..d {
        if rng.gen_bool(0.5) {
            for e in list.choose(rng).expect("nonempty") {
                m[e.0] += 1;
            }
            continue;
        }
        let gain = |f: &Vec<EdgeId>| f.iter().filter(|e| m[e.0] == 0).count();
        let best = list.iter().map(gain).max().unwrap_or(0);
        let top: Vec<&Vec<EdgeId>> = list.iter().filter(|f| gain(f) == best).collect();
        let f = top.choose(rng).expect("nonempty");
        for e in f.iter() {
            m[e.0] += 1;
        }
    }
    Some(m)
}

fn perturb(rng: &mut ChaCha8Rng, t: Target, steps: usize) -> Target {
    let mut t = t;
    for _ in 0..steps {
        let g = t.graph();
        let edges = g.edges();
        let e = edges[rng.gen_range(0..edges.len())];
        let (x, y) = if rng.gen_bool(0.5) { (e.u, e.v) } else { (e.v, e.u) };
        let us: Vec<VertexId> = g.neighbours(x).filter(|&u| u != y).collect();
        let vs: Vec<VertexId> = g.neighbours(y).filter(|&v| v != x).collect();
        let (Some(&u), Some(&v)) = (us.choose(rng), vs.choose(rng)) else {
            continue;
        };
        if u == v || g.edge_between(u, v).is_none() {
            continue;
        }
        if let Ok(s) = switch_on_path(&t, &SwitchSpec::new(x, u, v, y), usize::MAX) {
            t = s.target;
        }
    }
    t
}

/// One random d-target. Retries until the graph has a perfect matching.
pub fn random_target(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> Target {
    loop {
        let emb = random_embedding(rng, cfg);
        let Some(m) = random_multiplicities(rng, &emb, cfg.d) else {
            continue;
        };
        // a sum of perfect matchings meets every odd cut at least d times
        let t = Target::with_cap(emb, cfg.d, m, usize::MAX).expect("sum of perfect matchings is a target");
        return perturb(rng, t, cfg.perturbations);
    }
}

/// `count` targets from a fixed seed.
pub fn corpus(seed: u64, count: usize, cfg: &GeneratorConfig) -> Vec<Target> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_target(&mut rng, cfg)).collect()
}
