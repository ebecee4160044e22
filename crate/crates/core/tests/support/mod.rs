#![allow(dead_code)]

pub mod naive;

use ptg_core::fixtures;
use ptg_core::generate::{corpus, GeneratorConfig};
use ptg_core::Target;

pub const CORPUS_SEED: u64 = 2024;
pub const CORPUS_SIZE: usize = 60;

/// The seeded corpus of 7-targets on at most 16 vertices.
pub fn seven_corpus() -> Vec<Target> {
    corpus(CORPUS_SEED, CORPUS_SIZE, &GeneratorConfig::default())
}

/// Hand-built 7-targets plus the corpus.
pub fn all_sevens() -> Vec<(String, Target)> {
    let mut out = vec![
        ("prism7".to_string(), fixtures::prism7()),
        ("cube7".to_string(), fixtures::cube7()),
        ("pentagon7".to_string(), fixtures::pentagon7()),
        ("hexagon7".to_string(), fixtures::hexagon7()),
    ];
    for p in fixtures::planted_cuts() {
        out.push((p.name.to_string(), p.target.clone()));
    }
    for (i, t) in seven_corpus().into_iter().enumerate() {
        out.push((format!("corpus#{i}"), t));
    }
    out
}
