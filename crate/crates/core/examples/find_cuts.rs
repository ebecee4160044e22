//! Search seeded random 7-targets for switches whose colouring admits a
//! Guenin cut, and write each hit as `<dir>/cutN.ptg` (unswitched target)
//! plus `<dir>/cutN.cut` (path, class and colouring of the switched target).
//!
//! cargo run --release -p ptg-core --example find_cuts -- <dir> [count] [seed]

use std::fs;
use std::path::PathBuf;

use ptg_core::colouring::SolveOptions;
use ptg_core::format::{emit_colouring, emit_target};
use ptg_core::generate::{corpus, GeneratorConfig};
use ptg_core::switching::{find_guenin_cut, is_switchable, SwitchSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().expect("output directory"));
    let want: usize = args.next().map_or(4, |s| s.parse().expect("count"));
    let seed: u64 = args.next().map_or(99, |s| s.parse().expect("seed"));
    fs::create_dir_all(&dir).expect("create output directory");
    let cfg = GeneratorConfig {
        max_vertices: 12,
        perturbations: 10,
        ..GeneratorConfig::default()
    };
    let mut found = 0;
    for (k, t) in corpus(seed, 1000, &cfg).iter().enumerate() {
        let g = t.graph();
        let mut hit = None;
        'search: for x in g.vertices() {
            for u in g.neighbours(x) {
                for v in g.neighbours(u).filter(|&v| v != x) {
                    for y in g.neighbours(v).filter(|&y| y != x && y != u) {
                        let spec = SwitchSpec::new(x, u, v, y);
                        let Ok((s, outcome)) = is_switchable(t, &spec, SolveOptions::with_budget(200_000)) else {
                            continue;
                        };
                        let Some(c) = outcome.colouring() else { continue };
                        for i in 0..c.len() {
                            if let Ok(Some(_)) = find_guenin_cut(&s.target, c, &s.switch, i, 20) {
                                hit = Some(([x, u, v, y], i, emit_colouring(s.target.graph(), c)));
                                break 'search;
                            }
                        }
                    }
                }
            }
        }
        let Some((path, i, colouring)) = hit else { continue };
        found += 1;
        let names: Vec<&str> = path.iter().map(|&v| g.name(v)).collect();
        let stem = dir.join(format!("cut{found}"));
        fs::write(
            stem.with_extension("ptg"),
            format!("# random 7-target, corpus seed {seed}, index {k}\n{}", emit_target(t)),
        )
        .expect("write target");
        fs::write(
            stem.with_extension("cut"),
            format!("path {}\nclass {}\n{}", names.join(" "), i + 1, colouring),
        )
        .expect("write cut");
        println!(
            "cut{found}: {} vertices, path {}, class {}",
            t.vertex_count(),
            names.join("-"),
            i + 1
        );
        if found == want {
            break;
        }
    }
}
