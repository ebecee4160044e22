//! Small named instances used by tests, benches and documentation.

use crate::colouring::Colouring;
use crate::format::{load_target, parse_colouring, parse_ptg};
use crate::planar::{Embedding, Graph};
use crate::target::{Target, DEFAULT_ODD_SET_CAP};

pub const PRISM7_PTG: &str = include_str!("../fixtures/prism7.ptg");
pub const K4_PTG: &str = include_str!("../fixtures/k4.ptg");
pub const CUBE7_PTG: &str = include_str!("../fixtures/cube7.ptg");
pub const PETERSEN3_PTG: &str = include_str!("../fixtures/petersen3.ptg");
pub const PENTAGON7_PTG: &str = include_str!("../fixtures/pentagon7.ptg");
pub const HEXAGON7_PTG: &str = include_str!("../fixtures/hexagon7.ptg");

const CUTS: [(&str, &str, &str); 4] = [
    (
        "cut1",
        include_str!("../fixtures/cuts/cut1.ptg"),
        include_str!("../fixtures/cuts/cut1.cut"),
    ),
    (
        "cut2",
        include_str!("../fixtures/cuts/cut2.ptg"),
        include_str!("../fixtures/cuts/cut2.cut"),
    ),
    (
        "cut3",
        include_str!("../fixtures/cuts/cut3.ptg"),
        include_str!("../fixtures/cuts/cut3.cut"),
    ),
    (
        "cut4",
        include_str!("../fixtures/cuts/cut4.ptg"),
        include_str!("../fixtures/cuts/cut4.cut"),
    ),
];

/// Triangular prism, triangle edges 2, verticals 3, d = 7.
pub fn prism7() -> Target {
    load_target(PRISM7_PTG, DEFAULT_ODD_SET_CAP).expect("fixture is a valid target")
}

/// K4 with m ≡ 1, d = 3.
pub fn k4_cubic() -> Target {
    load_target(K4_PTG, DEFAULT_ODD_SET_CAP).expect("fixture is a valid target")
}

/// Cube with square edges 1 and verticals 5, d = 7. The two squares `abcd`
/// and `a'b'c'd'` are big.
pub fn cube7() -> Target {
    load_target(CUBE7_PTG, DEFAULT_ODD_SET_CAP).expect("fixture is a valid target")
}

/// Pentagonal prism with the chord `v0-w1`; the big pentagon `v0..v4` meets
/// the tough triangle `v0 v1 w1` (multiplicity 6) across `v0-v1`.
pub fn pentagon7() -> Target {
    load_target(PENTAGON7_PTG, DEFAULT_ODD_SET_CAP).expect("fixture is a valid target")
}

/// Hexagonal prism with the chord `v0-w1`; both hexagons are big.
pub fn hexagon7() -> Target {
    load_target(HEXAGON7_PTG, DEFAULT_ODD_SET_CAP).expect("fixture is a valid target")
}

/// The Petersen graph with m ≡ 1, as an abstract graph.
pub fn petersen3() -> (Graph, Vec<u32>) {
    let doc = parse_ptg(PETERSEN3_PTG).expect("fixture parses");
    let g = doc.graph().expect("fixture graph");
    let m = doc.multiplicities(&g).expect("fixture multiplicities");
    (g, m)
}

fn records(list: &[(String, Vec<String>)]) -> Embedding {
    Embedding::new(list).expect("fixture embedding")
}

/// The n-prism on inner cycle `v0..` and outer cycle `w0..`, for `3 <= n <= 10`.
pub fn prism(n: usize) -> Embedding {
    assert!((3..=10).contains(&n));
    let i = |k: usize| format!("v{}", k % n);
    let o = |k: usize| format!("w{}", k % n);
    let mut list = Vec::new();
    for k in 0..n {
        list.push((i(k), vec![o(k), i(k + 1), i(k + n - 1)]));
        list.push((o(k), vec![o(k + 1), i(k), o(k + n - 1)]));
    }
    records(&list)
}

/// The cycle `v0 v1 ... v(n-1)`, for `3 <= n <= 10`.
pub fn cycle(n: usize) -> Embedding {
    assert!((3..=10).contains(&n));
    let name = |k: usize| format!("v{}", k % n);
    let list: Vec<_> = (0..n).map(|k| (name(k), vec![name(k + 1), name(k + n - 1)])).collect();
    records(&list)
}

/// One edge `a-b`.
pub fn single_edge() -> Embedding {
    records(&[
        ("a".to_string(), vec!["b".to_string()]),
        ("b".to_string(), vec!["a".to_string()]),
    ])
}

/// A 7-target, a path to switch on, a colouring of the switched target and a
/// class (0-based) for which a Guenin cut exists.
#[derive(Clone, Debug)]
pub struct PlantedCut {
    pub name: &'static str,
    pub target: Target,
    pub path: [String; 4],
    pub class: usize,
    /// `matching k:` lines naming edges of the switched graph.
    pub colouring: &'static str,
}

impl PlantedCut {
    /// Read the colouring against the switched graph.
    pub fn colouring_on(&self, switched: &Graph) -> Colouring {
        Colouring::new(parse_colouring(switched, self.colouring).expect("fixture colouring"))
    }
}

/// Instances with a known Guenin cut, all on twelve vertices.
pub fn planted_cuts() -> Vec<PlantedCut> {
    CUTS.iter()
        .map(|&(name, ptg, cut)| {
            let mut lines = cut.lines();
            let path: Vec<String> = lines
                .next()
                .and_then(|l| l.strip_prefix("path "))
                .expect("path line")
                .split_whitespace()
                .map(str::to_string)
                .collect();
            let class: usize = lines
                .next()
                .and_then(|l| l.strip_prefix("class "))
                .and_then(|k| k.parse().ok())
                .expect("class line");
            PlantedCut {
                name,
                target: load_target(ptg, DEFAULT_ODD_SET_CAP).expect("fixture is a valid target"),
                path: path.try_into().expect("four path vertices"),
                class: class - 1,
                colouring: cut,
            }
        })
        .collect()
}
