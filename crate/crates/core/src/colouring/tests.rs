use proptest::prelude::*;

use super::*;
use crate::fixtures;
use crate::planar::Embedding;

fn e(g: &Graph, a: &str, b: &str) -> EdgeId {
    g.edge_by_names(a, b).unwrap()
}

fn sorted(mut f: Vec<EdgeId>) -> Vec<EdgeId> {
    f.sort();
    f
}

// M0 = verticals, M_x = {xx'} plus the two triangle edges avoiding x and x'
fn prism_matchings(g: &Graph) -> [Vec<EdgeId>; 4] {
    [
        sorted(vec![e(g, "a", "a'"), e(g, "b", "b'"), e(g, "c", "c'")]),
        sorted(vec![e(g, "a", "a'"), e(g, "b", "c"), e(g, "b'", "c'")]),
        sorted(vec![e(g, "b", "b'"), e(g, "a", "c"), e(g, "a'", "c'")]),
        sorted(vec![e(g, "c", "c'"), e(g, "a", "b"), e(g, "a'", "b'")]),
    ]
}

// all perfect matchings of g, by brute force over edge subsets
fn matchings_by_subsets(g: &Graph) -> Vec<Vec<EdgeId>> {
    let m = g.edge_count();
    let half = g.vertex_count() / 2;
    let mut out = Vec::new();
    for mask in 0u64..1 << m {
        if mask.count_ones() as usize != half {
            continue;
        }
        let f: Vec<EdgeId> = (0..m).filter(|i| mask >> i & 1 == 1).map(EdgeId).collect();
        if perfect_matching_defect(g, &f).is_none() {
            out.push(f);
        }
    }
    out.sort();
    out
}

// naive oracle: some multiset of d perfect matchings of g has coverage exactly m
fn oracle_colourable(g: &Graph, d: u32, m: &[u32]) -> bool {
    if g.vertex_count() % 2 == 1 {
        return false;
    }
    let all = matchings_by_subsets(g);
    fn pick(all: &[Vec<EdgeId>], from: usize, left: u32, cover: &mut Vec<u32>, m: &[u32]) -> bool {
        if left == 0 {
            return cover == m;
        }
        for i in from..all.len() {
            if all[i].iter().any(|e| cover[e.0] >= m[e.0]) {
                continue;
            }
            for e in &all[i] {
                cover[e.0] += 1;
            }
            let ok = pick(all, i, left - 1, cover, m);
            for e in &all[i] {
                cover[e.0] -= 1;
            }
            if ok {
                return true;
            }
        }
        false
    }
    pick(&all, 0, d, &mut vec![0; g.edge_count()], m)
}

// every m: E -> {0..d} with m(δ(v)) = d for all v
fn regular_multiplicities(g: &Graph, d: u32) -> Vec<Vec<u32>> {
    fn go(g: &Graph, d: u32, i: usize, m: &mut Vec<u32>, deg: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == g.edge_count() {
            if deg.iter().all(|&x| x == d) {
                out.push(m.clone());
            }
            return;
        }
        let edge = g.edge(EdgeId(i));
        // once every edge at a vertex is fixed its degree must be exact
        let last_at = |v: VertexId| g.incident(v).iter().all(|&(_, f)| f.0 <= i);
        for x in 0..=d {
            let (du, dv) = (deg[edge.u.0] + x, deg[edge.v.0] + x);
            if du > d || dv > d {
                break;
            }
            if (last_at(edge.u) && du != d) || (last_at(edge.v) && dv != d) {
                continue;
            }
            m[i] = x;
            deg[edge.u.0] = du;
            deg[edge.v.0] = dv;
            go(g, d, i + 1, m, deg, out);
            deg[edge.u.0] -= x;
            deg[edge.v.0] -= x;
        }
        m[i] = 0;
    }
    let mut out = Vec::new();
    go(
        g,
        d,
        0,
        &mut vec![0; g.edge_count()],
        &mut vec![0; g.vertex_count()],
        &mut out,
    );
    out
}

#[test]
fn k4_splits_into_its_three_matchings() {
    let t = fixtures::k4_cubic();
    let c = solve_colouring(&t, SolveOptions::default());
    let c = c.colouring().expect("K4 is colourable").clone();
    assert!(verify_colouring(&t, &c).passed());
    let all = matchings_by_subsets(t.graph());
    assert_eq!(all.len(), 3);
    assert_eq!(c.matchings(), all.as_slice());
}

#[test]
fn prism7_is_colourable() {
    let t = fixtures::prism7();
    let c = solve_colouring(&t, SolveOptions::default());
    let c = c.colouring().expect("PRISM7 is colourable");
    assert_eq!(c.len(), 7);
    assert!(verify_colouring(&t, c).passed());
}

#[test]
fn prism7_hand_witness() {
    let t = fixtures::prism7();
    let [m0, ma, mb, mc] = prism_matchings(t.graph());
    let good = Colouring::new(vec![
        m0.clone(),
        ma.clone(),
        ma.clone(),
        mb.clone(),
        mb.clone(),
        mc.clone(),
        mc.clone(),
    ]);
    assert!(verify_colouring(&t, &good).passed());
    assert_eq!(good.coverage(9), t.multiplicities());

    let bad = Colouring::new(vec![m0.clone(), m0, ma, mb.clone(), mb, mc.clone(), mc]);
    let report = verify_colouring(&t, &bad);
    assert!(!report.passed());
    let bc = e(t.graph(), "b", "c");
    assert!(report.failures.contains(&ColouringFailure::Coverage {
        edge: bc,
        expected: 2,
        got: 1
    }));
}

#[test]
fn single_edge_uses_one_matching_d_times() {
    let emb = fixtures::single_edge();
    let g = emb.graph();
    for d in 1..=5 {
        let list = vec![vec![EdgeId(0)]; d as usize];
        assert!(verify_matchings(g, d, &[d], &list).passed());
        let out = solve(g, d, &[d], SolveOptions::default());
        assert_eq!(out.colouring().unwrap().matchings(), list.as_slice());
    }
}

#[test]
fn petersen_is_not_three_colourable() {
    let (g, m) = fixtures::petersen3();
    assert_eq!(matchings_by_subsets(&g).len(), 6);
    assert!(matches!(
        solve(&g, 3, &m, SolveOptions::default()),
        SolveOutcome::NotColourable(_)
    ));
    assert!(!oracle_colourable(&g, 3, &m));
}

#[test]
fn budget_and_parity() {
    let t = fixtures::prism7();
    assert_eq!(
        solve_colouring(&t, SolveOptions::with_budget(0)),
        SolveOutcome::Unknown { nodes: 0 }
    );
    assert!(matches!(
        solve_colouring(&t, SolveOptions::with_budget(2)),
        SolveOutcome::Unknown { .. }
    ));
    let tri = fixtures::cycle(3);
    let out = solve(tri.graph(), 2, &[1, 1, 1], SolveOptions::default());
    assert!(matches!(out, SolveOutcome::NotColourable(ref r) if r.contains("3 vertices")));
}

#[test]
fn solver_is_deterministic() {
    let t = fixtures::prism7();
    let a = solve_colouring(&t, SolveOptions::default());
    let b = solve_colouring(&t, SolveOptions::default());
    assert_eq!(a, b);
}

#[test]
fn odd_cut_pruning_agrees() {
    let g = fixtures::prism(3);
    let g = g.graph();
    for d in 1..=3 {
        for m in regular_multiplicities(g, d) {
            let plain = solve(g, d, &m, SolveOptions::default()).is_colourable();
            let pruned = solve(
                g,
                d,
                &m,
                SolveOptions {
                    odd_cut_pruning: true,
                    ..SolveOptions::default()
                },
            )
            .is_colourable();
            assert_eq!(plain, pruned, "{m:?}");
        }
    }
}

#[test]
fn enumeration_counts() {
    let k4 = fixtures::k4_cubic();
    assert_eq!(enumerate_perfect_matchings(k4.graph(), &[1; 6], 100).matchings.len(), 3);
    let prism = fixtures::prism(3);
    let list = enumerate_perfect_matchings(prism.graph(), &[1; 9], 100);
    assert_eq!(list.matchings, matchings_by_subsets(prism.graph()));
    assert_eq!(list.matchings.len(), 4);
    let c6 = fixtures::cycle(6);
    assert_eq!(enumerate_perfect_matchings(c6.graph(), &[1; 6], 100).matchings.len(), 2);
    let cut = enumerate_perfect_matchings(prism.graph(), &[1; 9], 2);
    assert_eq!(cut.matchings.len(), 2);
    assert!(cut.truncated);
    assert!(!list.truncated);
}

#[test]
fn enumeration_respects_support() {
    let prism = fixtures::prism(4);
    let g = prism.graph();
    let m: Vec<u32> = g.edge_ids().map(|e| u32::from(e.0 % 3 != 0)).collect();
    let listed = enumerate_perfect_matchings(g, &m, 10_000).matchings;
    let expected: Vec<_> = matchings_by_subsets(g)
        .into_iter()
        .filter(|f| f.iter().all(|e| m[e.0] > 0))
        .collect();
    assert_eq!(listed, expected);
}

#[test]
fn solver_matches_oracle_exhaustively() {
    let k33 = Graph::from_edge_list(
        &["a", "b", "c", "x", "y", "z"],
        &[
            ("a", "x"),
            ("a", "y"),
            ("a", "z"),
            ("b", "x"),
            ("b", "y"),
            ("b", "z"),
            ("c", "x"),
            ("c", "y"),
            ("c", "z"),
        ],
    )
    .unwrap();
    let cases: Vec<(Graph, u32)> = vec![
        (fixtures::k4_cubic().graph().clone(), 4),
        (fixtures::prism(3).graph().clone(), 3),
        (fixtures::prism(4).graph().clone(), 2),
        (fixtures::cycle(6).graph().clone(), 4),
        (k33, 3),
    ];
    let (mut yes, mut no) = (0, 0);
    for (g, dmax) in &cases {
        for d in 1..=*dmax {
            for m in regular_multiplicities(g, d) {
                let got = solve(g, d, &m, SolveOptions::default()).is_colourable();
                let want = oracle_colourable(g, d, &m);
                assert_eq!(got, Some(want), "d = {d}, m = {m:?}");
                if want {
                    yes += 1;
                } else {
                    no += 1;
                }
            }
        }
    }
    assert!(yes > 0 && no > 0, "{yes} yes, {no} no");
}

#[test]
fn recombination_examples() {
    let t = fixtures::prism7();
    let g = t.graph();
    let [m0, ma, _, _] = prism_matchings(g);
    let set = |names: &[&str]| names.iter().map(|n| g.vertex(n).unwrap()).collect::<VertexSet>();

    let (f1, f2) = recombine_across_cut(g, &ma, &ma, set(&["a", "b", "c"])).unwrap();
    assert_eq!((f1.clone(), f2), (ma.clone(), ma.clone()));

    let (f1, f2) = recombine_across_cut(g, &ma, &m0, set(&["a"])).unwrap();
    assert_eq!((f1, f2), (m0.clone(), ma.clone()));

    let err = recombine_across_cut(g, &m0, &ma, set(&["a", "b", "c"])).unwrap_err();
    assert!(matches!(err, RecombineError::CutEdges(ref c) if c.len() == 3));
    assert_eq!(
        recombine_across_cut(g, &m0, &ma, set(&["a", "b"])),
        Err(RecombineError::EvenSet(2))
    );
}

fn random_colouring_host(n: usize) -> (Embedding, Vec<Vec<EdgeId>>) {
    let emb = fixtures::prism(n);
    let all = enumerate_perfect_matchings(emb.graph(), &vec![1; emb.graph().edge_count()], 10_000).matchings;
    (emb, all)
}

proptest! {
    #[test]
    fn recombination_keeps_colourings_valid(
        n in 3usize..=6,
        picks in proptest::collection::vec(any::<prop::sample::Index>(), 5),
        bits in any::<u64>(),
    ) {
        let (emb, all) = random_colouring_host(n);
        let g = emb.graph();
        let list: Vec<Vec<EdgeId>> = picks.iter().map(|i| all[i.index(all.len())].clone()).collect();
        let c = Colouring::new(list);
        let m = c.coverage(g.edge_count());
        let x = VertexSet::from_bits(bits & ((1u64 << g.vertex_count()) - 1));
        prop_assume!(x.len() % 2 == 1);
        for i in 0..c.len() {
            for j in 0..c.len() {
                let (f1, f2) = (&c.matchings()[i], &c.matchings()[j]);
                match recombine_across_cut(g, f1, f2, x) {
                    Ok((g1, g2)) => {
                        prop_assert!(perfect_matching_defect(g, &g1).is_none());
                        prop_assert!(perfect_matching_defect(g, &g2).is_none());
                        if i != j {
                            let mut list = c.matchings().to_vec();
                            list[i] = g1;
                            list[j] = g2;
                            prop_assert!(verify_matchings(g, c.len() as u32, &m, &list).passed());
                        }
                    }
                    Err(RecombineError::CutEdges(_)) => {}
                    Err(other) => prop_assert!(false, "{other}"),
                }
            }
        }
    }
}
