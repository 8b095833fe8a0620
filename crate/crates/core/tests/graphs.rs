mod common;

use common::*;
use num_bigint::BigUint;
use proptest::prelude::*;

use powgraph::graph::{
    aut_pow_cyclic_formula, automorphism_count, automorphism_count_by_orbits, automorphism_count_exhaustive,
    build_directed_power_graph, build_power_graph, color_isomorphic, cyclic_power_graph, directed_isomorphic, reduce,
    undirected_isomorphic, AutLimits, ColoredDigraph,
};
use powgraph::recognition::polycyclic_candidates;
use powgraph::{CayleyTable, GroupLimits};

/// Plain backtracking digraph isomorphism, vertex by vertex.
fn brute_directed_iso(a: &ColoredDigraph, b: &ColoredDigraph) -> bool {
    let n = a.len();
    if b.len() != n || a.edge_count() != b.edge_count() {
        return false;
    }
    let deg = |g: &ColoredDigraph, v: usize| (g.out_degree(v), (0..g.len()).filter(|&u| g.has_edge(u, v)).count());
    let da: Vec<_> = (0..n).map(|v| deg(a, v)).collect();
    let db: Vec<_> = (0..n).map(|v| deg(b, v)).collect();
    fn rec(a: &ColoredDigraph, b: &ColoredDigraph, da: &[(usize, usize)], db: &[(usize, usize)], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used[w] || da[v] != db[w] {
                continue;
            }
            let ok = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w) && a.has_edge(v, u) == b.has_edge(w, map[u]))
                && a.has_edge(v, v) == b.has_edge(w, w);
            if ok {
                map.push(w);
                used[w] = true;
                if rec(a, b, da, db, map, used) {
                    return true;
                }
                used[w] = false;
                map.pop();
            }
        }
        false
    }
    rec(a, b, &da, &db, &mut Vec::new(), &mut vec![false; n])
}

#[test]
fn reduced_colour_iso_matches_directed_iso() {
    let mut groups: Vec<(String, CayleyTable)> = Vec::new();
    for n in [8u64, 12, 16] {
        for s in abelian_groups(n) {
            groups.push((s.to_string(), build(&s)));
        }
    }
    groups.push(("D8".into(), dihedral(4)));
    groups.push(("Q8".into(), build_str(Q8)));
    groups.push(("D12".into(), dihedral(6)));
    groups.push(("D16".into(), dihedral(8)));
    for c in polycyclic_candidates(2, 4, 3, &GroupLimits::default()).unwrap() {
        groups.push((c.spec.to_string(), c.table));
    }
    let mut compared = 0;
    for (i, (na, ta)) in groups.iter().enumerate() {
        for (nb, tb) in &groups[i..] {
            if ta.order() != tb.order() {
                continue;
            }
            let (da, db) = (build_directed_power_graph(ta), build_directed_power_graph(tb));
            let reduced = color_isomorphic(&reduce(&da).unwrap(), &reduce(&db).unwrap()).is_some();
            assert_eq!(reduced, brute_directed_iso(&da, &db), "{na} vs {nb}");
            assert_eq!(reduced, directed_isomorphic(&da, &db).is_some(), "{na} vs {nb}");
            compared += 1;
        }
    }
    assert!(compared > 50);
}

#[test]
fn aut_formula_on_more_moduli() {
    for n in [6u64, 10, 14, 15, 21, 22] {
        let count = automorphism_count(&cyclic_power_graph(n), &AutLimits::default()).unwrap();
        assert_eq!(count, aut_pow_cyclic_formula(n).unwrap(), "n={n}");
    }
    // both counting routes agree where both are cheap
    for n in [6u64, 8, 9, 10, 12] {
        let g = cyclic_power_graph(n);
        assert_eq!(BigUint::from(automorphism_count_exhaustive(&g)), automorphism_count_by_orbits(&g), "n={n}");
    }
    assert!(aut_pow_cyclic_formula(16).is_err());
}

#[test]
fn power_graph_of_cyclic_matches_table_construction() {
    for n in 1..40 {
        assert_eq!(cyclic_power_graph(n as u64), build_power_graph(&CayleyTable::cyclic(n)), "n={n}");
    }
}

fn random_digraph(directed: bool) -> impl Strategy<Value = ColoredDigraph> {
    (2usize..9).prop_flat_map(move |n| {
        (prop::collection::vec(0u64..3, n), prop::collection::vec((0..n, 0..n), 0..(n * 2)))
            .prop_map(move |(colors, edges)| {
                let edges: Vec<_> = edges.into_iter().filter(|&(u, v)| directed || u != v).collect();
                ColoredDigraph::from_edges(directed, colors, &edges).unwrap()
            })
    })
}

fn shuffle(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        perm.swap(i, (s >> 33) as usize % (i + 1));
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn relabelled_graphs_are_isomorphic(g in random_digraph(true), seed in any::<u64>()) {
        let perm = shuffle(g.len(), seed);
        let h = g.relabel(&perm);
        let map = directed_isomorphic(&g, &h).expect("relabelling is an isomorphism");
        for u in 0..g.len() {
            prop_assert_eq!(g.color(u), h.color(map[u]));
            for v in 0..g.len() {
                prop_assert_eq!(g.has_edge(u, v), h.has_edge(map[u], map[v]));
            }
        }
        prop_assert_eq!(brute_directed_iso(&g, &h), true);
    }

    #[test]
    fn undirected_iso_agrees_with_brute_force(a in random_digraph(false), b in random_digraph(false)) {
        let (da, db) = (a.clone().with_colors(vec![0; a.len()]), b.clone().with_colors(vec![0; b.len()]));
        let fast = undirected_isomorphic(&a, &b, true).is_some();
        let brute = brute_directed_iso(&to_directed(&da), &to_directed(&db));
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn automorphism_routes_agree(g in random_digraph(false)) {
        prop_assert_eq!(BigUint::from(automorphism_count_exhaustive(&g)), automorphism_count_by_orbits(&g));
    }

    #[test]
    fn reduction_is_invariant_under_relabelling(n in 2usize..40, seed in any::<u64>()) {
        let d = build_directed_power_graph(&CayleyTable::cyclic(n));
        let r = reduce(&d).unwrap();
        let h = d.relabel(&shuffle(n, seed));
        let rh = reduce(&h).unwrap();
        prop_assert!(color_isomorphic(&r, &rh).is_some());
        prop_assert!(r.is_acyclic());
    }
}

fn to_directed(g: &ColoredDigraph) -> ColoredDigraph {
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((v, u));
    }
    ColoredDigraph::from_edges(true, g.colors().to_vec(), &edges).unwrap()
}
