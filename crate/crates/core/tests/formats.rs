use proptest::prelude::*;

use powgraph::format::{
    parse_graph, parse_group_table, parse_motif, parse_wgraph, write_graph, write_group_table, write_motif, write_plan,
    write_reduced, write_wgraph, GraphFile,
};
use powgraph::graph::{build_directed_power_graph, reduce, ColoredDigraph};
use powgraph::reductions::{build_embedding, build_gadget, choose_b, parse_dimacs, WeightedGraph};
use powgraph::{CayleyTable, Error, Motif};

fn digraph() -> impl Strategy<Value = ColoredDigraph> {
    (any::<bool>(), 1usize..12).prop_flat_map(|(directed, n)| {
        (prop::collection::vec(0u64..100, n), prop::collection::vec((0..n, 0..n), 0..30)).prop_map(move |(c, e)| {
            let e: Vec<_> = e.into_iter().filter(|&(u, v)| directed || u != v).collect();
            ColoredDigraph::from_edges(directed, c, &e).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graphs_round_trip(g in digraph()) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), GraphFile::Plain(g));
    }

    #[test]
    fn weighted_graphs_round_trip(n in 2usize..8, edges in prop::collection::vec((0usize..8, 0usize..8, -9i64..10), 0..20)) {
        let mut g = WeightedGraph::new(n);
        for (u, v, w) in edges {
            if u < n && v < n && u != v {
                g.set_weight(u, v, w).unwrap();
            }
        }
        prop_assert_eq!(parse_wgraph(&write_wgraph(&g)).unwrap(), g);
    }

    #[test]
    fn motifs_round_trip(colors in prop::collection::vec(0u64..20, 1..10)) {
        let m = Motif::from_colors(colors).unwrap();
        prop_assert_eq!(parse_motif(&write_motif(&m)).unwrap(), m);
    }

    #[test]
    fn garbage_never_panics(text in "[a-z0-9 \\n#-]{0,80}") {
        let _ = parse_graph(&text);
        let _ = parse_motif(&text);
        let _ = parse_wgraph(&text);
        let _ = parse_group_table(&text);
    }
}

#[test]
fn reduced_and_group_files() {
    let t = CayleyTable::cyclic(12);
    assert_eq!(parse_group_table(&write_group_table(&t)).unwrap(), t);
    let r = reduce(&build_directed_power_graph(&t)).unwrap().without_members();
    let text = write_reduced(&r);
    assert!(text.starts_with("cgraph directed 6 "));
    assert_eq!(parse_graph(&text).unwrap(), GraphFile::Reduced(r));
}

#[test]
fn comments_and_blank_lines_are_skipped() {
    let text = "# a triangle\ncgraph undirected 3 3\n\nv 0 1\nv 1 2\nv 2 3\n# edges\ne 0 1\ne 1 2\ne 0 2\n";
    let GraphFile::Plain(g) = parse_graph(text).unwrap() else { panic!() };
    assert!(g.is_complete());
}

#[test]
fn parse_errors_name_the_line() {
    let text = "cgraph undirected 2 1\nv 0 1\nv 1 1\ne 0 5\n";
    match parse_graph(text) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn plan_manifest_layout() {
    let f = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
    let g = build_gadget(&f);
    let plan = build_embedding(&f, &g, choose_b(&f)).unwrap();
    let text = write_plan(&plan);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "b 3");
    assert_eq!(lines[1], "N 30");
    assert_eq!(lines[2], "primes 2 3 5");
    assert!(lines.iter().any(|l| l.starts_with("subset x1 ")));
    assert_eq!(lines.iter().filter(|l| l.starts_with("map ")).count(), 4);
    assert!(lines.contains(&"map 0 15 2"));
}
