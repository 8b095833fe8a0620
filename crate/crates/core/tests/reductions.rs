use num_bigint::BigUint;
use proptest::prelude::*;

use powgraph::graph::cyclic_power_graph;
use powgraph::motif::{occurs_bruteforce, occurs_twinclass, MotifLimits};
use powgraph::reductions::{
    build_embedding, build_gadget, choose_b, materialize_embedded_subgraph, materialize_full_instance, maxcut_bruteforce,
    maxcut_embed, parse_dimacs, sat_bruteforce, verify_plan, write_dimacs, CnfFormula, Literal, WeightedGraph,
};
use powgraph::Error;

fn formula(max_vars: u32, max_clauses: usize) -> impl Strategy<Value = CnfFormula> {
    (1..=max_vars).prop_flat_map(move |n| {
        let clause = prop::collection::vec((1..=n, any::<bool>()), 1..=3)
            .prop_map(|lits| lits.into_iter().map(|(v, s)| if s { Literal::pos(v) } else { Literal::neg(v) }).collect());
        prop::collection::vec(clause, 1..=max_clauses).prop_map(move |cs| CnfFormula::new(n, cs).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dimacs_round_trip(f in formula(6, 8)) {
        prop_assert_eq!(parse_dimacs(&write_dimacs(&f)).unwrap(), f);
    }

    #[test]
    fn gadget_motif_iff_satisfiable(f in formula(4, 5)) {
        let gadget = build_gadget(&f);
        let limits = MotifLimits::default();
        let sat = sat_bruteforce(&f).unwrap();
        if let Some(a) = &sat {
            prop_assert!(f.satisfied_by(a));
        }
        prop_assert_eq!(occurs_bruteforce(&gadget.instance, &limits).unwrap().occurs, sat.is_some());
        prop_assert_eq!(occurs_twinclass(&gadget.instance, &limits).unwrap().occurs, sat.is_some());
    }

    #[test]
    fn plans_embed_the_gadget(f in formula(5, 6)) {
        let gadget = build_gadget(&f);
        let plan = build_embedding(&f, &gadget, choose_b(&f)).unwrap();
        verify_plan(&plan).unwrap();
        let n = &plan.modulus;
        for (r, o) in plan.residues.iter().zip(&plan.orders) {
            prop_assert!(r < n);
            prop_assert_eq!(o, &(n / num_integer::Integer::gcd(r, n)));
        }
        let sub = materialize_embedded_subgraph(&plan, &gadget).unwrap();
        prop_assert_eq!(&sub, &gadget.instance.graph);
    }

    #[test]
    fn maxcut_embedding_preserves_the_optimum(
        n in 2usize..5,
        weights in prop::collection::vec(-5i64..6, 6),
    ) {
        let mut w = WeightedGraph::new(n);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                w.set_weight(u, v, weights[k]).unwrap();
                k += 1;
            }
        }
        let (e, map) = maxcut_embed(&w).unwrap();
        for (u, v, x) in w.edges() {
            prop_assert_eq!(e.weight(map[u], map[v]), x);
        }
        prop_assert_eq!(maxcut_bruteforce(&e).unwrap().0, maxcut_bruteforce(&w).unwrap().0);
    }
}

#[test]
fn spec_examples() {
    let one = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
    let plan = build_embedding(&one, &build_gadget(&one), choose_b(&one)).unwrap();
    assert_eq!((plan.b, plan.modulus.clone()), (3, BigUint::from(30u32)));
    let three = parse_dimacs("p cnf 3 4\n1 2 3 0\n-1 -2 3 0\n1 -2 -3 0\n-1 2 -3 0\n").unwrap();
    assert_eq!(choose_b(&three), 5);
}

#[test]
fn unsatisfiable_full_instance_is_absent() {
    let f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n").unwrap();
    let gadget = build_gadget(&f);
    let plan = build_embedding(&f, &gadget, choose_b(&f)).unwrap();
    let inst = materialize_full_instance(&plan, &gadget, 99, 1_000).unwrap();
    assert_eq!(inst.graph.len(), 30);
    assert_eq!(inst.graph.edges(), cyclic_power_graph(30).edges());
    assert!(!occurs_twinclass(&inst, &MotifLimits::default()).unwrap().occurs);
    assert!(matches!(materialize_full_instance(&plan, &gadget, 99, 10), Err(Error::LimitExceeded { .. })));
    // the filler colour must stay outside the motif
    assert!(materialize_full_instance(&plan, &gadget, 0, 1_000).is_err());
}

#[test]
fn dimacs_errors() {
    assert!(parse_dimacs("p cnf 2 2\n1 2 0\n").is_err());
    // four distinct literals
    assert!(parse_dimacs("p cnf 2 1\n1 2 -1 -2 0\n").is_err());
    assert!(parse_dimacs("p cnf 1 1\n3 0\n").is_err());
    assert!(parse_dimacs("p cnf x 1\n1 0\n").is_err());
}

#[test]
fn maxcut_brute_force_limit() {
    assert!(maxcut_bruteforce(&WeightedGraph::<i64>::new(27)).is_err());
    let (v, _) = maxcut_bruteforce(&WeightedGraph::<i64>::new(1)).unwrap();
    assert_eq!(v, 0);
}
