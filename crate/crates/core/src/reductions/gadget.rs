use std::fmt;

use crate::graph::ColoredDigraph;
use crate::motif::{Motif, MotifInstance};
use crate::reductions::cnf::{CnfFormula, Literal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Root,
    Literal(Literal),
    /// Occurrence of a literal in a clause (clause index 0-based).
    ClauseOcc { literal: Literal, clause: usize },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Root => f.write_str("root"),
            Role::Literal(l) => write!(f, "literal {l}"),
            Role::ClauseOcc { literal, clause } => write!(f, "occ {literal} C{}", clause + 1),
        }
    }
}

/// The SAT gadget graph with its motif and vertex roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub instance: MotifInstance,
    pub roles: Vec<Role>,
    pub vars: u32,
    pub clauses: usize,
}

impl GadgetInstance {
    /// Vertices of the literal in index order `x1, ¬x1, ..` start at 1.
    pub fn literal_vertex(&self, l: Literal) -> usize {
        1 + l.index()
    }

    /// Clause-occurrence vertices attached to `l`, in clause order.
    pub fn occurrences(&self, l: Literal) -> Vec<usize> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| matches!(r, Role::ClauseOcc { literal, .. } if *literal == l))
            .map(|(v, _)| v)
            .collect()
    }
}

/// Vertex 0 is the root (colour 0), vertices `1..=2n` the literals (colour
/// = variable), then one vertex per literal occurrence, clause by clause,
/// coloured `n + j` for clause `j` (1-based). Occurrences of one literal form
/// a clique hanging off that literal; the root sees every literal. The
/// motif is every colour once.
pub fn build_gadget(f: &CnfFormula) -> GadgetInstance {
    let n = f.vars();
    let mut roles = vec![Role::Root];
    let mut colors = vec![0u64];
    for i in 0..2 * n as usize {
        let l = Literal::from_index(i);
        roles.push(Role::Literal(l));
        colors.push(l.var as u64);
    }
    let mut by_literal: Vec<Vec<usize>> = vec![Vec::new(); 2 * n as usize];
    for (j, clause) in f.clauses().iter().enumerate() {
        for &l in clause {
            by_literal[l.index()].push(roles.len());
            roles.push(Role::ClauseOcc { literal: l, clause: j });
            colors.push(n as u64 + 1 + j as u64);
        }
    }
    let mut edges = Vec::new();
    for (i, occ) in by_literal.iter().enumerate() {
        let lv = 1 + i;
        edges.push((0, lv));
        for (a, &u) in occ.iter().enumerate() {
            edges.push((lv, u));
            for &w in &occ[a + 1..] {
                edges.push((u, w));
            }
        }
    }
    let graph = ColoredDigraph::from_edges(false, colors, &edges).expect("gadget edges are in range");
    let motif = Motif::from_colors(0..=(n as u64 + f.clause_count() as u64)).expect("motif has the root colour");
    GadgetInstance {
        instance: MotifInstance::new(graph, motif).expect("gadget graph is undirected"),
        roles,
        vars: n,
        clauses: f.clause_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::cnf::parse_dimacs;

    #[test]
    fn single_clause_gadget() {
        let g = build_gadget(&parse_dimacs("p cnf 1 1\n1 0\n").unwrap());
        let graph = &g.instance.graph;
        assert_eq!(graph.len(), 4);
        assert_eq!(graph.colors(), &[0, 1, 1, 2]);
        assert_eq!(graph.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.roles[3], Role::ClauseOcc { literal: Literal::pos(1), clause: 0 });
    }

    #[test]
    fn four_clause_three_variable_gadget() {
        let f = parse_dimacs("p cnf 3 4\n1 2 3 0\n-1 -2 3 0\n1 -2 -3 0\n-1 2 -3 0\n").unwrap();
        let g = build_gadget(&f);
        let occ = g.roles.iter().filter(|r| matches!(r, Role::ClauseOcc { .. })).count();
        assert_eq!(g.instance.graph.len(), 19);
        assert_eq!(occ, 12);
        assert_eq!(g.instance.motif.size(), 8);
        assert!(g.instance.motif.is_colourful());
    }

    #[test]
    fn occurrence_cliques() {
        let f = parse_dimacs("p cnf 2 3\n1 2 0\n1 -2 0\n1 0\n").unwrap();
        let g = build_gadget(&f);
        let occ = g.occurrences(Literal::pos(1));
        assert_eq!(occ.len(), 3);
        let graph = &g.instance.graph;
        for &u in &occ {
            assert!(graph.has_edge(u, g.literal_vertex(Literal::pos(1))));
            assert!(!graph.has_edge(u, 0));
            for &w in &occ {
                assert_eq!(graph.has_edge(u, w), u != w);
            }
        }
    }
}
