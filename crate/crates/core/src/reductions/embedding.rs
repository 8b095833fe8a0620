//! Embedding the SAT gadget into `Pow(Z_N)`, `N` a primorial.
//!
//! With `b` odd and `h = (b-1)/2`, each literal `l` receives a distinct
//! `h`-subset `f(l)` of the prime indices `{2..b}`. The literal maps to an
//! element of order `d = 2 * prod_{t in f(l)} p_t`, its clause occurrences to
//! distinct generators of the subgroup of order `d/2`, and the root to the
//! element of order 2. Orders of distinct literals are then
//! divisibility-incomparable, which is what makes the induced power graph
//! coincide with the gadget.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{cyclic_power_graph, undirected_isomorphic, ColoredDigraph};
use crate::motif::MotifInstance;
use crate::number::{binomial, euler_phi, primes_first, primorial};
use crate::reductions::cnf::{CnfFormula, Literal};
use crate::reductions::gadget::{GadgetInstance, Role};

/// Smallest odd `b >= 3` meeting both per-instance inequalities for `Φ`.
pub fn choose_b(f: &CnfFormula) -> usize {
    choose_b_for(f.vars() as u64, f.max_occurrence() as u64)
}

/// Smallest odd `b >= 3` with `C(b-1, (b-1)/2) >= 2n` (enough subsets for an
/// injective `f`) and `φ(p_2 ⋯ p_{(b+1)/2}) >= max_occurrence` (enough
/// generators for the largest occurrence clique).
pub fn choose_b_for(vars: u64, max_occurrence: u64) -> usize {
    let mut b = 3usize;
    loop {
        let h = (b - 1) / 2;
        let subsets_ok = binomial((b - 1) as u64, h as u64) >= BigUint::from(2 * vars);
        if subsets_ok {
            let primes = primes_first(h + 1);
            let smallest: BigUint = primes[1..].iter().map(|&p| BigUint::from(p)).product();
            if euler_phi(&smallest) >= BigUint::from(max_occurrence) {
                return b;
            }
        }
        b += 2;
    }
}

/// The first `count` `h`-subsets of `{lo..=hi}` in colex order.
pub fn colex_subsets(lo: usize, hi: usize, h: usize, count: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(count);
    if h == 0 || hi + 1 < lo + h {
        return out;
    }
    let mut cur: Vec<usize> = (lo..lo + h).collect();
    while out.len() < count {
        out.push(cur.clone());
        // smallest position that can move up without colliding
        let mut i = 0;
        while i < h {
            let limit = if i + 1 < h { cur[i + 1] } else { hi + 1 };
            if cur[i] + 1 < limit {
                break;
            }
            i += 1;
        }
        if i == h {
            break;
        }
        cur[i] += 1;
        for (k, slot) in cur.iter_mut().enumerate().take(i) {
            *slot = lo + k;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingPlan {
    pub b: usize,
    pub primes: Vec<u64>,
    pub modulus: BigUint,
    /// Prime indices (1-based, within `2..=b`) per literal, in literal order.
    pub subsets: Vec<(Literal, Vec<usize>)>,
    /// Gadget vertex -> residue in `Z_N`.
    pub residues: Vec<BigUint>,
    /// Gadget vertex -> order of its residue.
    pub orders: Vec<BigUint>,
}

impl EmbeddingPlan {
    fn product(&self, indices: &[usize]) -> BigUint {
        indices.iter().map(|&t| BigUint::from(self.primes[t - 1])).product()
    }
}

pub fn build_embedding(f: &CnfFormula, gadget: &GadgetInstance, b: usize) -> Result<EmbeddingPlan> {
    if b < 3 || b % 2 == 0 {
        return Err(Error::InvalidSpec(format!("b must be odd and at least 3, got {b}")));
    }
    let h = (b - 1) / 2;
    let literals = 2 * f.vars() as usize;
    let subsets = colex_subsets(2, b, h, literals);
    if subsets.len() < literals {
        return Err(Error::InvalidSpec(format!(
            "b = {b} yields only {} subsets for {literals} literals",
            subsets.len()
        )));
    }
    let primes = primes_first(b);
    let modulus = primorial(b);
    let mut plan = EmbeddingPlan {
        b,
        primes,
        modulus: modulus.clone(),
        subsets: subsets.into_iter().enumerate().map(|(i, s)| (Literal::from_index(i), s)).collect(),
        residues: vec![BigUint::zero(); gadget.roles.len()],
        orders: vec![BigUint::zero(); gadget.roles.len()],
    };
    let p1 = BigUint::from(plan.primes[0]);
    let mut units_cache: Vec<Option<(BigUint, Vec<BigUint>)>> = vec![None; literals];
    let mut used = vec![0usize; literals];
    for (v, role) in gadget.roles.iter().enumerate() {
        let (residue, order) = match *role {
            Role::Root => (&modulus / &p1, p1.clone()),
            Role::Literal(l) => {
                let d = &p1 * plan.product(&plan.subsets[l.index()].1);
                (&modulus / &d, d)
            }
            Role::ClauseOcc { literal, .. } => {
                let i = literal.index();
                let need = gadget.occurrences(literal).len();
                if units_cache[i].is_none() {
                    let d_prime = plan.product(&plan.subsets[i].1);
                    let units = first_units(&d_prime, need);
                    if units.len() < need {
                        return Err(Error::InsufficientUnits {
                            literal: literal.to_string(),
                            needed: need,
                            available: euler_phi(&d_prime).to_u128().unwrap_or(u128::MAX),
                        });
                    }
                    units_cache[i] = Some((d_prime, units));
                }
                let (d_prime, units) = units_cache[i].as_ref().unwrap();
                let u = &units[used[i]];
                used[i] += 1;
                (&modulus / d_prime * u, d_prime.clone())
            }
        };
        plan.residues[v] = residue;
        plan.orders[v] = order;
    }
    verify_plan(&plan)?;
    Ok(plan)
}

/// First `count` residues in `1..d` coprime to `d` (for `d = 1`, just 0).
fn first_units(d: &BigUint, count: usize) -> Vec<BigUint> {
    if d.is_one() {
        return vec![BigUint::zero()];
    }
    let mut out = Vec::with_capacity(count);
    let mut u = BigUint::one();
    while out.len() < count && &u < d {
        if u.gcd(d).is_one() {
            out.push(u.clone());
        }
        u += 1u32;
    }
    out
}

/// Injectivity of `f` and of the element map, and the recorded orders
/// recomputed as `N / gcd(N, k)`.
pub fn verify_plan(plan: &EmbeddingPlan) -> Result<()> {
    let mut seen = HashSet::new();
    for (l, s) in &plan.subsets {
        if !seen.insert(s.clone()) {
            return Err(Error::EmbeddingMismatch(format!("subset of {l} assigned twice")));
        }
    }
    let mut residues = HashSet::new();
    for (v, r) in plan.residues.iter().enumerate() {
        if !residues.insert(r.clone()) {
            return Err(Error::EmbeddingMismatch(format!("residue {r} used twice (vertex {v})")));
        }
        let order = &plan.modulus / r.gcd(&plan.modulus);
        if order != plan.orders[v] {
            return Err(Error::EmbeddingMismatch(format!("vertex {v}: residue {r} has order {order}, expected {}", plan.orders[v])));
        }
    }
    Ok(())
}

/// The subgraph of `Pow(Z_N)` induced on the mapped residues (adjacency by
/// order divisibility), coloured like the gadget, checked colour-isomorphic
/// to it.
pub fn materialize_embedded_subgraph(plan: &EmbeddingPlan, gadget: &GadgetInstance) -> Result<ColoredDigraph> {
    let n = plan.orders.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (&plan.orders[u], &plan.orders[v]);
            if a.is_multiple_of(b) || b.is_multiple_of(a) {
                edges.push((u, v));
            }
        }
    }
    let g = ColoredDigraph::from_edges(false, gadget.instance.graph.colors().to_vec(), &edges)?;
    if g != gadget.instance.graph && undirected_isomorphic(&g, &gadget.instance.graph, false).is_none() {
        return Err(Error::EmbeddingMismatch("induced subgraph is not colour-isomorphic to the gadget".into()));
    }
    Ok(g)
}

pub const DEFAULT_VERTEX_BUDGET: u64 = 1_000_000;

/// All of `Pow(Z_N)`: mapped residues carry gadget colours, every other
/// residue `filler` (which must lie outside the motif).
pub fn materialize_full_instance(plan: &EmbeddingPlan, gadget: &GadgetInstance, filler: u64, budget: u64) -> Result<MotifInstance> {
    if gadget.instance.motif.contains(filler) {
        return Err(Error::InvalidSpec(format!("filler colour {filler} occurs in the motif")));
    }
    let n = plan.modulus.to_u64().filter(|&n| n <= budget).ok_or_else(|| Error::LimitExceeded {
        what: "vertices of the full power-graph instance",
        value: plan.modulus.to_u128().unwrap_or(u128::MAX),
        limit: budget as u128,
    })?;
    let graph = cyclic_power_graph(n);
    let mut colors = vec![filler; n as usize];
    for (v, r) in plan.residues.iter().enumerate() {
        colors[r.to_usize().expect("residue below N")] = gadget.instance.graph.color(v);
    }
    MotifInstance::new(graph.with_colors(colors), gadget.instance.motif.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::cnf::parse_dimacs;
    use crate::reductions::gadget::build_gadget;

    #[test]
    fn choose_b_examples() {
        assert_eq!(choose_b_for(3, 4), 5);
        assert_eq!(choose_b_for(1, 1), 3);
        assert_eq!(choose_b_for(10, 1), 7);
        let f = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
        assert_eq!(choose_b(&f), 3);
    }

    #[test]
    fn colex_order() {
        assert_eq!(colex_subsets(2, 5, 2, 10), vec![
            vec![2, 3],
            vec![2, 4],
            vec![3, 4],
            vec![2, 5],
            vec![3, 5],
            vec![4, 5]
        ]);
        assert_eq!(colex_subsets(2, 3, 1, 2), vec![vec![2], vec![3]]);
    }

    #[test]
    fn single_clause_plan() {
        let f = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
        let g = build_gadget(&f);
        let plan = build_embedding(&f, &g, 3).unwrap();
        assert_eq!(plan.modulus, BigUint::from(30u32));
        assert_eq!(plan.subsets[0].1, vec![2]);
        assert_eq!(plan.subsets[1].1, vec![3]);
        let r: Vec<u64> = plan.residues.iter().map(|x| x.to_u64().unwrap()).collect();
        assert_eq!(r, vec![15, 5, 3, 10]);
        let o: Vec<u64> = plan.orders.iter().map(|x| x.to_u64().unwrap()).collect();
        assert_eq!(o, vec![2, 6, 10, 3]);
        let sub = materialize_embedded_subgraph(&plan, &g).unwrap();
        assert!(!sub.has_edge(0, 3));
        let full = materialize_full_instance(&plan, &g, 99, DEFAULT_VERTEX_BUDGET).unwrap();
        assert_eq!(full.graph.len(), 30);
    }

    #[test]
    fn occurrence_vertices_form_cliques() {
        let f = parse_dimacs("p cnf 3 4\n1 2 3 0\n1 -2 3 0\n1 2 -3 0\n-1 -2 -3 0\n").unwrap();
        let g = build_gadget(&f);
        let b = choose_b(&f);
        assert_eq!(b, 5);
        let plan = build_embedding(&f, &g, b).unwrap();
        assert_eq!(plan.modulus, BigUint::from(2310u32));
        let sub = materialize_embedded_subgraph(&plan, &g).unwrap();
        let occ = g.occurrences(Literal::pos(1));
        assert_eq!(occ.len(), 3);
        assert!(sub.has_edge(occ[0], occ[2]));
    }

    #[test]
    fn too_small_b_is_reported() {
        // x1 occurs in 3 clauses, but with b = 3 the subgroup of order 3 has 2 generators.
        let f = parse_dimacs("p cnf 1 3\n1 0\n1 0\n1 0\n").unwrap();
        let g = build_gadget(&f);
        assert!(matches!(build_embedding(&f, &g, 3), Err(Error::InsufficientUnits { needed: 3, available: 2, .. })));
        assert_eq!(choose_b(&f), 5);
        assert!(build_embedding(&f, &g, 5).is_ok());
    }
}
