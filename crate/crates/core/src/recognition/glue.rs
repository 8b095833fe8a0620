use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::ReducedGraph;

/// Among classes that are a parent of every input (a class counts as its
/// own parent), the one of least colour. `Ok(None)` when there is no common
/// parent; `Err(Ambiguous)` when the least colour is attained twice.
pub fn least_common_parent(r: &ReducedGraph, classes: &[usize]) -> Result<Option<usize>> {
    let distinct: BTreeSet<usize> = classes.iter().copied().collect();
    let Some(&first) = distinct.iter().next() else {
        return Ok(None);
    };
    let parents = |c: usize| -> BTreeSet<usize> {
        let mut s: BTreeSet<usize> = r.inn(c).iter().copied().collect();
        s.insert(c);
        s
    };
    let mut common = parents(first);
    for &c in distinct.iter().skip(1) {
        let p = parents(c);
        common.retain(|x| p.contains(x));
        if common.is_empty() {
            return Ok(None);
        }
    }
    let Some(min) = common.iter().map(|&c| r.color(c)).min() else {
        return Ok(None);
    };
    let mut best = common.into_iter().filter(|&c| r.color(c) == min);
    let a = best.next().expect("minimum is attained");
    if let Some(b) = best.next() {
        return Err(Error::Ambiguous(a, b));
    }
    Ok(Some(a))
}

/// Reduced directed power graph of a direct product of coprime-order groups,
/// from the factors' reduced graphs: classes are tuples of classes (last
/// factor fastest), colours and sizes multiply, and `τ -> σ` iff every
/// coordinate satisfies `σ_i = τ_i` or `τ_i -> σ_i`.
///
/// Also returns each product class's coordinate tuple.
pub fn product_reduced(factors: &[&ReducedGraph]) -> (ReducedGraph, Vec<Vec<usize>>) {
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for f in factors {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..f.len()).map(move |c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    let colors = tuples.iter().map(|t| t.iter().zip(factors).map(|(&c, f)| f.color(c)).product()).collect();
    let sizes = tuples.iter().map(|t| t.iter().zip(factors).map(|(&c, f)| f.size(c)).product()).collect();
    // index of a tuple in mixed radix
    let radix: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    let index = |t: &[usize]| t.iter().zip(&radix).fold(0usize, |acc, (&c, &r)| acc * r + c);
    let mut edges = Vec::new();
    for t in &tuples {
        // expand all coordinate-wise closed successors
        let mut succ: Vec<Vec<usize>> = vec![Vec::new()];
        for (i, f) in factors.iter().enumerate() {
            let options: Vec<usize> = std::iter::once(t[i]).chain(f.out(t[i]).iter().copied()).collect();
            succ = succ
                .into_iter()
                .flat_map(|s| {
                    options.iter().map(move |&o| {
                        let mut s = s.clone();
                        s.push(o);
                        s
                    })
                })
                .collect();
        }
        let from = index(t);
        for s in succ {
            let to = index(&s);
            if to != from {
                edges.push((from, to));
            }
        }
    }
    let r = ReducedGraph::from_parts(colors, sizes, &edges).expect("product classes are consistent");
    (r, tuples)
}

/// Independent check of a colour-isomorphism `map: R1 -> R2` (`map[c1] = c2`).
pub fn verify_color_iso(r1: &ReducedGraph, r2: &ReducedGraph, map: &[usize]) -> bool {
    let k = r1.len();
    if r2.len() != k || map.len() != k || r1.edge_count() != r2.edge_count() {
        return false;
    }
    let mut hit = vec![false; k];
    for &c in map {
        if c >= k || std::mem::replace(&mut hit[c], true) {
            return false;
        }
    }
    (0..k).all(|c| r1.color(c) == r2.color(map[c]) && r1.size(c) == r2.size(map[c]))
        && r1.edges().into_iter().all(|(u, v)| r2.has_edge(map[u], map[v]))
}

/// Assembles a colour-isomorphism from the product of the per-prime
/// witnesses to `r`. `factors[i]` is the witness group's reduced graph and
/// `maps[i]` sends its classes to classes of `r`. Every failure is a plain
/// `None`.
pub fn glue(r: &ReducedGraph, factors: &[&ReducedGraph], maps: &[Vec<usize>]) -> Option<(ReducedGraph, Vec<usize>)> {
    let (product, tuples) = product_reduced(factors);
    if product.len() != r.len() {
        return None;
    }
    let mut map = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let images: Vec<usize> = t.iter().zip(maps).map(|(&c, m)| m[c]).collect();
        match least_common_parent(r, &images) {
            Ok(Some(u)) => map.push(u),
            _ => return None,
        }
    }
    verify_color_iso(&product, r, &map).then_some((product, map))
}
