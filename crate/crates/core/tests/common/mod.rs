//! Helpers shared by the integration tests. The arithmetic and group
//! constructions here are written independently of the library so they can
//! serve as oracles.
#![allow(dead_code)]

use std::collections::BTreeMap;

use powgraph::graph::{build_directed_power_graph, reduce, ReducedGraph};
use powgraph::{build_group, CayleyTable, GroupLimits, GroupSpec};

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Trial division, primes ascending.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

pub fn is_prime_power(n: u64) -> bool {
    factor(n).len() == 1
}

/// Partitions of `m` as non-increasing lists.
pub fn partitions(m: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

fn product_spec(parts: Vec<GroupSpec>) -> GroupSpec {
    if parts.len() == 1 {
        parts.into_iter().next().unwrap()
    } else {
        GroupSpec::DirectProduct(parts)
    }
}

/// Cartesian product of per-prime choices.
pub fn combine<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for l in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                l.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Every abelian group of order `n` up to isomorphism.
pub fn abelian_groups(n: u64) -> Vec<GroupSpec> {
    let per_prime: Vec<Vec<GroupSpec>> = factor(n)
        .into_iter()
        .map(|(p, a)| partitions(a).into_iter().map(|partition| GroupSpec::AbelianP { p, partition }).collect())
        .collect();
    if per_prime.is_empty() {
        return vec![GroupSpec::Cyclic(1)];
    }
    combine(&per_prime).into_iter().map(product_spec).collect()
}

/// The elementary-abelian-by-prime group `∏ (Z_p)^a` of order `n`.
pub fn elementary_product(n: u64) -> GroupSpec {
    let parts: Vec<GroupSpec> =
        factor(n).into_iter().map(|(p, a)| GroupSpec::AbelianP { p, partition: vec![1; a as usize] }).collect();
    if parts.is_empty() {
        GroupSpec::Cyclic(1)
    } else {
        product_spec(parts)
    }
}

/// Table of a permutation group given by its elements (each a permutation
/// of `0..k`), composing left to right.
fn permutation_table(elements: &[Vec<usize>]) -> CayleyTable {
    let index: BTreeMap<&Vec<usize>, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let id: Vec<usize> = (0..elements[0].len()).collect();
    let rows: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| {
                    let c: Vec<usize> = (0..a.len()).map(|i| b[a[i]]).collect();
                    index[&c]
                })
                .collect()
        })
        .collect();
    CayleyTable::from_rows(&rows, index[&id]).unwrap()
}

pub fn symmetric_group(k: usize) -> CayleyTable {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..k {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out.sort();
        out
    }
    permutation_table(&perms(k))
}

/// Dihedral group of order `2m`: element `r^i s^j` has index `2i + j`.
pub fn dihedral(m: usize) -> CayleyTable {
    let idx = |i: usize, j: usize| 2 * (i % m) + j;
    let rows: Vec<Vec<usize>> = (0..2 * m)
        .map(|x| {
            let (i1, j1) = (x / 2, x % 2);
            (0..2 * m)
                .map(|y| {
                    let (i2, j2) = (y / 2, y % 2);
                    // r^i1 s^j1 r^i2 s^j2 = r^(i1 ± i2) s^(j1+j2)
                    let i = if j1 == 0 { i1 + i2 } else { i1 + m - i2 };
                    idx(i, (j1 + j2) % 2)
                })
                .collect()
        })
        .collect();
    CayleyTable::from_rows(&rows, 0).unwrap()
}

pub const D8: &str = "polycyclic:2^[1,2];pow=[0,0]|[0,0];conj=[0,3]";
pub const Q8: &str = "polycyclic:2^[1,2];pow=[0,2]|[0,0];conj=[0,3]";

pub fn build(spec: &GroupSpec) -> CayleyTable {
    build_group(spec, &GroupLimits::default()).unwrap()
}

pub fn build_str(spec: &str) -> CayleyTable {
    build(&GroupSpec::parse(spec).unwrap())
}

pub fn reduced(t: &CayleyTable) -> ReducedGraph {
    reduce(&build_directed_power_graph(t)).unwrap().without_members()
}

/// Order of `x` by repeated multiplication.
pub fn element_order(t: &CayleyTable, x: usize) -> usize {
    let mut y = x;
    let mut k = 1;
    while y != t.identity() {
        y = t.mul(y, x);
        k += 1;
    }
    k
}

/// Independent colour-isomorphism check of `map: a -> b`.
pub fn check_color_iso(a: &ReducedGraph, b: &ReducedGraph, map: &[usize]) -> bool {
    let k = a.len();
    if b.len() != k || map.len() != k {
        return false;
    }
    let mut sorted = map.to_vec();
    sorted.sort_unstable();
    if sorted != (0..k).collect::<Vec<_>>() {
        return false;
    }
    for c in 0..k {
        if a.color(c) != b.color(map[c]) || a.size(c) != b.size(map[c]) {
            return false;
        }
        for d in 0..k {
            if a.has_edge(c, d) != b.has_edge(map[c], map[d]) {
                return false;
            }
        }
    }
    true
}

/// A fixed set of non-abelian groups from independent constructions, with
/// names: symmetric, dihedral, Heisenberg, quaternion, and some products.
pub fn nonabelian_zoo(max_order: usize) -> Vec<(String, CayleyTable)> {
    let mut out = Vec::new();
    for k in [3, 4] {
        let t = symmetric_group(k);
        if t.order() <= max_order {
            out.push((format!("S{k}"), t));
        }
    }
    for m in 3..=max_order / 2 {
        out.push((format!("D{}", 2 * m), dihedral(m)));
    }
    for (name, spec) in [("Q8", Q8), ("heisenberg:3", "heisenberg:3"), ("heisenberg:5", "heisenberg:5")] {
        let t = build_str(spec);
        if t.order() <= max_order {
            out.push((name.to_string(), t));
        }
    }
    let s3 = symmetric_group(3);
    for k in 2..=max_order / 6 {
        out.push((format!("S3xZ{k}"), CayleyTable::direct_product(&[&s3, &CayleyTable::cyclic(k)])));
    }
    let q8 = build_str(Q8);
    for k in 2..=max_order / 8 {
        out.push((format!("Q8xZ{k}"), CayleyTable::direct_product(&[&q8, &CayleyTable::cyclic(k)])));
    }
    out
}
