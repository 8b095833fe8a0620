//! Isomorphism of coloured (di)graphs by colour refinement and
//! individualization.
//!
//! Both graphs are refined jointly, so equal colour ids mean equal refinement
//! history on either side. Branching always individualizes the lowest-indexed
//! vertex of the first smallest non-trivial cell on the left and tries the
//! right-hand vertices of that cell in increasing order, which makes the
//! returned mapping deterministic.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{ColoredDigraph, ReducedGraph};

/// Arc-labelled-free structure the search runs on.
#[derive(Debug, Clone)]
pub(crate) struct Structure {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    directed: bool,
}

impl Structure {
    pub(crate) fn from_digraph(g: &ColoredDigraph) -> Self {
        let inn = if g.is_directed() { g.in_neighbors() } else { g.adjacency().to_vec() };
        Structure { out: g.adjacency().to_vec(), inn, directed: g.is_directed() }
    }

    pub(crate) fn from_reduced(r: &ReducedGraph) -> Self {
        Structure {
            out: (0..r.len()).map(|c| r.out(c).to_vec()).collect(),
            inn: (0..r.len()).map(|c| r.inn(c).to_vec()).collect(),
            directed: true,
        }
    }

    fn len(&self) -> usize {
        self.out.len()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }
}

/// Maps arbitrary comparable labels on both sides to shared dense ids.
fn joint_ids<L: Ord + Clone>(a: &[L], b: &[L]) -> (Vec<u32>, Vec<u32>) {
    let mut distinct: Vec<L> = a.iter().chain(b).cloned().collect();
    distinct.sort();
    distinct.dedup();
    let id = |l: &L| distinct.binary_search(l).unwrap() as u32;
    (a.iter().map(id).collect(), b.iter().map(id).collect())
}

fn histogram(c: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

fn cell_count(ca: &[u32], cb: &[u32]) -> usize {
    let mut all: Vec<u32> = ca.iter().chain(cb).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

type Signature = (u32, Vec<u32>, Vec<u32>);

fn signature(s: &Structure, c: &[u32], v: usize) -> Signature {
    let mut o: Vec<u32> = s.out[v].iter().map(|&w| c[w]).collect();
    o.sort_unstable();
    let i = if s.directed {
        let mut i: Vec<u32> = s.inn[v].iter().map(|&w| c[w]).collect();
        i.sort_unstable();
        i
    } else {
        Vec::new()
    };
    (c[v], o, i)
}

/// Joint 1-dimensional refinement to the coarsest equitable colouring.
/// Returns false as soon as the colour histograms differ.
fn refine(sa: &Structure, sb: &Structure, ca: &mut Vec<u32>, cb: &mut Vec<u32>) -> bool {
    let mut cells = cell_count(ca, cb);
    loop {
        if histogram(ca) != histogram(cb) {
            return false;
        }
        let siga: Vec<Signature> = (0..sa.len()).map(|v| signature(sa, ca, v)).collect();
        let sigb: Vec<Signature> = (0..sb.len()).map(|v| signature(sb, cb, v)).collect();
        let (na, nb) = joint_ids(&siga, &sigb);
        *ca = na;
        *cb = nb;
        let next = cell_count(ca, cb);
        if next == cells {
            return histogram(ca) == histogram(cb);
        }
        cells = next;
    }
}

fn target_cell(c: &[u32]) -> Option<u32> {
    let h = histogram(c);
    h.iter().filter(|(_, &n)| n > 1).min_by_key(|(&id, &n)| (n, id)).map(|(&id, _)| id)
}

fn individualize(c: &[u32], v: usize) -> Vec<u32> {
    let fresh = c.iter().copied().max().unwrap_or(0) + 1;
    let mut out = c.to_vec();
    out[v] = fresh;
    out
}

fn check_map(sa: &Structure, sb: &Structure, map: &[usize]) -> bool {
    (0..sa.len()).all(|v| {
        sa.out[v].len() == sb.out[map[v]].len() && sa.out[v].iter().all(|&w| sb.has_edge(map[v], map[w]))
    })
}

fn search(sa: &Structure, sb: &Structure, mut ca: Vec<u32>, mut cb: Vec<u32>) -> Option<Vec<usize>> {
    if !refine(sa, sb, &mut ca, &mut cb) {
        return None;
    }
    match target_cell(&ca) {
        None => {
            let mut pos: HashMap<u32, usize> = HashMap::with_capacity(cb.len());
            for (w, &c) in cb.iter().enumerate() {
                pos.insert(c, w);
            }
            let map: Vec<usize> = ca.iter().map(|c| pos[c]).collect();
            check_map(sa, sb, &map).then_some(map)
        }
        Some(cell) => {
            let v = ca.iter().position(|&c| c == cell).unwrap();
            let ia = individualize(&ca, v);
            for w in (0..cb.len()).filter(|&w| cb[w] == cell) {
                if let Some(m) = search(sa, sb, ia.clone(), individualize(&cb, w)) {
                    return Some(m);
                }
            }
            None
        }
    }
}

fn isomorphism<L: Ord + Clone>(sa: &Structure, la: &[L], sb: &Structure, lb: &[L]) -> Option<Vec<usize>> {
    if sa.len() != sb.len() || sa.directed != sb.directed {
        return None;
    }
    let (ca, cb) = joint_ids(la, lb);
    search(sa, sb, ca, cb)
}

/// A class bijection `R1 -> R2` preserving colours, class sizes and arcs in
/// both directions, if one exists.
pub fn color_isomorphic(r1: &ReducedGraph, r2: &ReducedGraph) -> Option<Vec<usize>> {
    if r1.len() != r2.len() || r1.edge_count() != r2.edge_count() {
        return None;
    }
    let la: Vec<(u64, usize)> = (0..r1.len()).map(|c| (r1.color(c), r1.size(c))).collect();
    let lb: Vec<(u64, usize)> = (0..r2.len()).map(|c| (r2.color(c), r2.size(c))).collect();
    isomorphism(&Structure::from_reduced(r1), &la, &Structure::from_reduced(r2), &lb)
}

/// Vertex bijection between two undirected graphs, optionally preserving
/// colours.
pub fn undirected_isomorphic(g1: &ColoredDigraph, g2: &ColoredDigraph, ignore_colors: bool) -> Option<Vec<usize>> {
    if g1.is_directed() || g2.is_directed() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    colored_isomorphism(g1, g2, ignore_colors)
}

/// Colour-preserving isomorphism of two graphs of the same kind.
pub fn directed_isomorphic(d1: &ColoredDigraph, d2: &ColoredDigraph) -> Option<Vec<usize>> {
    if d1.is_directed() != d2.is_directed() || d1.edge_count() != d2.edge_count() {
        return None;
    }
    colored_isomorphism(d1, d2, false)
}

fn colored_isomorphism(g1: &ColoredDigraph, g2: &ColoredDigraph, ignore_colors: bool) -> Option<Vec<usize>> {
    let labels = |g: &ColoredDigraph| -> Vec<u64> {
        if ignore_colors {
            vec![0; g.len()]
        } else {
            g.colors().to_vec()
        }
    };
    isomorphism(&Structure::from_digraph(g1), &labels(g1), &Structure::from_digraph(g2), &labels(g2))
}

/// Limits for automorphism counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutLimits {
    /// Up to this many vertices every automorphism is enumerated.
    pub exhaustive_up_to: usize,
    /// Hard bound on the vertex count.
    pub max_vertices: usize,
}

impl Default for AutLimits {
    fn default() -> Self {
        AutLimits { exhaustive_up_to: 12, max_vertices: 256 }
    }
}

/// `|Aut(G)|` of a coloured graph (colours must be preserved).
pub fn automorphism_count(g: &ColoredDigraph, limits: &AutLimits) -> Result<BigUint> {
    let n = g.len();
    if n > limits.max_vertices {
        return Err(Error::LimitExceeded {
            what: "vertex count for automorphism counting",
            value: n as u128,
            limit: limits.max_vertices as u128,
        });
    }
    if n <= limits.exhaustive_up_to {
        return Ok(BigUint::from(automorphism_count_exhaustive(g)));
    }
    Ok(automorphism_count_by_orbits(g))
}

/// Counts automorphisms by enumerating each one, extending partial maps
/// vertex by vertex and pruning on adjacency with the vertices already
/// placed.
pub fn automorphism_count_exhaustive(g: &ColoredDigraph) -> u128 {
    let n = g.len();
    let s = Structure::from_digraph(g);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(g: &ColoredDigraph, s: &Structure, v: usize, image: &mut [usize], used: &mut [bool]) -> u128 {
        let n = image.len();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used[w] || g.color(w) != g.color(v) || s.out[w].len() != s.out[v].len() || s.inn[w].len() != s.inn[v].len() {
                continue;
            }
            if s.has_edge(v, v) != s.has_edge(w, w) {
                continue;
            }
            let consistent = (0..v).all(|u| {
                s.has_edge(u, v) == s.has_edge(image[u], w) && s.has_edge(v, u) == s.has_edge(w, image[u])
            });
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            total += rec(g, s, v + 1, image, used);
            used[w] = false;
        }
        image[v] = usize::MAX;
        total
    }
    rec(g, &s, 0, &mut image, &mut used)
}

/// Orbit–stabilizer along a base chosen by refinement:
/// `|Aut| = prod |orbit of b_i in the stabilizer of b_1..b_{i-1}|`.
pub fn automorphism_count_by_orbits(g: &ColoredDigraph) -> BigUint {
    let s = Structure::from_digraph(g);
    let (mut c, _) = joint_ids(g.colors(), g.colors());
    let mut total = BigUint::from(1u32);
    loop {
        let mut other = c.clone();
        let ok = refine(&s, &s, &mut c, &mut other);
        debug_assert!(ok);
        let Some(cell) = target_cell(&c) else {
            return total;
        };
        let members: Vec<usize> = (0..c.len()).filter(|&v| c[v] == cell).collect();
        let base = members[0];
        let fixed = individualize(&c, base);
        let mut orbit = 1u32;
        for &w in &members[1..] {
            if search(&s, &s, fixed.clone(), individualize(&c, w)).is_some() {
                orbit += 1;
            }
        }
        total *= orbit;
        c = fixed;
    }
}
