use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{PrimInt, Signed};

use crate::error::{Error, Result};
use crate::graph::cyclic_power_graph;
use crate::number::units;

/// Undirected graph with integer edge weights. Edges are stored explicitly,
/// so an edge of weight zero is distinct from a non-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph<W> {
    n: usize,
    weights: BTreeMap<(usize, usize), W>,
}

impl<W: PrimInt + Signed> WeightedGraph<W> {
    pub fn new(n: usize) -> Self {
        WeightedGraph { n, weights: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn key(u: usize, v: usize) -> (usize, usize) {
        (u.min(v), u.max(v))
    }

    pub fn set_weight(&mut self, u: usize, v: usize, w: W) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!("invalid weighted edge ({u}, {v})")));
        }
        self.weights.insert(Self::key(u, v), w);
        Ok(())
    }

    /// Weight of `{u, v}`, zero when absent.
    pub fn weight(&self, u: usize, v: usize) -> W {
        self.weights.get(&Self::key(u, v)).copied().unwrap_or_else(W::zero)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weights.contains_key(&Self::key(u, v))
    }

    /// Edges `(u, v, w)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, W)> + '_ {
        self.weights.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    /// Total weight of edges with endpoints on different sides.
    pub fn cut_value(&self, side: &[bool]) -> W {
        self.edges().filter(|&(u, v, _)| side[u] != side[v]).fold(W::zero(), |acc, (_, _, w)| acc + w)
    }
}

/// Places `W` on `n` generators of `Z_{n^2}` (smallest residues coprime to
/// `n`), which form a clique of `Pow(Z_{n^2})`; every other power-graph edge
/// gets weight 0. Returns the instance and the vertex map.
pub fn maxcut_embed<W: PrimInt + Signed>(w: &WeightedGraph<W>) -> Result<(WeightedGraph<W>, Vec<usize>)> {
    let n = w.len();
    if n < 2 {
        return Err(Error::InvalidGraph("max-cut embedding needs at least 2 vertices".into()));
    }
    let modulus = (n * n) as u64;
    let map: Vec<usize> = units(modulus).into_iter().take(n).map(|u| u as usize).collect();
    debug_assert!(map.iter().all(|&u| (u as u64).gcd(&modulus) == 1));
    let pow = cyclic_power_graph(modulus);
    let mut out = WeightedGraph::new(modulus as usize);
    for (u, v) in pow.edges() {
        out.set_weight(u, v, W::zero())?;
    }
    for (u, v, x) in w.edges() {
        let (a, b) = (map[u], map[v]);
        if !out.has_edge(a, b) {
            return Err(Error::EmbeddingMismatch(format!("generators {a} and {b} are not adjacent")));
        }
        out.set_weight(a, b, x)?;
    }
    Ok((out, map))
}

pub const MAXCUT_BRUTEFORCE_MAX_VERTICES: usize = 26;

/// Exact maximum cut. Vertex `n-1` stays on side `false`; the other sides run
/// through a Gray code so each step updates the value by one vertex flip.
pub fn maxcut_bruteforce<W: PrimInt + Signed>(w: &WeightedGraph<W>) -> Result<(W, Vec<bool>)> {
    let n = w.len();
    if n > MAXCUT_BRUTEFORCE_MAX_VERTICES {
        return Err(Error::LimitExceeded {
            what: "vertices for exhaustive max-cut",
            value: n as u128,
            limit: MAXCUT_BRUTEFORCE_MAX_VERTICES as u128,
        });
    }
    if n <= 1 {
        return Ok((W::zero(), vec![false; n]));
    }
    let mut adj: Vec<Vec<(usize, W)>> = vec![Vec::new(); n];
    for (u, v, x) in w.edges() {
        if !x.is_zero() {
            adj[u].push((v, x));
            adj[v].push((u, x));
        }
    }
    let mut side = vec![false; n];
    let mut value = W::zero();
    let mut best = (W::zero(), side.clone());
    let free = n - 1;
    for step in 1u64..(1u64 << free) {
        let v = step.trailing_zeros() as usize;
        // flipping v: edges to the same side start crossing, crossing ones stop
        let delta = adj[v].iter().fold(W::zero(), |acc, &(u, x)| if side[u] == side[v] { acc + x } else { acc - x });
        side[v] = !side[v];
        value = value + delta;
        if value > best.0 {
            best = (value, side.clone());
        }
    }
    Ok(best)
}
