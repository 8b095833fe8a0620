use num_integer::Integer;

use crate::graph::ColoredDigraph;
use crate::group::CayleyTable;

/// `DPow(G)`: arc `x -> y` whenever `y` is a positive power of `x`, the
/// self-loop included, so out-degree equals element order.
pub fn build_directed_power_graph(g: &CayleyTable) -> ColoredDigraph {
    let adj = (0..g.order()).map(|x| g.cyclic_subgroup(x)).collect();
    ColoredDigraph::from_adjacency(true, vec![0; g.order()], adj)
}

/// `Pow(G)`: `x ~ y` iff one is a power of the other, loop-free.
pub fn build_power_graph(g: &CayleyTable) -> ColoredDigraph {
    build_directed_power_graph(g).to_undirected()
}

/// `Pow(Z_n)` without a multiplication table: residues `x, y` are adjacent
/// iff one of their additive orders divides the other.
pub fn cyclic_power_graph(n: u64) -> ColoredDigraph {
    let orders: Vec<u64> = (0..n).map(|k| n / k.gcd(&n)).collect();
    power_graph_from_orders(&orders)
}

/// Power graph of a cyclic group given the element orders of its members
/// (any subset of a cyclic group works, since there adjacency is order
/// divisibility).
pub fn power_graph_from_orders(orders: &[u64]) -> ColoredDigraph {
    let n = orders.len();
    // Group vertices by order so the quadratic scan runs over distinct orders.
    let mut distinct: Vec<u64> = orders.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut by_order: Vec<Vec<usize>> = vec![Vec::new(); distinct.len()];
    for (v, o) in orders.iter().enumerate() {
        by_order[distinct.binary_search(o).unwrap()].push(v);
    }
    let mut adj = vec![Vec::new(); n];
    for (i, &a) in distinct.iter().enumerate() {
        let mut nbrs: Vec<usize> = Vec::new();
        for (j, &b) in distinct.iter().enumerate() {
            if a % b == 0 || b % a == 0 {
                nbrs.extend(&by_order[j]);
            }
        }
        nbrs.sort_unstable();
        for &v in &by_order[i] {
            adj[v] = nbrs.iter().copied().filter(|&w| w != v).collect();
        }
    }
    ColoredDigraph::from_adjacency(false, vec![0; n], adj)
}
