use crate::error::{Error, Result};

/// Vertex-coloured graph, directed or undirected.
///
/// Adjacency lists are sorted and duplicate-free. Undirected graphs store each
/// edge in both lists and never contain self-loops; directed graphs may.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredDigraph {
    directed: bool,
    colors: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

impl ColoredDigraph {
    /// Edgeless graph on `n` uncoloured (colour 0) vertices.
    pub fn new(n: usize, directed: bool) -> Self {
        ColoredDigraph { directed, colors: vec![0; n], adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(directed: bool, colors: Vec<u64>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = colors.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if !directed && u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u} in an undirected graph")));
            }
            adj[u].push(v);
            if !directed {
                adj[v].push(u);
            }
        }
        Ok(Self::from_adjacency(directed, colors, adj))
    }

    /// Trusted constructor; sorts and deduplicates the lists.
    pub(crate) fn from_adjacency(directed: bool, colors: Vec<u64>, mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        ColoredDigraph { directed, colors, adj }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn color(&self, v: usize) -> u64 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }

    pub fn set_colors(&mut self, colors: Vec<u64>) {
        assert_eq!(colors.len(), self.len());
        self.colors = colors;
    }

    pub fn with_colors(mut self, colors: Vec<u64>) -> Self {
        self.set_colors(colors);
        self
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Directed: number of arcs (loops included). Undirected: number of edges.
    pub fn edge_count(&self) -> usize {
        let total: usize = self.adj.iter().map(Vec::len).sum();
        if self.directed {
            total
        } else {
            total / 2
        }
    }

    /// Arcs `(u, v)` in lexicographic order; undirected edges once with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if self.directed || u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn in_neighbors(&self) -> Vec<Vec<usize>> {
        let mut inn = vec![Vec::new(); self.len()];
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                inn[v].push(u);
            }
        }
        inn
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.len();
        if u >= n || v >= n || (!self.directed && u == v) {
            return Err(Error::InvalidGraph(format!("cannot add edge ({u}, {v})")));
        }
        let inserted = insert_sorted(&mut self.adj[u], v);
        if !self.directed {
            insert_sorted(&mut self.adj[v], u);
        }
        Ok(inserted)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let removed = remove_sorted(&mut self.adj[u], v);
        if !self.directed {
            remove_sorted(&mut self.adj[v], u);
        }
        removed
    }

    /// Subgraph induced on `vertices` (in the given order) and the map from
    /// new indices to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> ColoredDigraph {
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| pos[w] != usize::MAX).map(|&w| pos[w]).collect())
            .collect();
        let colors = vertices.iter().map(|&v| self.colors[v]).collect();
        Self::from_adjacency(self.directed, colors, adj)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> ColoredDigraph {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut adj = vec![Vec::new(); n];
        let mut colors = vec![0; n];
        for v in 0..n {
            colors[perm[v]] = self.colors[v];
            adj[perm[v]] = self.adj[v].iter().map(|&w| perm[w]).collect();
        }
        Self::from_adjacency(self.directed, colors, adj)
    }

    /// Forgets directions, loops and parallel arcs.
    pub fn to_undirected(&self) -> ColoredDigraph {
        let mut adj = vec![Vec::new(); self.len()];
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u != v {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        Self::from_adjacency(false, self.colors.clone(), adj)
    }

    pub fn is_complete(&self) -> bool {
        !self.directed && self.adj.iter().all(|l| l.len() + 1 == self.len())
    }
}

fn insert_sorted(list: &mut Vec<usize>, v: usize) -> bool {
    match list.binary_search(&v) {
        Ok(_) => false,
        Err(i) => {
            list.insert(i, v);
            true
        }
    }
}

fn remove_sorted(list: &mut Vec<usize>, v: usize) -> bool {
    match list.binary_search(&v) {
        Ok(i) => {
            list.remove(i);
            true
        }
        Err(_) => false,
    }
}

/// Complete graph `K_n`, uncoloured.
pub fn complete_graph(n: usize) -> ColoredDigraph {
    let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
    ColoredDigraph::from_adjacency(false, vec![0; n], adj)
}

/// Cycle `C_n` for `n >= 3`.
pub fn cycle_graph(n: usize) -> ColoredDigraph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    ColoredDigraph::from_edges(false, vec![0; n], &edges).expect("cycle edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undirected_edges_are_symmetric() {
        let g = ColoredDigraph::from_edges(false, vec![1, 2, 3], &[(0, 1), (2, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn loops_only_in_directed_graphs() {
        assert!(ColoredDigraph::from_edges(false, vec![0], &[(0, 0)]).is_err());
        let d = ColoredDigraph::from_edges(true, vec![0], &[(0, 0)]).unwrap();
        assert_eq!(d.out_degree(0), 1);
        assert!(ColoredDigraph::from_edges(true, vec![0], &[(0, 1)]).is_err());
    }

    #[test]
    fn induced_and_relabel() {
        let g = complete_graph(4);
        let sub = g.induced_subgraph(&[3, 1]);
        assert_eq!(sub.edges(), vec![(0, 1)]);
        let c = cycle_graph(5);
        let r = c.relabel(&[4, 3, 2, 1, 0]);
        assert_eq!(r.edge_count(), 5);
        assert!(r.has_edge(4, 3));
    }

    #[test]
    fn edit_edges() {
        let mut g = ColoredDigraph::new(3, false);
        assert!(g.add_edge(0, 2).unwrap());
        assert!(!g.add_edge(2, 0).unwrap());
        assert!(g.remove_edge(2, 0));
        assert_eq!(g.edge_count(), 0);
    }
}
