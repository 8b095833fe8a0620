use crate::error::{Error, Result};
use crate::graph::twins::closed_twin_classes;
use crate::graph::ColoredDigraph;

/// Quotient of a directed graph by its closed twin classes.
///
/// Class colour is the size of the closed out-neighbourhood shared by the
/// members (the out-degree in a directed power graph, where loops are
/// stored). Edges join distinct classes only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedGraph {
    colors: Vec<u64>,
    sizes: Vec<usize>,
    members: Option<Vec<Vec<usize>>>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl ReducedGraph {
    /// A reduced graph given directly by classes and arcs (no source graph).
    pub fn from_parts(colors: Vec<u64>, sizes: Vec<usize>, edges: &[(usize, usize)]) -> Result<Self> {
        let k = colors.len();
        if sizes.len() != k {
            return Err(Error::InvalidGraph("class colour and size lists differ in length".into()));
        }
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidGraph(format!("class {i} is empty")));
        }
        let mut out = vec![Vec::new(); k];
        for &(u, v) in edges {
            if u >= k || v >= k {
                return Err(Error::InvalidGraph(format!("class edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("reduced graph has a loop at class {u}")));
            }
            out[u].push(v);
        }
        Ok(Self::assemble(colors, sizes, None, out))
    }

    fn assemble(colors: Vec<u64>, sizes: Vec<usize>, members: Option<Vec<Vec<usize>>>, mut out: Vec<Vec<usize>>) -> Self {
        let mut inn = vec![Vec::new(); colors.len()];
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            for &v in list.iter() {
                inn[v].push(u);
            }
        }
        ReducedGraph { colors, sizes, members, out, inn }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, c: usize) -> u64 {
        self.colors[c]
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }

    pub fn size(&self, c: usize) -> usize {
        self.sizes[c]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Total number of source vertices.
    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn members(&self) -> Option<&[Vec<usize>]> {
        self.members.as_deref()
    }

    pub fn out(&self, c: usize) -> &[usize] {
        &self.out[c]
    }

    pub fn inn(&self, c: usize) -> &[usize] {
        &self.inn[c]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.out.iter().enumerate().flat_map(|(u, l)| l.iter().map(move |&v| (u, v))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v && u < self.len() && v < self.len());
        match self.out[u].binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.out[u].insert(i, v);
                let j = self.inn[v].binary_search(&u).unwrap_err();
                self.inn[v].insert(j, u);
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.out[u].binary_search(&v) {
            Ok(i) => {
                self.out[u].remove(i);
                let j = self.inn[v].binary_search(&u).unwrap();
                self.inn[v].remove(j);
                true
            }
            Err(_) => false,
        }
    }

    /// Subgraph induced on `classes` (in that order); members are kept.
    pub fn induced(&self, classes: &[usize]) -> ReducedGraph {
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &c) in classes.iter().enumerate() {
            pos[c] = i;
        }
        let out = classes
            .iter()
            .map(|&c| self.out[c].iter().filter(|&&d| pos[d] != usize::MAX).map(|&d| pos[d]).collect())
            .collect();
        let members = self.members.as_ref().map(|m| classes.iter().map(|&c| m[c].clone()).collect());
        Self::assemble(
            classes.iter().map(|&c| self.colors[c]).collect(),
            classes.iter().map(|&c| self.sizes[c]).collect(),
            members,
            out,
        )
    }

    /// Whether the class graph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let k = self.len();
        let mut indeg: Vec<usize> = (0..k).map(|c| self.inn[c].len()).collect();
        let mut stack: Vec<usize> = (0..k).filter(|&c| indeg[c] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for &v in &self.out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
        seen == k
    }

    /// Drops member lists, leaving the abstract coloured class graph.
    pub fn without_members(mut self) -> Self {
        self.members = None;
        self
    }
}

/// Reduces a directed graph; classes are ordered by smallest member.
pub fn reduce(d: &ColoredDigraph) -> Result<ReducedGraph> {
    if !d.is_directed() {
        return Err(Error::InvalidGraph("reduction needs a directed graph".into()));
    }
    let classes = closed_twin_classes(d);
    let mut class_of = vec![0; d.len()];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    let mut colors = Vec::with_capacity(classes.len());
    let mut out = vec![Vec::new(); classes.len()];
    for (i, c) in classes.iter().enumerate() {
        let v = c[0];
        let loop_present = d.has_edge(v, v);
        colors.push((d.out_degree(v) + usize::from(!loop_present)) as u64);
        for &w in d.neighbors(v) {
            if class_of[w] != i {
                out[i].push(class_of[w]);
            }
        }
    }
    let sizes = classes.iter().map(Vec::len).collect();
    Ok(ReducedGraph::assemble(colors, sizes, Some(classes), out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_directed_power_graph;
    use crate::group::CayleyTable;

    #[test]
    fn prime_cyclic_reduces_to_an_arc() {
        let r = reduce(&build_directed_power_graph(&CayleyTable::cyclic(7))).unwrap();
        assert_eq!(r.colors(), &[1, 7]);
        assert_eq!(r.sizes(), &[1, 6]);
        assert_eq!(r.edges(), vec![(1, 0)]);
    }

    #[test]
    fn cyclic_six_divisor_lattice() {
        let r = reduce(&build_directed_power_graph(&CayleyTable::cyclic(6))).unwrap();
        // classes {0}, {1,5}, {2,4}, {3}
        assert_eq!(r.colors(), &[1, 6, 3, 2]);
        assert_eq!(r.edges(), vec![(1, 0), (1, 2), (1, 3), (2, 0), (3, 0)]);
        assert!(r.is_acyclic());
    }

    #[test]
    fn trivial_group_reduces_to_one_class() {
        let r = reduce(&build_directed_power_graph(&CayleyTable::cyclic(1))).unwrap();
        assert_eq!(r.colors(), &[1]);
        assert_eq!(r.edge_count(), 0);
    }

    #[test]
    fn loopless_inputs_use_closed_neighbourhoods() {
        let d = ColoredDigraph::from_edges(true, vec![0; 3], &[(1, 0), (2, 0), (1, 2), (2, 1)]).unwrap();
        let r = reduce(&d).unwrap();
        assert_eq!(r.colors(), &[1, 3]);
        assert_eq!(r.sizes(), &[1, 2]);
    }

    #[test]
    fn edits_and_induced_subgraphs() {
        let mut r = reduce(&build_directed_power_graph(&CayleyTable::cyclic(6))).unwrap();
        assert!(r.add_edge(2, 3));
        assert!(r.has_edge(2, 3));
        assert_eq!(r.inn(3), &[1, 2]);
        assert!(r.remove_edge(2, 3));
        let sub = r.induced(&[0, 3]);
        assert_eq!(sub.colors(), &[1, 2]);
        assert_eq!(sub.edges(), vec![(1, 0)]);
    }
}
