use std::collections::HashMap;

use crate::graph::ColoredDigraph;

/// Classes of vertices with equal closed out-neighbourhood, ordered by their
/// smallest member.
pub fn closed_twin_classes(d: &ColoredDigraph) -> Vec<Vec<usize>> {
    group_by_key(d.len(), |v| closed(d.neighbors(v), v))
}

fn closed(list: &[usize], v: usize) -> Vec<usize> {
    let mut c = list.to_vec();
    if let Err(i) = c.binary_search(&v) {
        c.insert(i, v);
    }
    c
}

fn group_by_key<K: std::hash::Hash + Eq>(n: usize, key: impl Fn(usize) -> K) -> Vec<Vec<usize>> {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let id = *index.entry(key(v)).or_insert_with(|| {
            out.push(Vec::new());
            out.len() - 1
        });
        out[id].push(v);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    /// True twins (equal closed neighbourhoods); singletons use this too.
    Clique,
    /// False twins (equal open neighbourhoods, pairwise non-adjacent).
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinTypes {
    pub types: Vec<Vec<usize>>,
    pub kinds: Vec<TwinKind>,
    pub type_of: Vec<usize>,
}

impl TwinTypes {
    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }
}

/// Neighbourhood-diversity partition of an undirected graph: `u` and `v`
/// share a type iff `N(u) \ {v} = N(v) \ {u}`.
///
/// A vertex cannot have both a true and a false twin, so the types are the
/// non-trivial closed-neighbourhood classes, the non-trivial
/// open-neighbourhood classes, and singletons.
pub fn twin_types(g: &ColoredDigraph) -> TwinTypes {
    let n = g.len();
    let by_closed = group_by_key(n, |v| closed(g.neighbors(v), v));
    let by_open = group_by_key(n, |v| g.neighbors(v).to_vec());
    let mut type_of = vec![usize::MAX; n];
    let mut kind_of = vec![TwinKind::Clique; n];
    let mut leader = vec![0; n];
    for class in &by_closed {
        for &v in class {
            leader[v] = class[0];
        }
    }
    for class in by_open.iter().filter(|c| c.len() > 1) {
        for &v in class {
            leader[v] = class[0];
            kind_of[v] = TwinKind::Independent;
        }
    }
    let mut types: Vec<Vec<usize>> = Vec::new();
    let mut kinds = Vec::new();
    for v in 0..n {
        let l = leader[v];
        if type_of[l] == usize::MAX {
            type_of[l] = types.len();
            types.push(Vec::new());
            kinds.push(kind_of[v]);
        }
        type_of[v] = type_of[l];
        types[type_of[v]].push(v);
    }
    TwinTypes { types, kinds, type_of }
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &ColoredDigraph) -> Vec<Vec<usize>> {
    let n = g.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Whether the closed neighbourhood of `v` covers `component`.
pub fn is_dominating(g: &ColoredDigraph, component: &[usize], v: usize) -> bool {
    component.iter().all(|&w| w == v || g.has_edge(v, w))
}

/// Whether `vertices` induce a connected subgraph (the empty set does not).
pub fn is_connected_set(g: &ColoredDigraph, vertices: &[usize]) -> bool {
    if vertices.is_empty() {
        return false;
    }
    let mut inside: HashMap<usize, bool> = vertices.iter().map(|&v| (v, false)).collect();
    let mut stack = vec![vertices[0]];
    inside.insert(vertices[0], true);
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if let Some(flag) = inside.get_mut(&w) {
                if !*flag {
                    *flag = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
    }
    reached == inside.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_directed_power_graph, complete_graph, cyclic_power_graph};
    use crate::group::CayleyTable;

    #[test]
    fn closed_twins_of_dpow() {
        let d = build_directed_power_graph(&CayleyTable::cyclic(6));
        assert_eq!(closed_twin_classes(&d), vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        let z2 = CayleyTable::cyclic(2);
        let v4 = build_directed_power_graph(&CayleyTable::direct_product(&[&z2, &z2]));
        assert_eq!(closed_twin_classes(&v4).len(), 4);
        let one = build_directed_power_graph(&CayleyTable::cyclic(1));
        assert_eq!(closed_twin_classes(&one), vec![vec![0]]);
    }

    #[test]
    fn twin_types_examples() {
        let k = twin_types(&complete_graph(5));
        assert_eq!(k.types, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(k.kinds, vec![TwinKind::Clique]);

        let p6 = twin_types(&cyclic_power_graph(6));
        assert_eq!(p6.types, vec![vec![0, 1, 5], vec![2, 4], vec![3]]);
        assert_eq!(p6.kinds[0], TwinKind::Clique);
        assert_eq!(p6.kinds[1], TwinKind::Clique);

        let star = ColoredDigraph::from_edges(false, vec![0; 4], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = twin_types(&star);
        assert_eq!(s.types, vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(s.kinds, vec![TwinKind::Clique, TwinKind::Independent]);
    }

    #[test]
    fn components_and_domination() {
        let g = ColoredDigraph::from_edges(false, vec![0; 5], &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert_eq!(connected_components(&g), vec![vec![0, 1, 2], vec![3, 4]]);

        let star = ColoredDigraph::from_edges(false, vec![0; 4], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_dominating(&star, &[0, 1, 2, 3], 0));
        assert!(!is_dominating(&star, &[0, 1, 2, 3], 1));

        let p6 = cyclic_power_graph(6);
        let rest = p6.induced_subgraph(&[2, 3, 4]);
        let comps = connected_components(&rest);
        assert_eq!(comps, vec![vec![0, 2], vec![1]]);
        assert!(is_dominating(&rest, &comps[0], 0));
    }

    #[test]
    fn connected_sets() {
        let path = ColoredDigraph::from_edges(false, vec![0; 3], &[(0, 1), (1, 2)]).unwrap();
        assert!(is_connected_set(&path, &[0, 1, 2]));
        assert!(!is_connected_set(&path, &[0, 2]));
        assert!(is_connected_set(&path, &[2]));
    }
}
