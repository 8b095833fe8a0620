use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{connected_components, is_dominating};
use crate::motif::{MotifAnswer, MotifInstance};

/// Polynomial-time decision for power graphs of p-groups.
///
/// After deleting vertices coloured outside `M`, every component of a
/// p-group power graph still has a dominating vertex `v`; `M` then occurs in
/// the component iff `M - {col(v)}` is a sub-multiset of the colours of
/// `N(v)`. The witness is `v` plus, per colour, the lowest-indexed matching
/// neighbours.
pub fn occurs_pgroup_greedy(inst: &MotifInstance) -> Result<MotifAnswer> {
    let (g, map) = inst.residual();
    for comp in connected_components(&g) {
        let v = comp
            .iter()
            .copied()
            .find(|&v| is_dominating(&g, &comp, v))
            .ok_or(Error::NoDominatingVertex(map[comp[0]]))?;
        if comp.len() < inst.motif.size() {
            continue;
        }
        let mut need: BTreeMap<u64, usize> = inst.motif.counts().clone();
        *need.get_mut(&g.color(v)).expect("residual colours lie in M") -= 1;
        let mut witness = vec![map[v]];
        for &w in g.neighbors(v) {
            if let Some(k) = need.get_mut(&g.color(w)) {
                if *k > 0 {
                    *k -= 1;
                    witness.push(map[w]);
                }
            }
        }
        if need.values().all(|&k| k == 0) {
            return Ok(MotifAnswer::found(witness));
        }
    }
    Ok(MotifAnswer::absent())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, ColoredDigraph};
    use crate::motif::Motif;

    fn star() -> ColoredDigraph {
        ColoredDigraph::from_edges(false, vec![1, 2, 2, 3], &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn run(g: ColoredDigraph, m: &str) -> Result<MotifAnswer> {
        occurs_pgroup_greedy(&MotifInstance::new(g, m.parse::<Motif>().unwrap()).unwrap())
    }

    #[test]
    fn klein_star() {
        assert!(run(star(), "1,2,3").unwrap().occurs);
        assert!(!run(star(), "2,3").unwrap().occurs);
        assert!(run(star(), "1,2,2").unwrap().occurs);
    }

    #[test]
    fn complete_graphs_always_match() {
        let g = complete_graph(8).with_colors(vec![1, 2, 2, 3, 4, 4, 4, 5]);
        assert!(run(g.clone(), "4,4,2,5").unwrap().occurs);
        assert!(!run(g, "5,5").unwrap().occurs);
    }

    #[test]
    fn promise_violation_is_reported() {
        let c = cycle_graph(5).with_colors(vec![1; 5]);
        assert!(matches!(run(c, "1,1"), Err(Error::NoDominatingVertex(_))));
    }
}
