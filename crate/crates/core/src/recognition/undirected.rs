use crate::error::{Error, Result};
use crate::graph::{build_power_graph, undirected_isomorphic, ColoredDigraph};
use crate::group::{CayleyTable, GroupSpec};
use crate::number::factorize;

use super::{Candidate, RecognitionResult, Recognizer, Target};

pub const UNDIRECTED_MAX_VERTICES: usize = 128;

fn degree_sequence(g: &ColoredDigraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.len()).map(|v| g.out_degree(v)).collect();
    d.sort_unstable();
    d
}

/// Exhaustive front-end for undirected power graphs: every group of order
/// `|V|` in the target class, assembled from per-prime candidates, is built
/// and its power graph compared with `g` (colours ignored). The witness map
/// sends the group's elements to vertices of `g`.
pub fn recognize_undirected(g: &ColoredDigraph, target: Target, rec: &Recognizer) -> Result<RecognitionResult> {
    if g.is_directed() {
        return Err(Error::InvalidGraph("undirected recognition needs an undirected graph".into()));
    }
    let n = g.len();
    if n > UNDIRECTED_MAX_VERTICES {
        return Err(Error::LimitExceeded {
            what: "vertices for undirected recognition",
            value: n as u128,
            limit: UNDIRECTED_MAX_VERTICES as u128,
        });
    }
    if n == 0 {
        return Ok(RecognitionResult::no("empty graph"));
    }
    if n == 1 {
        return Ok(RecognitionResult::yes(GroupSpec::Cyclic(1), None, vec![0]));
    }
    let lists: Vec<std::sync::Arc<Vec<Candidate>>> =
        factorize(&(n as u64)).into_iter().map(|(p, a)| rec.candidates(p, a, target)).collect::<Result<_>>()?;
    let degrees = degree_sequence(g);
    let edges = g.edge_count();
    let mut pick = vec![0usize; lists.len()];
    loop {
        let chosen: Vec<&Candidate> = pick.iter().zip(&lists).map(|(&i, l)| &l[i]).collect();
        let table = if chosen.len() == 1 {
            chosen[0].table.clone()
        } else {
            CayleyTable::direct_product(&chosen.iter().map(|c| &c.table).collect::<Vec<_>>())
        };
        let pow = build_power_graph(&table);
        if pow.edge_count() == edges && degree_sequence(&pow) == degrees {
            if let Some(map) = undirected_isomorphic(&pow, g, true) {
                let spec = if chosen.len() == 1 {
                    chosen[0].spec.clone()
                } else {
                    GroupSpec::DirectProduct(chosen.iter().map(|c| c.spec.clone()).collect())
                };
                return Ok(RecognitionResult::yes(spec, None, map));
            }
        }
        // odometer over candidate choices, last prime fastest
        let mut pos = pick.len();
        loop {
            if pos == 0 {
                return Ok(RecognitionResult::no(format!("no {target} group of order {n} has this power graph")));
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < lists[pos].len() {
                break;
            }
            pick[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};
    use crate::group::GroupLimits;

    #[test]
    fn examples() {
        let rec = Recognizer::new(GroupLimits::default());
        let z12 = build_power_graph(&CayleyTable::cyclic(12));
        let res = recognize_undirected(&z12, Target::Abelian, &rec).unwrap();
        assert!(res.verdict);
        assert!(recognize_undirected(&complete_graph(7), Target::Abelian, &rec).unwrap().verdict);
        assert!(!recognize_undirected(&cycle_graph(5), Target::Abelian, &rec).unwrap().verdict);
        // the map is an isomorphism onto the input
        let spec = res.spec.unwrap();
        let t = crate::group::build_group(&spec, &GroupLimits::default()).unwrap();
        let pow = build_power_graph(&t);
        let map = res.iso.unwrap();
        for (u, v) in pow.edges() {
            assert!(z12.has_edge(map[u], map[v]));
        }
    }
}
