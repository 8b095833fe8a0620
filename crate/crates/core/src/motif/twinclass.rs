use crate::error::{Error, Result};
use crate::graph::{twin_types, TwinKind};
use crate::motif::flow::BoundedFlow;
use crate::motif::{MotifAnswer, MotifInstance, MotifLimits};

/// Exponential only in the number of twin types of the motif-coloured
/// subgraph.
///
/// Vertices of one type are interchangeable up to colour, so an occurrence
/// is determined by the set `T` of types it touches and how many vertices of
/// each colour it takes from each type. `T` must be connected in the type
/// quotient; a lone independent type can contribute a single vertex only.
/// For each candidate `T` (in increasing bitmask order) a circulation with
/// lower bounds decides whether every type can give at least one vertex while
/// colour demands are met exactly.
pub fn occurs_twinclass(inst: &MotifInstance, limits: &MotifLimits) -> Result<MotifAnswer> {
    let (g, map) = inst.residual();
    let types = twin_types(&g);
    let k = types.len();
    if k > limits.max_types || k > 63 {
        return Err(Error::LimitExceeded { what: "twin types", value: k as u128, limit: limits.max_types as u128 });
    }
    let size = inst.motif.size();
    if size > g.len() {
        return Ok(MotifAnswer::absent());
    }
    let palette: Vec<u64> = inst.motif.counts().keys().copied().collect();
    let demand: Vec<i64> = inst.motif.counts().values().map(|&m| m as i64).collect();
    // supply[t][c]: vertices of colour palette[c] in type t
    let mut supply = vec![vec![0i64; palette.len()]; k];
    for (t, members) in types.types.iter().enumerate() {
        for &v in members {
            supply[t][palette.binary_search(&g.color(v)).unwrap()] += 1;
        }
    }
    let mut quotient = vec![0u64; k];
    for (t, members) in types.types.iter().enumerate() {
        for &w in g.neighbors(members[0]) {
            let u = types.type_of[w];
            if u != t {
                quotient[t] |= 1 << u;
            }
        }
    }
    let connected = |mask: u64| -> bool {
        let first = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << first;
        let mut frontier = seen;
        while frontier != 0 {
            let t = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = quotient[t] & mask & !seen;
            seen |= next;
            frontier |= next;
        }
        seen == mask
    };

    for mask in 1u64..(1u64 << k) {
        let chosen: Vec<usize> = (0..k).filter(|&t| mask >> t & 1 == 1).collect();
        if chosen.len() > size {
            continue;
        }
        let capacity: usize = chosen.iter().map(|&t| types.types[t].len()).sum();
        if capacity < size || !connected(mask) {
            continue;
        }
        let single = chosen.len() == 1 && types.kinds[chosen[0]] == TwinKind::Independent && types.types[chosen[0]].len() > 1;
        if single && size != 1 {
            continue;
        }
        if let Some(take) = assign(&chosen, &types.types, &supply, &demand, size) {
            let mut witness = Vec::with_capacity(size);
            for (i, &t) in chosen.iter().enumerate() {
                for (c, &want) in take[i].iter().enumerate() {
                    let picked = types.types[t]
                        .iter()
                        .copied()
                        .filter(|&v| g.color(v) == palette[c])
                        .take(want as usize)
                        .map(|v| map[v]);
                    witness.extend(picked);
                }
            }
            return Ok(MotifAnswer::found(witness));
        }
    }
    Ok(MotifAnswer::absent())
}

/// Per chosen type, how many vertices of each colour to take; `None` if no
/// assignment uses every type while matching the demand.
fn assign(chosen: &[usize], types: &[Vec<usize>], supply: &[Vec<i64>], demand: &[i64], size: usize) -> Option<Vec<Vec<i64>>> {
    let q = demand.len();
    let (s, t) = (0, 1);
    let type_node = |i: usize| 2 + i;
    let color_node = |c: usize| 2 + chosen.len() + c;
    let mut net = BoundedFlow::new(2 + chosen.len() + q);
    let mut handles = vec![vec![usize::MAX; q]; chosen.len()];
    for (i, &ty) in chosen.iter().enumerate() {
        net.add_edge(s, type_node(i), 1, types[ty].len() as i64);
        for c in 0..q {
            if supply[ty][c] > 0 {
                handles[i][c] = net.add_edge(type_node(i), color_node(c), 0, supply[ty][c]);
            }
        }
    }
    for (c, &d) in demand.iter().enumerate() {
        net.add_edge(color_node(c), t, d, d);
    }
    net.add_edge(t, s, 0, size as i64);
    if !net.feasible() {
        return None;
    }
    Some(
        handles
            .iter()
            .map(|row| row.iter().map(|&h| if h == usize::MAX { 0 } else { net.flow(h) }).collect())
            .collect(),
    )
}
