use crate::error::{Error, Result};
use crate::motif::{MotifAnswer, MotifInstance, MotifLimits};

/// Exact answer by enumerating connected vertex sets.
///
/// Only motif-coloured vertices are kept. Each connected set is generated
/// once, from its smallest vertex, by ESU-style extension: a vertex enters
/// the extension set only if it is larger than the start and not adjacent to
/// the set built so far. Vertices whose colour is already saturated are
/// skipped.
pub fn occurs_bruteforce(inst: &MotifInstance, limits: &MotifLimits) -> Result<MotifAnswer> {
    let k = inst.motif.size();
    if k > limits.oracle_max_motif {
        return Err(Error::LimitExceeded {
            what: "motif size for the exhaustive oracle",
            value: k as u128,
            limit: limits.oracle_max_motif as u128,
        });
    }
    let (g, map) = inst.residual();
    let n = g.len();
    if n > limits.oracle_max_vertices.min(64) {
        return Err(Error::LimitExceeded {
            what: "motif-coloured vertices for the exhaustive oracle",
            value: n as u128,
            limit: limits.oracle_max_vertices.min(64) as u128,
        });
    }
    if k > n {
        return Ok(MotifAnswer::absent());
    }
    let nbr: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w))).collect();
    // colour -> slot, and per-slot remaining multiplicity
    let palette: Vec<u64> = inst.motif.counts().keys().copied().collect();
    let slot: Vec<usize> = (0..n).map(|v| palette.binary_search(&g.color(v)).unwrap()).collect();
    let mut left: Vec<usize> = inst.motif.counts().values().copied().collect();

    struct Search<'a> {
        nbr: &'a [u64],
        slot: &'a [usize],
        k: usize,
    }

    impl Search<'_> {
        fn grow(&self, sub: u64, size: usize, ext: u64, start: usize, reach: u64, left: &mut [usize]) -> Option<u64> {
            if size == self.k {
                return Some(sub);
            }
            let mut ext = ext;
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                let s = self.slot[w];
                if left[s] == 0 {
                    continue;
                }
                let above = if start + 1 >= 64 { 0 } else { !0u64 << (start + 1) };
                let fresh = self.nbr[w] & above & !reach & !sub;
                left[s] -= 1;
                let found = self.grow(sub | (1 << w), size + 1, ext | fresh, start, reach | self.nbr[w], left);
                left[s] += 1;
                if found.is_some() {
                    return found;
                }
            }
            None
        }
    }

    let search = Search { nbr: &nbr, slot: &slot, k };
    for v in 0..n {
        let s = slot[v];
        left[s] -= 1;
        let above = if v + 1 >= 64 { 0 } else { !0u64 << (v + 1) };
        let found = search.grow(1 << v, 1, nbr[v] & above, v, nbr[v] | (1 << v), &mut left);
        left[s] += 1;
        if let Some(mask) = found {
            let witness = (0..n).filter(|&u| mask >> u & 1 == 1).map(|u| map[u]).collect();
            return Ok(MotifAnswer::found(witness));
        }
    }
    Ok(MotifAnswer::absent())
}
