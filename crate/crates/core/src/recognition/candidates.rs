use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::graph::{build_directed_power_graph, color_isomorphic, reduce, ReducedGraph};
use crate::group::{enumerate_abelian_p_groups, enumerate_polycyclic_p_groups, CayleyTable, GroupLimits, GroupSpec};

use super::Target;

/// A candidate p-group with its reduced directed power graph.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub spec: GroupSpec,
    pub table: CayleyTable,
    pub reduced: ReducedGraph,
}

/// Cheap colour-isomorphism invariant used to bucket candidates.
fn invariant(r: &ReducedGraph) -> (usize, Vec<(u64, usize, usize, usize)>) {
    let mut v: Vec<_> = (0..r.len()).map(|c| (r.color(c), r.size(c), r.out(c).len(), r.inn(c).len())).collect();
    v.sort_unstable();
    (r.edge_count(), v)
}

/// Drops candidates colour-isomorphic to an earlier one.
pub fn dedup_candidates(all: Vec<Candidate>) -> Vec<Candidate> {
    let mut buckets: HashMap<(usize, Vec<(u64, usize, usize, usize)>), Vec<usize>> = HashMap::new();
    let mut kept: Vec<Candidate> = Vec::new();
    for cand in all {
        let bucket = buckets.entry(invariant(&cand.reduced)).or_default();
        if bucket.iter().any(|&i| color_isomorphic(&kept[i].reduced, &cand.reduced).is_some()) {
            continue;
        }
        bucket.push(kept.len());
        kept.push(cand);
    }
    kept
}

fn with_reduced(spec: GroupSpec, table: CayleyTable) -> Candidate {
    let reduced = reduce(&build_directed_power_graph(&table)).expect("power graphs are directed").without_members();
    Candidate { spec, table, reduced }
}

/// Every abelian group of order `p^m`, one per partition.
pub fn abelian_candidates(p: u64, m: u32, limits: &GroupLimits) -> Result<Vec<Candidate>> {
    Ok(enumerate_abelian_p_groups(p, m, limits)?.into_iter().map(|(s, t)| with_reduced(s, t)).collect())
}

/// Consistent presentations of length at most `c`, up to colour-isomorphism
/// of their reduced graphs, in enumeration order.
pub fn polycyclic_candidates(p: u64, m: u32, c: usize, limits: &GroupLimits) -> Result<Vec<Candidate>> {
    let all = enumerate_polycyclic_p_groups(p, m, c, limits)?
        .into_iter()
        .map(|cand| with_reduced(GroupSpec::Polycyclic(cand.presentation), cand.table))
        .collect();
    Ok(dedup_candidates(all))
}

/// The reduced graph of an exponent-`p` group of order `p^a`: the identity
/// class below `(p^a - 1)/(p - 1)` leaf classes of colour `p`, size `p - 1`.
pub fn exponent_p_star(p: u64, a: u32) -> ReducedGraph {
    let leaves = ((p.pow(a) - 1) / (p - 1)) as usize;
    let mut colors = vec![1];
    colors.extend(std::iter::repeat(p).take(leaves));
    let mut sizes = vec![1];
    sizes.extend(std::iter::repeat((p - 1) as usize).take(leaves));
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|c| (c, 0)).collect();
    ReducedGraph::from_parts(colors, sizes, &edges).expect("star is well formed")
}

/// The exponent-`p` star test. On success returns the witness `(Z_p)^a` and
/// the class map witness -> `r`.
pub fn recognize_exponent_p(r: &ReducedGraph, p: u64, a: u32) -> Option<(GroupSpec, ReducedGraph, Vec<usize>)> {
    if a == 0 || p < 2 {
        return None;
    }
    let leaves = (p.checked_pow(a)? - 1) / (p - 1);
    if r.len() as u64 != leaves + 1 {
        return None;
    }
    let root = (0..r.len()).find(|&c| r.color(c) == 1)?;
    if r.size(root) != 1 || !r.out(root).is_empty() || r.inn(root).len() as u64 != leaves {
        return None;
    }
    let others: Vec<usize> = (0..r.len()).filter(|&c| c != root).collect();
    let leaf_ok = |c: usize| r.color(c) == p && r.size(c) as u64 == p - 1 && r.out(c) == [root] && r.inn(c).is_empty();
    if !others.iter().all(|&c| leaf_ok(c)) {
        return None;
    }
    let mut map = vec![root];
    map.extend(others);
    let spec = GroupSpec::AbelianP { p, partition: vec![1; a as usize] };
    Some((spec, exponent_p_star(p, a), map))
}

fn first_match(r: &ReducedGraph, cands: &[Candidate]) -> Option<(GroupSpec, ReducedGraph, Vec<usize>)> {
    cands
        .iter()
        .find_map(|c| color_isomorphic(&c.reduced, r).map(|m| (c.spec.clone(), c.reduced.clone(), m)))
}

/// Abelian recognizer for one prime, without caching.
pub fn recognize_abelian_p(r: &ReducedGraph, p: u64, a: u32, limits: &GroupLimits) -> Result<Option<(GroupSpec, ReducedGraph, Vec<usize>)>> {
    Ok(first_match(r, &abelian_candidates(p, a, limits)?))
}

/// Bounded-polycyclic recognizer for one prime, without caching.
pub fn recognize_polycyclic_p(
    r: &ReducedGraph,
    p: u64,
    a: u32,
    c: usize,
    limits: &GroupLimits,
) -> Result<Option<(GroupSpec, ReducedGraph, Vec<usize>)>> {
    Ok(first_match(r, &polycyclic_candidates(p, a, c, limits)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Key {
    Abelian(u64, u32),
    Polycyclic(u64, u32, usize),
    Elementary(u64, u32),
}

type Slot = Arc<Mutex<Option<Arc<Vec<Candidate>>>>>;

/// Per-prime recognizers sharing a candidate cache keyed by `(p, a, class)`.
/// Safe to use from several threads; each list is generated once.
#[derive(Debug, Default)]
pub struct Recognizer {
    limits: GroupLimits,
    cache: Mutex<BTreeMap<Key, Slot>>,
}

impl Recognizer {
    pub fn new(limits: GroupLimits) -> Self {
        Recognizer { limits, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn limits(&self) -> &GroupLimits {
        &self.limits
    }

    fn cached(&self, key: Key) -> Result<Arc<Vec<Candidate>>> {
        let slot = self.cache.lock().expect("cache lock").entry(key).or_default().clone();
        // hold the slot while generating so concurrent callers wait instead of
        // repeating the sweep
        let mut guard = slot.lock().expect("slot lock");
        if let Some(list) = guard.as_ref() {
            return Ok(list.clone());
        }
        let list = Arc::new(match key {
            Key::Abelian(p, a) => abelian_candidates(p, a, &self.limits)?,
            Key::Polycyclic(p, a, c) => polycyclic_candidates(p, a, c, &self.limits)?,
            Key::Elementary(p, a) => {
                let spec = GroupSpec::AbelianP { p, partition: vec![1; a as usize] };
                let table = crate::group::build_group(&spec, &self.limits)?;
                vec![with_reduced(spec, table)]
            }
        });
        *guard = Some(list.clone());
        Ok(list)
    }

    /// Candidate p-groups of order `p^a` for `target`, deduplicated, in
    /// deterministic order.
    pub fn candidates(&self, p: u64, a: u32, target: Target) -> Result<Arc<Vec<Candidate>>> {
        self.cached(match target {
            Target::Abelian => Key::Abelian(p, a),
            Target::Polycyclic(c) => Key::Polycyclic(p, a, c),
            Target::Squarefree => Key::Elementary(p, a),
        })
    }

    /// Recognizes one prime piece. Returns the witness spec, its reduced
    /// graph and the class map witness -> `r`.
    pub fn recognize_piece(
        &self,
        r: &ReducedGraph,
        p: u64,
        a: u32,
        target: Target,
    ) -> Result<Option<(GroupSpec, ReducedGraph, Vec<usize>)>> {
        match target {
            Target::Squarefree => Ok(recognize_exponent_p(r, p, a)),
            _ => Ok(first_match(r, &self.candidates(p, a, target)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn reduced_of(s: &str) -> ReducedGraph {
        let t = build_group(&GroupSpec::parse(s).unwrap(), &GroupLimits::default()).unwrap();
        reduce(&build_directed_power_graph(&t)).unwrap()
    }

    #[test]
    fn abelian_recognition() {
        let l = GroupLimits::default();
        let (spec, _, _) = recognize_abelian_p(&reduced_of("product:(cyclic:2,cyclic:2)"), 2, 2, &l).unwrap().unwrap();
        assert_eq!(spec.to_string(), "abelianp:2^[1,1]");
        let (spec, _, _) = recognize_abelian_p(&reduced_of("cyclic:4"), 2, 2, &l).unwrap().unwrap();
        assert_eq!(spec.to_string(), "abelianp:2^[2]");
        let q8 = reduced_of("polycyclic:2^[1,2];pow=[0,2]|[0,0];conj=[0,3]");
        assert!(recognize_abelian_p(&q8, 2, 3, &l).unwrap().is_none());
    }

    #[test]
    fn exponent_p_stars() {
        let r = reduced_of("abelianp:3^[1,1]");
        let (_, w, map) = recognize_exponent_p(&r, 3, 2).unwrap();
        assert_eq!(r.len(), 5);
        assert!(crate::recognition::verify_color_iso(&w, &r, &map));
        let heis = reduced_of("heisenberg:3");
        let (spec, w, map) = recognize_exponent_p(&heis, 3, 3).unwrap();
        assert_eq!(heis.len(), 14);
        assert_eq!(spec.to_string(), "abelianp:3^[1,1,1]");
        assert!(crate::recognition::verify_color_iso(&w, &heis, &map));
        assert!(recognize_exponent_p(&reduced_of("cyclic:9"), 3, 2).is_none());
        // the explicit star equals the real reduced graph
        assert!(color_isomorphic(&exponent_p_star(5, 2), &reduced_of("abelianp:5^[1,1]")).is_some());
    }

    #[test]
    fn polycyclic_recognition() {
        let l = GroupLimits::default();
        let d8 = reduced_of("polycyclic:2^[1,2];pow=[0,0]|[0,0];conj=[0,3]");
        assert!(recognize_polycyclic_p(&d8, 2, 3, 2, &l).unwrap().is_some());
        let e8 = reduced_of("abelianp:2^[1,1,1]");
        assert!(recognize_polycyclic_p(&e8, 2, 3, 2, &l).unwrap().is_none());
        assert!(recognize_polycyclic_p(&e8, 2, 3, 3, &l).unwrap().is_some());
    }

    #[test]
    fn order_eight_candidates_are_distinct() {
        // Z8, Z4xZ2, D8, Q8, Z2^3: five reduced graphs
        let cands = polycyclic_candidates(2, 3, 3, &GroupLimits::default()).unwrap();
        assert_eq!(cands.len(), 5);
    }

    #[test]
    fn cache_is_reused() {
        let rec = Recognizer::new(GroupLimits::default());
        let a = rec.candidates(3, 2, Target::Abelian).unwrap();
        let b = rec.candidates(3, 2, Target::Abelian).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.len(), 2);
    }
}
