use crate::error::{Error, Result};
use crate::graph::ReducedGraph;
use crate::number::{factorize, is_power_of};

/// Classes of one prime's piece of a reduced graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePiece {
    pub prime: u64,
    pub exponent: u32,
    /// Indices into the source reduced graph, ascending (the identity class
    /// is always included).
    pub classes: Vec<usize>,
    pub graph: ReducedGraph,
}

/// The identity class: the unique class of colour 1, which must have size 1.
pub fn identity_class(r: &ReducedGraph) -> Result<usize> {
    let ones: Vec<usize> = (0..r.len()).filter(|&c| r.color(c) == 1).collect();
    match ones.as_slice() {
        [c] if r.size(*c) == 1 => Ok(*c),
        [c] => Err(Error::NotCandidate(format!("identity class {c} has size {}", r.size(*c)))),
        [] => Err(Error::NotCandidate("no class of colour 1".into())),
        _ => Err(Error::NotCandidate(format!("{} classes of colour 1", ones.len()))),
    }
}

/// Splits `R` into per-prime pieces: piece `p` is induced on the classes
/// whose colour is a power of `p` (colour 1 included). Classes with composite
/// colours belong to no piece.
pub fn split_by_prime(r: &ReducedGraph) -> Result<Vec<PrimePiece>> {
    let n = r.vertex_count() as u64;
    if n == 0 {
        return Err(Error::NotCandidate("empty graph".into()));
    }
    identity_class(r)?;
    for c in 0..r.len() {
        let col = r.color(c);
        if col == 0 || n % col != 0 {
            return Err(Error::NotCandidate(format!("class {c} has colour {col}, which does not divide {n}")));
        }
    }
    let mut pieces = Vec::new();
    for (p, a) in factorize(&n) {
        let classes: Vec<usize> = (0..r.len()).filter(|&c| is_power_of(r.color(c), p)).collect();
        let total: usize = classes.iter().map(|&c| r.size(c)).sum();
        let expected = p.pow(a);
        if total as u64 != expected {
            return Err(Error::NotCandidate(format!(
                "classes of {p}-power colour hold {total} vertices, expected {expected}"
            )));
        }
        let graph = r.induced(&classes);
        pieces.push(PrimePiece { prime: p, exponent: a, classes, graph });
    }
    Ok(pieces)
}
