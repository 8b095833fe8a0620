//! Recognition of reduced directed power graphs of nilpotent groups: split the
//! input by prime, recognize each piece against candidate p-groups, glue the
//! pieces back through least common parents, and verify the result.

mod candidates;
mod glue;
mod split;
mod undirected;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{build_directed_power_graph, color_isomorphic, reduce, ColoredDigraph, ReducedGraph};
use crate::group::{build_group, GroupLimits, GroupSpec};

pub use candidates::{
    abelian_candidates, dedup_candidates, exponent_p_star, polycyclic_candidates, recognize_abelian_p,
    recognize_exponent_p, recognize_polycyclic_p, Candidate, Recognizer,
};
pub use glue::{glue, least_common_parent, product_reduced, verify_color_iso};
pub use split::{identity_class, split_by_prime, PrimePiece};
pub use undirected::{recognize_undirected, UNDIRECTED_MAX_VERTICES};

/// Group class a recognizer searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Abelian,
    /// Nilpotent with every Sylow subgroup given by a presentation of at most
    /// `c` generators.
    Polycyclic(usize),
    /// Nilpotent of squarefree exponent: every Sylow subgroup has exponent p.
    Squarefree,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Abelian => f.write_str("abelian"),
            Target::Polycyclic(c) => write!(f, "polycyclic:{c}"),
            Target::Squarefree => f.write_str("squarefree"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "abelian" => Ok(Target::Abelian),
            "squarefree" => Ok(Target::Squarefree),
            other => {
                let c = other
                    .strip_prefix("polycyclic:")
                    .and_then(|c| c.parse::<usize>().ok())
                    .filter(|&c| c >= 1)
                    .ok_or_else(|| Error::InvalidSpec(format!("unknown class '{other}' (abelian, polycyclic:c, squarefree)")))?;
                Ok(Target::Polycyclic(c))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum RecognitionInput {
    /// A directed graph, reduced before recognition.
    Raw(ColoredDigraph),
    Reduced(ReducedGraph),
}

#[derive(Debug, Clone)]
pub struct RecognitionQuery {
    pub input: RecognitionInput,
    pub target: Target,
    pub limits: GroupLimits,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionResult {
    pub verdict: bool,
    pub spec: Option<GroupSpec>,
    /// Reduced graph of the witness's directed power graph (directed inputs).
    pub witness: Option<ReducedGraph>,
    /// `iso[w] = i`: witness class (or vertex, for undirected inputs) `w`
    /// goes to input class (vertex) `i`.
    pub iso: Option<Vec<usize>>,
    /// Why the verdict is negative.
    pub reason: Option<String>,
}

impl RecognitionResult {
    pub fn yes(spec: GroupSpec, witness: Option<ReducedGraph>, iso: Vec<usize>) -> Self {
        RecognitionResult { verdict: true, spec: Some(spec), witness, iso: Some(iso), reason: None }
    }

    pub fn no(reason: impl Into<String>) -> Self {
        RecognitionResult { verdict: false, spec: None, witness: None, iso: None, reason: Some(reason.into()) }
    }
}

/// The reduced graph recognition works on.
pub fn reduced_input(input: &RecognitionInput) -> Result<ReducedGraph> {
    match input {
        RecognitionInput::Raw(d) => reduce(d),
        RecognitionInput::Reduced(r) => Ok(r.clone()),
    }
}

/// Runs the full pipeline with a fresh candidate cache.
pub fn recognize_nilpotent(query: &RecognitionQuery) -> Result<RecognitionResult> {
    recognize_with(&Recognizer::new(query.limits), &query.input, query.target)
}

/// As [`recognize_nilpotent`], sharing `rec`'s candidate cache.
pub fn recognize_with(rec: &Recognizer, input: &RecognitionInput, target: Target) -> Result<RecognitionResult> {
    let r = reduced_input(input)?;
    match recognize_reduced(rec, &r, target) {
        Err(Error::NotCandidate(why)) => Ok(RecognitionResult::no(why)),
        other => other,
    }
}

fn recognize_reduced(rec: &Recognizer, r: &ReducedGraph, target: Target) -> Result<RecognitionResult> {
    let limits = rec.limits();
    limits.check_order(r.vertex_count() as u128)?;
    identity_class(r)?;
    if r.vertex_count() == 1 {
        return Ok(RecognitionResult::yes(GroupSpec::Cyclic(1), Some(r.clone()), vec![0]));
    }
    let pieces = split_by_prime(r)?;

    // pieces are independent; recognize them side by side
    let results: Vec<Result<Option<(GroupSpec, ReducedGraph, Vec<usize>)>>> = if pieces.len() == 1 {
        vec![rec.recognize_piece(&pieces[0].graph, pieces[0].prime, pieces[0].exponent, target)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = pieces
                .iter()
                .map(|pc| s.spawn(move || rec.recognize_piece(&pc.graph, pc.prime, pc.exponent, target)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("recognizer thread panicked")).collect()
        })
    };

    let mut specs = Vec::new();
    let mut graphs = Vec::new();
    let mut maps = Vec::new();
    for (pc, res) in pieces.iter().zip(results) {
        let Some((spec, w, m)) = res? else {
            return Ok(RecognitionResult::no(format!(
                "the {}-piece matches no {target} group of order {}^{}",
                pc.prime, pc.prime, pc.exponent
            )));
        };
        specs.push(spec);
        graphs.push(w);
        // piece classes back to input classes
        maps.push(m.into_iter().map(|c| pc.classes[c]).collect::<Vec<_>>());
    }

    let (spec, product, map) = if pieces.len() == 1 {
        let (spec, w, m) = (specs.pop().unwrap(), graphs.pop().unwrap(), maps.pop().unwrap());
        if !verify_color_iso(&w, r, &m) {
            return Ok(RecognitionResult::no("the prime piece does not cover the whole graph"));
        }
        return Ok(RecognitionResult::yes(spec, Some(w), m));
    } else {
        let refs: Vec<&ReducedGraph> = graphs.iter().collect();
        match glue(r, &refs, &maps) {
            Some((product, map)) => (GroupSpec::DirectProduct(specs), product, map),
            None => return Ok(RecognitionResult::no("gluing the prime pieces fails")),
        }
    };

    // re-index onto the witness group's own reduced graph when it is buildable
    if (spec.order() as usize) <= limits.max_order {
        let table = build_group(&spec, limits)?;
        let real = reduce(&build_directed_power_graph(&table))?.without_members();
        let Some(to_product) = color_isomorphic(&real, &product) else {
            return Err(Error::Internal("product graph differs from the witness group's graph".into()));
        };
        let composed: Vec<usize> = to_product.iter().map(|&c| map[c]).collect();
        if !verify_color_iso(&real, r, &composed) {
            return Err(Error::Internal("re-indexed witness failed verification".into()));
        }
        return Ok(RecognitionResult::yes(spec, Some(real), composed));
    }
    Ok(RecognitionResult::yes(spec, Some(product), map))
}
