//! Graph Motif: does some connected vertex set carry exactly the colour
//! multiset `M`?

mod brute;
mod flow;
mod greedy;
mod twinclass;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{is_connected_set, twin_types, ColoredDigraph};

pub use brute::occurs_bruteforce;
pub use greedy::occurs_pgroup_greedy;
pub use twinclass::occurs_twinclass;

/// A non-empty multiset of colours.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Motif {
    counts: BTreeMap<u64, usize>,
}

impl Motif {
    pub fn from_counts(counts: impl IntoIterator<Item = (u64, usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (c, k) in counts {
            if k == 0 {
                return Err(Error::InvalidSpec(format!("colour {c} has multiplicity 0")));
            }
            *map.entry(c).or_insert(0) += k;
        }
        if map.is_empty() {
            return Err(Error::InvalidSpec("motif is empty".into()));
        }
        Ok(Motif { counts: map })
    }

    pub fn from_colors(colors: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::from_counts(colors.into_iter().map(|c| (c, 1)))
    }

    pub fn size(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn multiplicity(&self, color: u64) -> usize {
        self.counts.get(&color).copied().unwrap_or(0)
    }

    pub fn contains(&self, color: u64) -> bool {
        self.counts.contains_key(&color)
    }

    pub fn counts(&self) -> &BTreeMap<u64, usize> {
        &self.counts
    }

    pub fn is_colourful(&self) -> bool {
        self.counts.values().all(|&k| k == 1)
    }

    /// Whether the colours of `vertices` in `g` form exactly this multiset.
    pub fn matches(&self, g: &ColoredDigraph, vertices: &[usize]) -> bool {
        let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
        for &v in vertices {
            *seen.entry(g.color(v)).or_insert(0) += 1;
        }
        seen == self.counts
    }
}

impl fmt::Display for Motif {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for (&c, &k) in &self.counts {
            for _ in 0..k {
                if !first {
                    f.write_str(",")?;
                }
                first = false;
                write!(f, "{c}")?;
            }
        }
        f.write_str("}")
    }
}

impl FromStr for Motif {
    type Err = Error;

    /// Comma-separated colours, e.g. `1,2,2`.
    fn from_str(s: &str) -> Result<Self> {
        let colors = s
            .trim_matches(|c| c == '{' || c == '}')
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::InvalidSpec(format!("bad colour '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        Motif::from_colors(colors)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotifInstance {
    pub graph: ColoredDigraph,
    pub motif: Motif,
}

impl MotifInstance {
    pub fn new(graph: ColoredDigraph, motif: Motif) -> Result<Self> {
        if graph.is_directed() {
            return Err(Error::InvalidGraph("motif instances need an undirected graph".into()));
        }
        Ok(MotifInstance { graph, motif })
    }

    /// Vertices whose colour occurs in the motif, ascending.
    pub fn relevant_vertices(&self) -> Vec<usize> {
        (0..self.graph.len()).filter(|&v| self.motif.contains(self.graph.color(v))).collect()
    }

    /// The subgraph induced on motif-coloured vertices with its vertex map;
    /// no occurrence can use any other vertex.
    pub fn residual(&self) -> (ColoredDigraph, Vec<usize>) {
        let keep = self.relevant_vertices();
        (self.graph.induced_subgraph(&keep), keep)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotifAnswer {
    pub occurs: bool,
    pub witness: Option<Vec<usize>>,
}

impl MotifAnswer {
    pub fn absent() -> Self {
        MotifAnswer { occurs: false, witness: None }
    }

    pub fn found(mut witness: Vec<usize>) -> Self {
        witness.sort_unstable();
        MotifAnswer { occurs: true, witness: Some(witness) }
    }
}

/// Independent check that a positive answer is a connected exact match.
pub fn validate_witness(inst: &MotifInstance, answer: &MotifAnswer) -> bool {
    match (&answer.witness, answer.occurs) {
        (None, false) => true,
        (Some(w), true) => {
            let mut sorted = w.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == w.len()
                && w.iter().all(|&v| v < inst.graph.len())
                && inst.motif.matches(&inst.graph, w)
                && is_connected_set(&inst.graph, w)
        }
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MotifLimits {
    pub oracle_max_motif: usize,
    pub oracle_max_vertices: usize,
    pub max_types: usize,
}

impl Default for MotifLimits {
    fn default() -> Self {
        MotifLimits { oracle_max_motif: 12, oracle_max_vertices: 64, max_types: 24 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Auto,
    Oracle,
    PGroup,
    TwinClass,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Auto => "auto",
            Engine::Oracle => "oracle",
            Engine::PGroup => "pgroup",
            Engine::TwinClass => "twinclass",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Engine::Auto),
            "oracle" => Ok(Engine::Oracle),
            "pgroup" => Ok(Engine::PGroup),
            "twinclass" => Ok(Engine::TwinClass),
            _ => Err(Error::InvalidSpec(format!("unknown engine '{s}'"))),
        }
    }
}

/// Runs the requested engine (or picks one) and validates the witness.
/// Returns the answer and the engine that produced it.
pub fn solve(inst: &MotifInstance, engine: Engine, limits: &MotifLimits) -> Result<(MotifAnswer, Engine)> {
    let chosen = match engine {
        Engine::Auto => {
            let (residual, _) = inst.residual();
            if twin_types(&residual).len() <= limits.max_types {
                Engine::TwinClass
            } else if residual.len() <= limits.oracle_max_vertices && inst.motif.size() <= limits.oracle_max_motif {
                Engine::Oracle
            } else {
                return Err(Error::NoFeasibleEngine(format!(
                    "{} motif-coloured vertices with {} twin types",
                    residual.len(),
                    twin_types(&residual).len()
                )));
            }
        }
        e => e,
    };
    let answer = match chosen {
        Engine::Oracle => occurs_bruteforce(inst, limits)?,
        Engine::PGroup => occurs_pgroup_greedy(inst)?,
        Engine::TwinClass => occurs_twinclass(inst, limits)?,
        Engine::Auto => unreachable!(),
    };
    if !validate_witness(inst, &answer) {
        return Err(Error::InvalidWitness);
    }
    Ok((answer, chosen))
}
