//! Compiling 3-SAT and weighted Max-Cut into power-graph instances.

mod cnf;
mod embedding;
mod gadget;
mod maxcut;

pub use cnf::{parse_dimacs, sat_bruteforce, write_dimacs, CnfFormula, Literal, SAT_BRUTEFORCE_MAX_VARS};
pub use embedding::{
    build_embedding, choose_b, choose_b_for, colex_subsets, materialize_embedded_subgraph, materialize_full_instance,
    verify_plan, EmbeddingPlan, DEFAULT_VERTEX_BUDGET,
};
pub use gadget::{build_gadget, GadgetInstance, Role};
pub use maxcut::{maxcut_bruteforce, maxcut_embed, WeightedGraph, MAXCUT_BRUTEFORCE_MAX_VERTICES};
