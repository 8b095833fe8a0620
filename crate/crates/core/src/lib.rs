//! Power graphs and directed power graphs of finite groups.
//!
//! The crate builds (directed) power graphs from explicit groups, solves the
//! Graph Motif problem on them, compiles 3-SAT and weighted Max-Cut into
//! power-graph instances, and recognizes reduced directed power graphs of
//! nilpotent groups.

pub mod error;
pub mod format;
pub mod graph;
pub mod motif;
pub mod group;
pub mod number;
pub mod recognition;
pub mod reductions;

pub use error::{Error, ErrorKind, Result};
pub use graph::{ColoredDigraph, ReducedGraph};
pub use group::{build_group, CayleyTable, GroupLimits, GroupSpec};
pub use motif::{Motif, MotifAnswer, MotifInstance};
pub use reductions::{CnfFormula, EmbeddingPlan, WeightedGraph};

/// Max-Cut weights are exact 64-bit integers.
pub type WeightedGraph64 = WeightedGraph<i64>;

