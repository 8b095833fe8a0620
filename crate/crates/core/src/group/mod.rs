//! Explicit finite groups: Cayley tables, high-level specs, and polycyclic
//! presentations of p-groups.

mod polycyclic;
mod spec;
mod table;

pub use polycyclic::{
    collect_presentation, enumerate_polycyclic_p_groups, pair_index, PolycyclicCandidate, PolycyclicPresentation,
    Word,
};
pub use spec::{build_group, enumerate_abelian_p_groups, GroupSpec};
pub use table::{CayleyTable, ClassPartition, GroupLimits, SylowSubgroup};
