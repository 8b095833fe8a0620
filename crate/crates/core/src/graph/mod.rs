//! Graph containers, power-graph builders, twin classes, reduced graphs and
//! isomorphism search.

mod digraph;
mod iso;
mod power;
mod reduced;
mod twins;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::number::{divisors, euler_phi, factorial, prime_power};

pub use digraph::{complete_graph, cycle_graph, ColoredDigraph};
pub use iso::{
    automorphism_count, automorphism_count_by_orbits, automorphism_count_exhaustive, color_isomorphic,
    directed_isomorphic, undirected_isomorphic, AutLimits,
};
pub use power::{build_directed_power_graph, build_power_graph, cyclic_power_graph, power_graph_from_orders};
pub use reduced::{reduce, ReducedGraph};
pub use twins::{closed_twin_classes, connected_components, is_connected_set, is_dominating, twin_types, TwinKind, TwinTypes};

/// `|Aut(Pow(Z_n))| = (φ(n)+1)! · ∏_{d | n, d ∉ {1, n}} φ(d)!` for `n` not a
/// prime power.
pub fn aut_pow_cyclic_formula(n: u64) -> Result<BigUint> {
    if n < 6 || prime_power(n).is_some() {
        return Err(Error::PrimePowerRejected(n));
    }
    let mut acc = factorial(euler_phi(&n) + 1);
    for d in divisors(n) {
        if d != 1 && d != n {
            acc *= factorial(euler_phi(&d));
        }
    }
    Ok(acc)
}
