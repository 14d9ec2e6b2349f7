//! Meandric systems `M(π, ρ)`: pairings, component counts, Hasse distances
//! and exhaustive oracles.

mod distance;
mod hasse;
pub mod oracle;
mod pairing;
mod record;

pub use distance::{
    component_count_arcs, component_count_cycles, distance_bound_b, distance_via_join_all,
    gamma_is_tree, hasse_distance, is_meander,
};
pub use hasse::{hasse_distance_bfs, lower_covers, upper_covers, HasseDiagram, BFS_ORACLE_MAX};
pub use oracle::count_meandric_partners;
pub use pairing::{doubling, pairing_to_partition, PairingDiagram};
pub use record::PairRecord;

pub(crate) use distance::Prepared;
