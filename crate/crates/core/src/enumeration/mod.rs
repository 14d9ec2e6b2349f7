//! Closed-form counts of meanders with interval and cyclic-interval tops,
//! their degree refinements, and the exponential growth rate.

mod formulas;
mod growth;
pub mod oracle;
mod profile;

pub use formulas::{
    count_cyclic_shallow, count_cyclic_shallow_total, count_n, count_n_blocks, count_na,
    count_na_blocks, count_shallow_meanders, count_shallow_meanders_by_blocks, ln_biguint,
    ln_count_shallow_meanders, partners_lambda,
};
pub use growth::{growth_objective, growth_rate, GrowthRate};
pub use profile::{partitions, DegreeProfile, Partitions};
