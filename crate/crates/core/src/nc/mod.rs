//! Non-crossing partitions, the interval families, permutations and the
//! Kreweras complement.

mod enumerate;
mod numbers;
mod partition;
mod permutation;

pub use enumerate::{
    enumerate_int, enumerate_int_cyclic, enumerate_nc, interval_from_cuts, partition_from_openers,
    NcIter, MAX_CYCLIC_ORDER, MAX_INT_ORDER, MAX_NC_ORDER,
};
pub use numbers::{binomial, catalan, fuss_catalan, narayana};
pub use partition::{is_noncrossing, NcPartition, SetPartition};
pub use permutation::Permutation;

pub(crate) use numbers::{exact_div, factorial};
pub(crate) use partition::check_same;
