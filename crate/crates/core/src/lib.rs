//! Meandric systems through the Hasse diagram of the non-crossing partition
//! lattice.
//!
//! ```
//! use meandric::nc::NcPartition;
//! use meandric::meander::hasse_distance;
//!
//! let pi: NcPartition = "1,2/3,4".parse().unwrap();
//! let rho: NcPartition = "1,4/2,3".parse().unwrap();
//! assert_eq!(hasse_distance(&pi, &rho).unwrap(), 2);
//! ```

pub mod enumeration;
pub mod error;
pub mod meander;
pub mod nc;
pub mod sampler;
pub mod series;
pub mod shallow_tree;

pub use error::{Error, Result};

/// The guide in `book/`, compiled here so its snippets run as doc-tests.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/partitions.md")]
    pub struct Partitions;
    #[doc = include_str!("../../../book/src/distance.md")]
    pub struct Distance;
    #[doc = include_str!("../../../book/src/counting.md")]
    pub struct Counting;
    #[doc = include_str!("../../../book/src/fat_trees.md")]
    pub struct FatTrees;
    #[doc = include_str!("../../../book/src/series.md")]
    pub struct Series;
    #[doc = include_str!("../../../book/src/sampling.md")]
    pub struct Sampling;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
