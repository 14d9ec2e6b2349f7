//! Uniform sampling of NC(n) and Int(n), and Monte Carlo estimates of the
//! expected number of components of a random meandric system.
//!
//! ```
//! use meandric::sampler::{estimate_components, Mode};
//!
//! let e = estimate_components(1, 10, 1, &Mode::All).unwrap();
//! assert_eq!(e.mean, 1.0);
//! ```

mod estimate;
mod random;
mod uniformity;

pub use estimate::{estimate_components, trial_rng, Estimate, Mode};
pub use random::{random_dyck_word, random_interval, random_nc};
pub use uniformity::{uniformity_test, ChiSquare, Family, UNIFORMITY_MAX};
