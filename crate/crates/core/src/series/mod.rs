//! Truncated power series with exact coefficients, the functional equation
//! `F = t G(z(1+F))` and its `t`-derivative at `t = 1`, and the exact
//! average distances built on them.
//!
//! ```
//! use meandric::series::{avg_bound_bn, avg_distance_interval, avg_distance_lambda2};
//! use num_rational::BigRational;
//!
//! let half = BigRational::new(1.into(), 2.into());
//! assert_eq!(avg_distance_interval(2).unwrap(), half);
//! assert_eq!(avg_distance_lambda2(1).unwrap(), half);
//! assert_eq!(avg_bound_bn(2).unwrap(), half);
//! ```

mod averages;
mod constants;
mod functional;
pub mod oracle;
mod ring;
mod truncated;

pub use averages::{
    avg_bound_bn, avg_bound_bn_all, avg_distance_interval, avg_distance_interval_all,
    avg_distance_lambda2, avg_distance_lambda2_f64, interval_kernel, rational_to_f64,
    ExactRational, BTILDE_BUDGET,
};
pub use constants::{
    catalan_square_partial_sum, catalan_square_sum_at_radius, limit_constants, LimitConstants,
};
pub use functional::{dt_at_one, solve_functional};
pub use ring::Coefficient;
pub use truncated::TruncatedSeries;
