use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

/// Limiting constants of the average distances and component counts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitConstants {
    /// `lim (d_n - 2n/3)` for interval tops.
    pub interval_distance_offset: f64,
    /// `lim (c_n - n/3)` for interval tops.
    pub interval_components_offset: f64,
    /// `lim b̃_n / n`.
    pub bound_ratio: f64,
    /// `lim (d̃_{2,m} - √2 m)`.
    pub lambda2_distance_offset: f64,
    /// `lim (c̃_{2,m} - (1 - √2/2) 2m)`.
    pub lambda2_components_offset: f64,
    /// Slope of `c̃_{2,m}` in `2m`.
    pub lambda2_components_slope: f64,
}

/// The named constants: `-28/27`, `28/27`, `(3π-8)/(8-2π)`, `7√2/16 - 3/2`,
/// `3/2 - 7√2/16` and `1 - √2/2`.
pub fn limit_constants() -> LimitConstants {
    LimitConstants {
        interval_distance_offset: -28.0 / 27.0,
        interval_components_offset: 28.0 / 27.0,
        bound_ratio: (3.0 * PI - 8.0) / (8.0 - 2.0 * PI),
        lambda2_distance_offset: 7.0 * SQRT_2 / 16.0 - 1.5,
        lambda2_components_offset: 1.5 - 7.0 * SQRT_2 / 16.0,
        lambda2_components_slope: 1.0 - SQRT_2 / 2.0,
    }
}

/// `4(4-π)/π`, the value of `Σ_{k≥0} Cat_k^2 / 16^k`.
pub fn catalan_square_sum_at_radius() -> f64 {
    4.0 * (4.0 - PI) / PI
}

/// Partial sum `Σ_{k<terms} Cat_k^2 / 16^k`; the tail after `K` terms is
/// about `1/(2πK^2)`.
pub fn catalan_square_partial_sum(terms: usize) -> f64 {
    let mut t = 1.0;
    let mut sum = 0.0;
    for k in 0..terms {
        sum += t;
        let r = (2.0 * k as f64 + 1.0) / (2.0 * (k as f64 + 2.0));
        t *= r * r;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let c = limit_constants();
        assert!((c.bound_ratio - 0.8298962).abs() < 1e-6 && c.bound_ratio < 0.83);
        assert!((c.interval_distance_offset + 1.037037).abs() < 1e-6);
        assert!((c.lambda2_distance_offset + 0.881282).abs() < 1e-6);
        assert_eq!(c.lambda2_components_offset, -c.lambda2_distance_offset);
    }

    #[test]
    fn catalan_square_sum() {
        assert_eq!(catalan_square_partial_sum(3), 1.0 + 1.0 / 16.0 + 4.0 / 256.0);
        let s = catalan_square_partial_sum(4000);
        assert!((s - catalan_square_sum_at_radius()).abs() < 1e-7, "{s}");
    }
}
