use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::nc::{binomial, catalan};

/// Largest `n` accepted by [`avg_bound_bn`]. The logarithm is an `O(n^2)`
/// recurrence over integers with up to `~1.2 n` decimal digits; `n = 1500`
/// takes a few seconds in a release build.
pub const BTILDE_BUDGET: usize = 1500;

/// An exact rational as decimal strings, the JSON shape for big values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactRational {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for ExactRational {
    fn from(r: &BigRational) -> Self {
        ExactRational {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

/// Nearest `f64` to an exact rational.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn check_positive(n: usize, name: &str) -> Result<()> {
    if n == 0 {
        Err(Error::Domain(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// `[y^k] 1/((1+y) sqrt(1-8y))` for `k = 0..=order`.
///
/// With `a_k = C(2k,k) 2^k = [y^k] (1-8y)^{-1/2}` the coefficients obey
/// `f_k = a_k - f_{k-1}`, and `a_k = a_{k-1} · 4(2k-1)/k`.
pub fn interval_kernel(order: usize) -> TruncatedSeries<BigInt> {
    let mut a = BigInt::one();
    let mut prev = BigInt::from(0);
    TruncatedSeries::from_fn(order, |k| {
        if k > 0 {
            a = a.clone() * (4 * (2 * k as u64 - 1)) / k as u64;
        }
        prev = &a - &prev;
        prev.clone()
    })
}

fn d_from_kernel(n: usize, f_n: &BigInt) -> BigRational {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let den = (BigInt::one() << (n - 1)) * BigInt::from(catalan(n));
    int(6 * n as i64 + 4) + BigRational::new(BigInt::from(sign) - 3 * f_n, den)
}

/// Average of `d_H(π, ρ)` over `π ∈ Int(n)`, `ρ ∈ NC(n)`:
/// `6n + 4 + ((-1)^n - 3 [y^n] 1/((1+y) sqrt(1-8y))) / (2^{n-1} Cat_n)`.
pub fn avg_distance_interval(n: usize) -> Result<BigRational> {
    check_positive(n, "n")?;
    Ok(d_from_kernel(n, interval_kernel(n).coefficient(n)?))
}

/// [`avg_distance_interval`] for every `n = 1..=max_n` from one kernel.
pub fn avg_distance_interval_all(max_n: usize) -> Vec<BigRational> {
    let kernel = interval_kernel(max_n);
    (1..=max_n).map(|n| d_from_kernel(n, &kernel.coeffs()[n])).collect()
}

/// Average of `d_H(λ_{2,m}, ρ)` over `ρ ∈ NC(2m)`:
/// `2^{2m-1} C(2m,m) / Cat_{2m} - 3/2`.
pub fn avg_distance_lambda2(m: usize) -> Result<BigRational> {
    check_positive(m, "m")?;
    let num = (BigInt::one() << (2 * m - 1)) * BigInt::from(binomial(2 * m as u64, m as u64));
    Ok(BigRational::new(num, catalan(2 * m).into()) - BigRational::new(3.into(), 2.into()))
}

/// [`avg_distance_lambda2`] in floating point via log-gamma, usable for
/// large `m`.
pub fn avg_distance_lambda2_f64(m: usize) -> Result<f64> {
    check_positive(m, "m")?;
    let m = m as f64;
    let ln_central = ln_gamma(2.0 * m + 1.0) - 2.0 * ln_gamma(m + 1.0);
    let ln_cat = ln_gamma(4.0 * m + 1.0) - 2.0 * ln_gamma(2.0 * m + 1.0) - (2.0 * m + 1.0).ln();
    Ok((ln_central + (2.0 * m - 1.0) * std::f64::consts::LN_2 - ln_cat).exp() - 1.5)
}

fn catalan_squares(order: usize) -> TruncatedSeries<BigInt> {
    TruncatedSeries::from_fn(order, |k| {
        let c = BigInt::from(catalan(k));
        &c * &c
    })
}

/// Average of `b(π, ρ) = |π| + |ρ| - 2|π ∨ ρ|` over `NC(n)^2`:
/// `-n - 1 + (2n / Cat_n^2) [z^n] log(Σ_k Cat_k^2 z^k)`.
///
/// Fails with a resource error above [`BTILDE_BUDGET`].
pub fn avg_bound_bn(n: usize) -> Result<BigRational> {
    Ok(avg_bound_bn_all(n)?.pop().expect("n >= 1"))
}

/// [`avg_bound_bn`] for every `n = 1..=max_n` from one logarithm.
pub fn avg_bound_bn_all(max_n: usize) -> Result<Vec<BigRational>> {
    check_positive(max_n, "n")?;
    if max_n > BTILDE_BUDGET {
        return Err(Error::Resource(format!(
            "n = {max_n} exceeds the series budget {BTILDE_BUDGET}"
        )));
    }
    let phi = catalan_squares(max_n);
    // n [z^n] log Φ = [z^n] zΦ'/Φ, which stays integral.
    let h = phi.log_derivative()?;
    Ok((1..=max_n)
        .map(|n| {
            let two_h = BigRational::new(2 * &h.coeffs()[n], phi.coeffs()[n].clone());
            two_h - int(n as i64 + 1)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn kernel_matches_series_engine() {
        let order = 40;
        let one_minus_8y = TruncatedSeries::from_slice(order, &[int(1), int(-8)]).unwrap();
        let one_plus_y = TruncatedSeries::from_slice(order, &[int(1), int(1)]).unwrap();
        let slow = one_plus_y.mul(&one_minus_8y.sqrt().unwrap()).unwrap().inverse().unwrap();
        let fast = interval_kernel(order);
        for k in 0..=order {
            assert_eq!(slow.coeffs()[k], int(fast.coeffs()[k].clone()));
        }
        assert_eq!(fast.coeffs()[1], BigInt::from(3));
    }

    #[test]
    fn small_values() {
        assert!(avg_distance_interval(1).unwrap().is_zero());
        assert_eq!(avg_distance_interval(2).unwrap(), q(1, 2));
        assert_eq!(avg_distance_lambda2(1).unwrap(), q(1, 2));
        assert!(avg_bound_bn(1).unwrap().is_zero());
        assert_eq!(avg_bound_bn(2).unwrap(), q(1, 2));
        assert!(avg_distance_interval(0).is_err());
        assert!(matches!(avg_bound_bn(BTILDE_BUDGET + 1), Err(Error::Resource(_))));
    }

    #[test]
    fn batch_matches_single() {
        let all = avg_distance_interval_all(12);
        for (i, d) in all.iter().enumerate() {
            assert_eq!(d, &avg_distance_interval(i + 1).unwrap());
        }
        let b = avg_bound_bn_all(12).unwrap();
        assert_eq!(b[11], avg_bound_bn(12).unwrap());
    }

    #[test]
    fn log_domain_agrees() {
        for m in [1usize, 3, 10, 60] {
            let exact = rational_to_f64(&avg_distance_lambda2(m).unwrap());
            assert!((exact - avg_distance_lambda2_f64(m).unwrap()).abs() < 1e-9 * exact.abs().max(1.0));
        }
    }

    #[test]
    fn exact_rational_json() {
        let v = serde_json::to_value(ExactRational::from(&q(-3, 6))).unwrap();
        assert_eq!(v, serde_json::json!({"num": "-1", "den": "2"}));
    }
}
