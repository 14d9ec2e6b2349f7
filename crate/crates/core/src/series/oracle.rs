//! Exhaustive inputs and checks for the three join generating functions
//!
//! * `Ψ1(z,t) = Σ_m z^m Σ_{ρ ∈ NC(2m)} t^{|λ_{2,m} ∨ ρ|}`,
//! * `Ψ2(z,t) = Σ_n y^n Σ_{π ∈ Int(n), ρ ∈ NC(n)} z^{|π|} t^{|π ∨ ρ|}`,
//! * `Ψ3(z,t) = Σ_n z^n Σ_{π, ρ ∈ NC(n)} t^{|π ∨ ρ|}`,
//!
//! where `∨` is the join of NC(n). Each has the form `F = t G(z(1+F))`;
//! the `g_m` below are counted by brute force, never from closed forms.
//! `Ψ2` is a series in `z` whose coefficients are series in `y`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::nc::{binomial, catalan, enumerate_int, enumerate_nc, NcPartition};

/// Largest `m` for the `Ψ1` oracle (runs over NC(2m)).
pub const PSI1_MAX: usize = 7;
/// Largest `n` for the `Ψ2` oracle (runs over Int(n) × NC(n)).
pub const PSI2_MAX: usize = 8;
/// Largest `n` for the `Ψ3` oracle (runs over NC(n)^2).
pub const PSI3_MAX: usize = 8;

/// Bivariate series: outer variable `z`, coefficients in `y`.
pub type Bivariate = TruncatedSeries<TruncatedSeries<BigRational>>;

/// Join statistics of one family at one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinCounts {
    /// Pairs whose join is the one-block partition.
    pub connected: u64,
    /// Sum of `|join|` over all pairs.
    pub join_sum: u64,
}

fn check(n: usize, max: usize, what: &str) -> Result<()> {
    if n == 0 || n > max {
        Err(Error::Resource(format!("{what} oracle supports 1..={max}, got {n}")))
    } else {
        Ok(())
    }
}

fn join_blocks(a: &NcPartition, b: &NcPartition) -> usize {
    a.join_nc(b).expect("same order").num_blocks()
}

fn tally(a: &NcPartition, bs: &[NcPartition]) -> JoinCounts {
    bs.iter().fold(JoinCounts { connected: 0, join_sum: 0 }, |mut acc, b| {
        let k = join_blocks(a, b);
        acc.connected += (k == 1) as u64;
        acc.join_sum += k as u64;
        acc
    })
}

fn merge(a: JoinCounts, b: JoinCounts) -> JoinCounts {
    JoinCounts {
        connected: a.connected + b.connected,
        join_sum: a.join_sum + b.join_sum,
    }
}

/// Over `ρ ∈ NC(2m)`: how many have `λ_{2,m} ∨ ρ = 1`, and `Σ |λ_{2,m} ∨ ρ|`.
pub fn psi1_counts(m: usize) -> Result<JoinCounts> {
    check(m, PSI1_MAX, "psi1")?;
    let lambda = NcPartition::lambda_interval(2, m)?;
    let all: Vec<NcPartition> = enumerate_nc(2 * m)?.collect();
    Ok(all
        .par_chunks(1024)
        .map(|chunk| tally(&lambda, chunk))
        .reduce(|| JoinCounts { connected: 0, join_sum: 0 }, merge))
}

/// Over `π, ρ ∈ NC(n)`: how many have `π ∨ ρ = 1`, and `Σ |π ∨ ρ|`.
pub fn psi3_counts(n: usize) -> Result<JoinCounts> {
    check(n, PSI3_MAX, "psi3")?;
    let all: Vec<NcPartition> = enumerate_nc(n)?.collect();
    Ok(all
        .par_iter()
        .map(|a| tally(a, &all))
        .reduce(|| JoinCounts { connected: 0, join_sum: 0 }, merge))
}

/// Over `π ∈ Int(n)`, `ρ ∈ NC(n)`, split by `k = |π|` (entry 0 unused).
pub fn psi2_counts(n: usize) -> Result<Vec<JoinCounts>> {
    check(n, PSI2_MAX, "psi2")?;
    let all: Vec<NcPartition> = enumerate_nc(n)?.collect();
    let tops: Vec<NcPartition> = enumerate_int(n)?.collect();
    let rows: Vec<(usize, JoinCounts)> = tops.par_iter().map(|a| (a.num_blocks(), tally(a, &all))).collect();
    let mut out = vec![JoinCounts { connected: 0, join_sum: 0 }; n + 1];
    for (k, c) in rows {
        out[k] = merge(out[k].clone(), c);
    }
    Ok(out)
}

fn q(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

/// `G(z) = Σ_{m=1}^{order} g_m z^m` with `g_m = #{ρ ∈ NC(2m) : λ_{2,m} ∨ ρ = 1}`.
pub fn psi1_generator(order: usize) -> Result<TruncatedSeries<BigRational>> {
    let g = (1..=order).map(|m| psi1_counts(m).map(|c| q(c.connected))).collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::from_fn(order, |m| if m == 0 { q(0) } else { g[m - 1].clone() }))
}

/// `G(z) = Σ_m g_m z^m` with `g_m = #{(π, ρ) ∈ NC(m)^2 : π ∨ ρ = 1}`.
pub fn psi3_generator(order: usize) -> Result<TruncatedSeries<BigRational>> {
    let g = (1..=order).map(|m| psi3_counts(m).map(|c| q(c.connected))).collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::from_fn(order, |m| if m == 0 { q(0) } else { g[m - 1].clone() }))
}

fn bivariate_from(order: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Bivariate {
    TruncatedSeries::from_fn(order, |k| TruncatedSeries::from_fn(order, |n| f(k, n)))
}

/// `G(w) = Σ_m g_m(y) w^m` where `[y^n] g_m` counts `π ∈ Int(n)` with `m`
/// blocks and `ρ ∈ NC(n)` with `π ∨ ρ = 1`. Both variables are truncated
/// at `order`, which loses nothing since `g_m = O(y^m)`.
pub fn psi2_generator(order: usize) -> Result<Bivariate> {
    let rows = (1..=order).map(psi2_counts).collect::<Result<Vec<_>>>()?;
    Ok(bivariate_from(order, |m, n| {
        if m == 0 || n == 0 || m > n {
            q(0)
        } else {
            q(rows[n - 1][m].connected)
        }
    }))
}

/// `Σ_m Σ_{ρ ∈ NC(2m)} |λ_{2,m} ∨ ρ| z^m`.
pub fn psi1_join_sums(order: usize) -> Result<TruncatedSeries<BigRational>> {
    let s = (1..=order).map(|m| psi1_counts(m).map(|c| q(c.join_sum))).collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::from_fn(order, |m| if m == 0 { q(0) } else { s[m - 1].clone() }))
}

/// `Σ_n Σ_{π,ρ ∈ NC(n)} |π ∨ ρ| z^n`.
pub fn psi3_join_sums(order: usize) -> Result<TruncatedSeries<BigRational>> {
    let s = (1..=order).map(|n| psi3_counts(n).map(|c| q(c.join_sum))).collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::from_fn(order, |n| if n == 0 { q(0) } else { s[n - 1].clone() }))
}

/// `Σ_n y^n Σ_{π ∈ Int(n), ρ} z^{|π|} |π ∨ ρ|`.
pub fn psi2_join_sums(order: usize) -> Result<Bivariate> {
    let rows = (1..=order).map(psi2_counts).collect::<Result<Vec<_>>>()?;
    Ok(bivariate_from(order, |k, n| {
        if k == 0 || n == 0 || k > n {
            q(0)
        } else {
            q(rows[n - 1][k].join_sum)
        }
    }))
}

/// `Ψ1(z, 1) = Σ_{m≥1} Cat_{2m} z^m`.
pub fn psi1_at_one(order: usize) -> TruncatedSeries<BigRational> {
    TruncatedSeries::from_fn(order, |m| if m == 0 { q(0) } else { q(catalan(2 * m)) })
}

/// `Ψ3(z, 1) = Σ_{n≥1} Cat_n^2 z^n`.
pub fn psi3_at_one(order: usize) -> TruncatedSeries<BigRational> {
    TruncatedSeries::from_fn(order, |n| if n == 0 { q(0) } else { q(catalan(n).pow(2)) })
}

/// `Ψ2(z, 1) = Σ_{n≥1} Cat_n z (1+z)^{n-1} y^n`.
pub fn psi2_at_one(order: usize) -> Bivariate {
    bivariate_from(order, |k, n| {
        if k == 0 || n == 0 || k > n {
            q(0)
        } else {
            q(catalan(n) * binomial(n as u64 - 1, k as u64 - 1))
        }
    })
}
