use num_bigint::BigUint;
use num_traits::{One, Zero};
use statrs::function::gamma::ln_gamma;

use super::profile::DegreeProfile;
use crate::error::{Error, Result};
use crate::nc::{binomial, exact_div, factorial, fuss_catalan};

fn check_range(n: usize, m: usize) -> Result<()> {
    if m == 0 || m > n {
        Err(Error::Domain(format!("need 1 <= m <= n, got n = {n}, m = {m}")))
    } else {
        Ok(())
    }
}

/// `C(n, m-1) · C(n+m-1, n-m)`, the common numerator of both per-block counts.
fn numerator(n: usize, m: usize) -> BigUint {
    let (n, m) = (n as u64, m as u64);
    binomial(n, m - 1) * binomial(n + m - 1, n - m)
}

/// Meanders `M(π, ρ)` with `π ∈ Int(n)` having `m` blocks:
/// `C(n, m-1) C(n+m-1, n-m) / n`.
pub fn count_shallow_meanders_by_blocks(n: usize, m: usize) -> Result<BigUint> {
    check_range(n, m)?;
    Ok(exact_div(numerator(n, m), &BigUint::from(n)))
}

/// Meanders `M(π, ρ)` with `π ∈ Int(n)`.
pub fn count_shallow_meanders(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    (1..=n).map(|m| count_shallow_meanders_by_blocks(n, m)).sum()
}

/// Meanders whose top is a rotation of an interval partition with `m`
/// blocks: `1` when `m = 1`, otherwise `C(n, m-1) C(n+m-1, n-m) / m`.
pub fn count_cyclic_shallow(n: usize, m: usize) -> Result<BigUint> {
    check_range(n, m)?;
    if m == 1 {
        return Ok(BigUint::one());
    }
    Ok(exact_div(numerator(n, m), &BigUint::from(m)))
}

/// Sum of [`count_cyclic_shallow`] over `m`.
pub fn count_cyclic_shallow_total(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    (1..=n).map(|m| count_cyclic_shallow(n, m)).sum()
}

fn check_profile(p: &DegreeProfile, parts: usize, total: usize, name: &str) -> Result<()> {
    if p.m() != parts || p.n() != total {
        return Err(Error::Validation(format!(
            "profile {name} = {p} needs {parts} parts summing to {total}, has {} summing to {}",
            p.m(),
            p.n()
        )));
    }
    Ok(())
}

/// `Π_k k^{j_k} / j_k!` as an exact fraction `(num, den)`.
fn black_weight(j: &DegreeProfile) -> (BigUint, BigUint) {
    j.iter().fold((BigUint::one(), BigUint::one()), |(num, den), (k, c)| {
        (num * BigUint::from(k).pow(c as u32), den * factorial(c as u64))
    })
}

fn white_weight(i: &DegreeProfile) -> BigUint {
    i.iter().fold(BigUint::one(), |den, (_, c)| den * factorial(c as u64))
}

/// Meanders with interval top whose black blocks have sizes `j` and white
/// blocks sizes `i`: `m! (n-m)! Π 1/i_ℓ! Π k^{j_k}/j_k!`.
pub fn count_n(m: usize, n: usize, i: &DegreeProfile, j: &DegreeProfile) -> Result<BigUint> {
    check_range(n, m)?;
    check_profile(i, n - m + 1, n, "i")?;
    check_profile(j, m, n, "j")?;
    let (num, den) = black_weight(j);
    let num = factorial(m as u64) * factorial((n - m) as u64) * num;
    Ok(exact_div(num, &(den * white_weight(i))))
}

/// As [`count_n`], restricted to pairs where the block of `π` containing 1
/// has size `a`: `(j_a / m) · N(m, n; i, j)`.
pub fn count_na(a: usize, m: usize, n: usize, i: &DegreeProfile, j: &DegreeProfile) -> Result<BigUint> {
    check_range(n, m)?;
    check_profile(i, n - m + 1, n, "i")?;
    check_profile(j, m, n, "j")?;
    let ja = j.count(a);
    if ja == 0 {
        return Err(Error::Validation(format!("j has no part of size {a}")));
    }
    let (num, den) = black_weight(j);
    let num = BigUint::from(ja) * factorial((m - 1) as u64) * factorial((n - m) as u64) * num;
    Ok(exact_div(num, &(den * white_weight(i))))
}

/// Meanders with interval top whose blocks have sizes `j`, any bottom:
/// `m (n-1)! / (n-m+1)! · Π k^{j_k}/j_k!`.
pub fn count_n_blocks(m: usize, n: usize, j: &DegreeProfile) -> Result<BigUint> {
    check_range(n, m)?;
    check_profile(j, m, n, "j")?;
    let (num, den) = black_weight(j);
    let num = BigUint::from(m) * factorial((n - 1) as u64) * num;
    Ok(exact_div(num, &(den * factorial((n - m + 1) as u64))))
}

/// As [`count_n_blocks`] with the block containing 1 of size `a`.
pub fn count_na_blocks(a: usize, m: usize, n: usize, j: &DegreeProfile) -> Result<BigUint> {
    check_range(n, m)?;
    check_profile(j, m, n, "j")?;
    let ja = j.count(a);
    if ja == 0 {
        return Err(Error::Validation(format!("j has no part of size {a}")));
    }
    let (num, den) = black_weight(j);
    let num = BigUint::from(ja) * factorial((n - 1) as u64) * num;
    Ok(exact_div(num, &(den * factorial((n - m + 1) as u64))))
}

/// Meandric partners of `λ_{ℓ,m}`: `FCat_m^{(ℓ)} · ℓ^{m-1}`.
pub fn partners_lambda(ell: usize, m: usize) -> Result<BigUint> {
    if ell == 0 || m == 0 {
        return Err(Error::Domain("partners_lambda needs ell, m >= 1".into()));
    }
    Ok(fuss_catalan(ell, m)? * BigUint::from(ell).pow((m - 1) as u32))
}

fn ln_binomial(n: f64, k: f64) -> f64 {
    ln_gamma(n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(n - k + 1.0)
}

/// Natural logarithm of [`count_shallow_meanders`], evaluated in floating
/// point with log-gamma binomials and a log-sum-exp over `m`.
pub fn ln_count_shallow_meanders(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let nf = n as f64;
    let terms: Vec<f64> = (1..=n)
        .map(|m| {
            let mf = m as f64;
            ln_binomial(nf, mf - 1.0) + ln_binomial(nf + mf - 1.0, nf - mf) - nf.ln()
        })
        .collect();
    let max = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(max + terms.iter().map(|t| (t - max).exp()).sum::<f64>().ln())
}

/// Natural logarithm of a positive big integer.
pub fn ln_biguint(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "logarithm of zero");
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    let top = (x >> shift).to_u64_digits().first().copied().unwrap_or(0) as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
