use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Catalan number `Cat_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    let n = n as u64;
    binomial(2 * n, n) / (n + 1)
}

/// Narayana number `N(n, k) = C(n, k) C(n, k - 1) / n`: the number of
/// partitions in NC(n) with `k` blocks.
pub fn narayana(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::Domain(format!("narayana({n}, {k}) needs 1 <= k <= n")));
    }
    let (n, k) = (n as u64, k as u64);
    Ok(exact_div(binomial(n, k) * binomial(n, k - 1), &BigUint::from(n)))
}

/// Fuss-Catalan number `C(ℓm, m) / ((ℓ - 1)m + 1)`.
pub fn fuss_catalan(ell: usize, m: usize) -> Result<BigUint> {
    if ell == 0 {
        return Err(Error::Domain("fuss_catalan needs ell >= 1".into()));
    }
    let (ell, m) = (ell as u64, m as u64);
    Ok(exact_div(
        binomial(ell * m, m),
        &BigUint::from((ell - 1) * m + 1),
    ))
}

pub(crate) fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Division that must leave no remainder.
pub(crate) fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "non-integral quotient");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let cats: Vec<u32> = (0..8).map(|n| catalan(n).try_into().unwrap()).collect();
        assert_eq!(cats, [1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(narayana(4, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(fuss_catalan(2, 3).unwrap(), BigUint::from(5u32));
        assert_eq!(fuss_catalan(3, 2).unwrap(), BigUint::from(3u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert!(narayana(3, 4).is_err());
    }

    #[test]
    fn narayana_sums_to_catalan() {
        for n in 1..30 {
            let s: BigUint = (1..=n).map(|k| narayana(n, k).unwrap()).sum();
            assert_eq!(s, catalan(n));
        }
    }

    #[test]
    fn fuss_catalan_two_is_catalan() {
        for m in 0..20 {
            assert_eq!(fuss_catalan(2, m).unwrap(), catalan(m));
        }
    }
}
