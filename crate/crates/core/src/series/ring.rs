use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::TruncatedSeries;

/// Coefficient ring for [`TruncatedSeries`].
///
/// Zero and one are produced from an existing element so that rings whose
/// elements carry data (a truncation order, for nested series) can be used.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplication by an integer.
    fn scale(&self, k: i64) -> Self;
    /// Exact division by a nonzero integer, `None` if it leaves the ring.
    fn div_int(&self, k: i64) -> Option<Self>;
    /// Multiplicative inverse, `None` for non-units.
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

impl Coefficient for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: i64) -> Self {
        self * BigRational::from_integer(k.into())
    }
    fn div_int(&self, k: i64) -> Option<Self> {
        (k != 0).then(|| self / BigRational::from_integer(k.into()))
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Coefficient for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: i64) -> Self {
        self * k
    }
    fn div_int(&self, k: i64) -> Option<Self> {
        if k == 0 {
            return None;
        }
        let k = BigInt::from(k);
        (Zero::is_zero(&(self % &k))).then(|| self / k)
    }
    fn inverse(&self) -> Option<Self> {
        One::is_one(&Signed::abs(self)).then(|| self.clone())
    }
}

/// Nested series, for power series in several variables. Both operands
/// must share a truncation order.
impl<C: Coefficient> Coefficient for TruncatedSeries<C> {
    fn zero_like(&self) -> Self {
        self.zeros_like()
    }
    fn one_like(&self) -> Self {
        self.ones_like()
    }
    fn is_zero(&self) -> bool {
        self.coeffs().iter().all(Coefficient::is_zero)
    }
    fn add(&self, other: &Self) -> Self {
        TruncatedSeries::add(self, other).expect("nested series orders differ")
    }
    fn sub(&self, other: &Self) -> Self {
        TruncatedSeries::sub(self, other).expect("nested series orders differ")
    }
    fn mul(&self, other: &Self) -> Self {
        TruncatedSeries::mul(self, other).expect("nested series orders differ")
    }
    fn neg(&self) -> Self {
        TruncatedSeries::neg(self)
    }
    fn scale(&self, k: i64) -> Self {
        TruncatedSeries::scale(self, k)
    }
    fn div_int(&self, k: i64) -> Option<Self> {
        TruncatedSeries::div_int(self, k)
    }
    fn inverse(&self) -> Option<Self> {
        TruncatedSeries::inverse(self).ok()
    }
}
