use std::fmt;

use num_traits::{One, Zero};

use super::ring::Coefficient;
use crate::error::{size_mismatch, Error, Result};

/// A formal power series `c_0 + c_1 z + ... + c_N z^N` known to order `N`.
///
/// Every operation returns a series of the same order as its inputs, except
/// [`TruncatedSeries::derive`] (order drops by one) and
/// [`TruncatedSeries::truncate`].
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Size("a series needs at least one coefficient".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Series of order `order` whose leading coefficients are `prefix`
    /// (extra entries beyond `order` are an error), padded with zeros
    /// shaped like `zero`.
    pub fn from_prefix(order: usize, prefix: &[C], zero: &C) -> Result<Self> {
        if prefix.len() > order + 1 {
            return Err(Error::Size(format!(
                "{} coefficients do not fit order {order}",
                prefix.len()
            )));
        }
        let mut coeffs = prefix.to_vec();
        coeffs.resize(order + 1, zero.zero_like());
        Ok(TruncatedSeries { coeffs })
    }

    /// Series whose coefficients are `f(0), ..., f(order)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `z^n`; fails above the truncation order.
    pub fn coefficient(&self, n: usize) -> Result<&C> {
        self.coeffs.get(n).ok_or_else(|| {
            Error::Domain(format!("coefficient {n} is beyond order {}", self.order()))
        })
    }

    pub(crate) fn zeros_like(&self) -> Self {
        let z = self.coeffs[0].zero_like();
        TruncatedSeries {
            coeffs: vec![z; self.coeffs.len()],
        }
    }

    pub(crate) fn ones_like(&self) -> Self {
        let mut s = self.zeros_like();
        s.coeffs[0] = self.coeffs[0].one_like();
        s
    }

    /// Series of the same order whose only term is `c z^k` (zero if `k` is
    /// beyond the order).
    pub fn monomial_like(&self, k: usize, c: C) -> Self {
        let mut s = self.zeros_like();
        if k <= self.order() {
            s.coeffs[k] = c;
        }
        s
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(size_mismatch(self.order(), other.order()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a.add(b)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a.sub(b)))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn map(&self, f: impl Fn(&C) -> C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(C::neg)
    }

    pub fn scale(&self, k: i64) -> Self {
        self.map(|c| c.scale(k))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale_by(&self, c: &C) -> Self {
        self.map(|x| x.mul(c))
    }

    pub(crate) fn div_int(&self, k: i64) -> Option<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.div_int(k)).collect::<Option<Vec<C>>>()?;
        Some(TruncatedSeries { coeffs })
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut out = self.zeros_like();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    fn unit_inverse_of_constant(&self) -> Result<C> {
        self.coeffs[0]
            .inverse()
            .ok_or_else(|| Error::Domain(format!("constant term {} is not invertible", self.coeffs[0])))
    }

    /// `self / other`; `other` needs an invertible constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let inv0 = other.unit_inverse_of_constant()?;
        let mut q: Vec<C> = Vec::with_capacity(self.coeffs.len());
        for n in 0..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                if !other.coeffs[k].is_zero() {
                    acc = acc.sub(&other.coeffs[k].mul(&q[n - k]));
                }
            }
            q.push(acc.mul(&inv0));
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    pub fn inverse(&self) -> Result<Self> {
        self.ones_like().div(self)
    }

    /// Square root with constant term 1; needs constant term 1 and
    /// coefficients that can be halved.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain("sqrt needs constant term 1".into()));
        }
        let mut s: Vec<C> = vec![self.coeffs[0].clone()];
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc = acc.sub(&s[k].mul(&s[n - k]));
            }
            let c = acc
                .div_int(2)
                .ok_or_else(|| Error::Domain("sqrt needs halving in the coefficient ring".into()))?;
            s.push(c);
        }
        Ok(TruncatedSeries { coeffs: s })
    }

    /// `z f'(z)`.
    pub fn z_derive(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(k, c)| c.scale(k as i64)).collect(),
        }
    }

    /// Formal derivative; the result has order one less.
    pub fn derive(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::Size("cannot differentiate an order-0 series".into()));
        }
        Ok(TruncatedSeries {
            coeffs: self.z_derive().coeffs.into_iter().skip(1).collect(),
        })
    }

    /// Multiplication by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = self.zeros_like();
        for (i, c) in self.coeffs.iter().enumerate().take(self.coeffs.len().saturating_sub(k)) {
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    /// Drops the coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::Size(format!(
                "cannot raise order {} to {order}",
                self.order()
            )));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// `z f'(z) / f(z)`; needs an invertible constant term.
    pub fn log_derivative(&self) -> Result<Self> {
        self.z_derive().div(self)
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain("log needs constant term 1".into()));
        }
        let h = self.log_derivative()?;
        let mut out = self.zeros_like();
        for n in 1..self.coeffs.len() {
            out.coeffs[n] = h.coeffs[n]
                .div_int(n as i64)
                .ok_or_else(|| Error::Domain(format!("log coefficient {n} leaves the ring")))?;
        }
        Ok(out)
    }

    /// `self(inner(z))` for `inner` with zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Domain("composition needs a zero constant term".into()));
        }
        let mut acc = self.zeros_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }

    /// Sum of all coefficients (evaluation at 1 of the truncation).
    pub fn sum(&self) -> C {
        self.coeffs.iter().skip(1).fold(self.coeffs[0].clone(), |a, c| a.add(c))
    }
}

impl<C: Coefficient + Zero + One> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// Series of order `order` with the given leading coefficients.
    pub fn from_slice(order: usize, prefix: &[C]) -> Result<Self> {
        Self::from_prefix(order, prefix, &C::zero())
    }
}

impl<C: Coefficient> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}
