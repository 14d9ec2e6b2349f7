use super::ring::Coefficient;
use super::TruncatedSeries;
use crate::error::{size_mismatch, Error, Result};

/// The unique `F` with zero constant term and `F = G(z (1 + F))` to order
/// `order`.
///
/// Iterates the map `F -> G(z(1+F))` from `F = 0`; each pass fixes at least
/// one more coefficient and the truncated fixed point is unique.
pub fn solve_functional<C: Coefficient>(g: &TruncatedSeries<C>, order: usize) -> Result<TruncatedSeries<C>> {
    if !g.coefficient(0)?.is_zero() {
        return Err(Error::Domain("G must have zero constant term".into()));
    }
    let g = g.truncate(order)?;
    let one = g.ones_like();
    let mut f = g.zeros_like();
    for _ in 0..=order {
        let next = g.compose(&one.add(&f)?.shift(1))?;
        if next == f {
            break;
        }
        f = next;
    }
    Ok(f)
}

/// `∂F/∂t` at `t = 1` for `F(z,t) = t G(z(1+F))`, from `F(z,1)` and its
/// `z`-derivative times `z`: `F + zF_z - zF_z / (1 + F)`.
pub fn dt_at_one<C: Coefficient>(f: &TruncatedSeries<C>, z_fz: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    if f.order() != z_fz.order() {
        return Err(size_mismatch(f.order(), z_fz.order()));
    }
    let denom = f.ones_like().add(f)?;
    f.add(z_fz)?.sub(&z_fz.div(&denom)?)
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::nc::catalan;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn catalan_from_geometric() {
        let g = TruncatedSeries::from_fn(8, |k| q((k > 0) as i64));
        let f = solve_functional(&g, 8).unwrap();
        for n in 1..=8 {
            assert_eq!(f.coefficient(n).unwrap(), &BigRational::from_integer(catalan(n).into()));
        }
        assert_eq!(f.coefficient(4).unwrap(), &q(14));
    }

    #[test]
    fn singleton_generator() {
        // Only singleton blocks carry weight, so F = z + z^2 + ...
        let g = TruncatedSeries::from_slice(5, &[q(0), q(1)]).unwrap();
        assert_eq!(solve_functional(&g, 5).unwrap(), TruncatedSeries::from_fn(5, |k| q((k > 0) as i64)));
        assert!(solve_functional(&TruncatedSeries::<BigRational>::one(5), 5).is_err());
        assert!(solve_functional(&g, 6).is_err());
    }

    #[test]
    fn zero_series() {
        let z = TruncatedSeries::<BigRational>::zero(6);
        assert_eq!(dt_at_one(&z, &z).unwrap(), z);
        assert!(dt_at_one(&z, &TruncatedSeries::zero(5)).is_err());
    }
}
