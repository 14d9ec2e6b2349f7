use std::fmt;

use crate::error::{size_mismatch, Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Products follow `(σ·τ)(i) = σ(τ(i))`: the right factor acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from the 1-based images `σ(1), ..., σ(n)`.
    pub fn from_images(image: &[usize]) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in image {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::Validation(format!(
                    "{image:?} is not a permutation of 1..={n}"
                )));
            }
        }
        Ok(Permutation {
            image: image.iter().map(|x| x - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(image: Vec<usize>) -> Self {
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// The long cycle `(1 2 ... n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            image: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    /// `self · other`, i.e. `i ↦ self(other(i))`.
    ///
    /// # Panics
    /// If the sizes differ; see [`Permutation::try_compose`].
    pub fn compose(&self, other: &Permutation) -> Self {
        self.try_compose(other).expect("permutation sizes differ")
    }

    pub fn try_compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(size_mismatch(self.n(), other.n()));
        }
        Ok(Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        })
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x];
            }
        }
        count
    }

    /// Length `‖σ‖ = n − #cycles(σ)` in the transposition metric.
    pub fn length(&self) -> usize {
        self.n() - self.cycle_count()
    }

    /// Cycles as 1-based element lists, each starting at its minimum,
    /// ordered by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points, e.g. `(1 3 4 9)(2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_right_factor_first() {
        let s = Permutation::from_images(&[2, 1, 3]).unwrap();
        let t = Permutation::from_images(&[1, 3, 2]).unwrap();
        // s(t(1)) = s(1) = 2, s(t(2)) = s(3) = 3, s(t(3)) = s(2) = 1
        assert_eq!(s.compose(&t).images(), vec![2, 3, 1]);
    }

    #[test]
    fn cycles_and_length() {
        let c = Permutation::long_cycle(5);
        assert_eq!(c.cycle_count(), 1);
        assert_eq!(c.length(), 4);
        assert_eq!(c.to_string(), "(1 2 3 4 5)");
        assert!(c.compose(&c.inverse()).is_identity());
        assert_eq!(Permutation::identity(3).cycle_count(), 3);
    }

    #[test]
    fn invalid_images_rejected() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[3, 1]).is_err());
    }
}
