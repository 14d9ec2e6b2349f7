use std::fmt;

use crate::error::{Error, Result};
use crate::nc::{partition_from_openers, NcPartition};

/// A non-crossing perfect matching of the points `1, ..., 2n` on a line,
/// numbered left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairingDiagram {
    mate: Vec<usize>,
}

impl PairingDiagram {
    /// Builds a pairing from `mate[p - 1]`, the 1-based partner of point `p`.
    pub fn from_mates(mate: &[usize]) -> Result<Self> {
        let len = mate.len();
        if len == 0 || len % 2 == 1 {
            return Err(Error::Size(format!("a pairing needs an even, positive number of points, got {len}")));
        }
        for (p, &q) in mate.iter().enumerate() {
            if q == 0 || q > len || q == p + 1 || mate[q - 1] != p + 1 {
                return Err(Error::Validation(format!("point {} is not properly matched", p + 1)));
            }
        }
        let mut stack = Vec::new();
        for (p, &q) in mate.iter().enumerate() {
            if q > p + 1 {
                stack.push(q);
            } else if stack.pop() != Some(p + 1) {
                return Err(Error::Validation("pairing is crossing".into()));
            }
        }
        Ok(PairingDiagram {
            mate: mate.iter().map(|q| q - 1).collect(),
        })
    }

    /// Builds a pairing from its arcs, given as 1-based point pairs.
    pub fn from_arcs(arcs: &[(usize, usize)]) -> Result<Self> {
        let mut mate = vec![0; 2 * arcs.len()];
        for &(a, b) in arcs {
            for (x, y) in [(a, b), (b, a)] {
                let slot = mate
                    .get_mut(x.wrapping_sub(1))
                    .ok_or_else(|| Error::Validation(format!("point {x} out of range")))?;
                if *slot != 0 {
                    return Err(Error::Validation(format!("point {x} used twice")));
                }
                *slot = y;
            }
        }
        Self::from_mates(&mate)
    }

    pub fn n_pairs(&self) -> usize {
        self.mate.len() / 2
    }

    /// Partner of the 1-based point `p`.
    pub fn mate(&self, p: usize) -> usize {
        self.mate[p - 1] + 1
    }

    pub(crate) fn mates0(&self) -> &[usize] {
        &self.mate
    }

    /// Arcs `(a, b)` with `a < b`, sorted by left end.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter(|(p, q)| p < q)
            .map(|(p, q)| (p + 1, q + 1))
            .collect()
    }

    /// `true` at every left end of an arc: the Dyck word of the pairing.
    pub fn openers(&self) -> Vec<bool> {
        self.mate.iter().enumerate().map(|(p, &q)| q > p).collect()
    }

    /// Largest number of arcs nested above one another (a lone arc has depth 1).
    pub fn depth(&self) -> usize {
        let mut h = 0usize;
        let mut max = 0;
        for up in self.openers() {
            if up {
                h += 1;
                max = max.max(h);
            } else {
                h -= 1;
            }
        }
        max
    }

    /// Shallow pairings have nesting depth at most two; they are exactly the
    /// doublings of interval partitions.
    pub fn is_shallow(&self) -> bool {
        self.depth() <= 2
    }
}

impl fmt::Display for PairingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs().iter().map(|(a, b)| format!("({a},{b})")).collect();
        f.write_str(&parts.join(""))
    }
}

/// The doubling `∂(π)`: point `i` of `π` becomes the two pairing points
/// `2i - 1` and `2i`, and every block is fattened into the boundary of a
/// thin region.
///
/// A block `i_1 < ... < i_k` contributes the outer arc `(2 i_1 - 1, 2 i_k)`
/// and the inner arcs `(2 i_j, 2 i_{j+1} - 1)`.
pub fn doubling(pi: &NcPartition) -> PairingDiagram {
    let mut mate = vec![0usize; 2 * pi.n()];
    let mut link = |a: usize, b: usize| {
        mate[a - 1] = b - 1;
        mate[b - 1] = a - 1;
    };
    for block in pi.blocks() {
        let (first, last) = (block[0], block[block.len() - 1]);
        link(2 * first - 1, 2 * last);
        for w in block.windows(2) {
            link(2 * w[0], 2 * w[1] - 1);
        }
    }
    PairingDiagram { mate }
}

/// The inverse `c(·)` of [`doubling`]: points `q_i` placed just after `2i - 1`
/// are grouped by the region of the complement of the arcs they lie in.
pub fn pairing_to_partition(p: &PairingDiagram) -> NcPartition {
    partition_from_openers(&p.openers())
}
