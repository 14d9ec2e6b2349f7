use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::permutation::Permutation;
use crate::error::{size_mismatch, Error, Result};

/// A partition of `{1, ..., n}`, crossing or not.
///
/// Stored canonically: blocks are numbered by their minimum element and
/// `labels[i]` is the block index of element `i + 1`. Two values are equal
/// exactly when they describe the same partition. The derived order is the
/// lexicographic order of the label strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition from an arbitrary labelling: elements `i` and `j`
    /// share a block iff `labels[i - 1] == labels[j - 1]`.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Size("a partition needs n >= 1".into()));
        }
        Ok(Self::canonical(labels))
    }

    /// Builds a partition from blocks of 1-based elements, in any order.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Size("a partition needs n >= 1".into()));
        }
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Validation("empty block".into()));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::Validation(format!("element {e} outside 1..={n}")));
                }
                if labels[e - 1] != usize::MAX {
                    return Err(Error::Validation(format!("element {e} appears twice")));
                }
                labels[e - 1] = b;
            }
        }
        if let Some(missing) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Validation(format!("element {} is missing", missing + 1)));
        }
        Ok(Self::canonical(&labels))
    }

    pub(crate) fn canonical(raw: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let labels = raw
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let next = remap.len();
                let b = *remap.entry(*l).or_insert(next);
                if b == blocks.len() {
                    blocks.push(Vec::new());
                }
                blocks[b].push(i + 1);
                b
            })
            .collect();
        SetPartition { labels, blocks }
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Number of blocks, written `|π|`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks in canonical order; each block is ascending and 1-based.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Canonical block index of every element (position `i` is element `i + 1`).
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Block index of the 1-based element `e`.
    pub fn block_of(&self, e: usize) -> usize {
        self.labels[e - 1]
    }

    /// The block containing the 1-based element `e`.
    pub fn block_containing(&self, e: usize) -> &[usize] {
        &self.blocks[self.labels[e - 1]]
    }

    /// Returns two block indices that cross, if any.
    ///
    /// Single left-to-right pass with a stack of open blocks: when an element
    /// of an open block is met and that block is not on top of the stack,
    /// the block on top crosses it.
    pub fn find_crossing(&self) -> Option<(usize, usize)> {
        let mut last = vec![0usize; self.blocks.len()];
        for (b, block) in self.blocks.iter().enumerate() {
            last[b] = *block.last().unwrap();
        }
        let mut open = vec![false; self.blocks.len()];
        let mut stack: Vec<usize> = Vec::new();
        for (i, &b) in self.labels.iter().enumerate() {
            let e = i + 1;
            if open[b] {
                let top = *stack.last().unwrap();
                if top != b {
                    return Some((b, top));
                }
                if last[b] == e {
                    stack.pop();
                    open[b] = false;
                }
            } else if last[b] != e {
                open[b] = true;
                stack.push(b);
            }
        }
        None
    }

    pub fn is_noncrossing(&self) -> bool {
        self.find_crossing().is_none()
    }

    /// Reverse refinement order: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        self.n() == other.n()
            && self.blocks.iter().all(|block| {
                let target = other.labels[block[0] - 1];
                block.iter().all(|&e| other.labels[e - 1] == target)
            })
    }

    /// Every block is a run of consecutive integers.
    pub fn is_interval(&self) -> bool {
        self.blocks.iter().all(|b| b[b.len() - 1] - b[0] + 1 == b.len())
    }

    /// Every block is a run of consecutive integers modulo `n`.
    pub fn is_cyclic_interval(&self) -> bool {
        let n = self.n();
        // A cyclic-interval partition has at most one "wrapping" block and
        // each block has exactly one gap when read cyclically.
        self.blocks.iter().all(|b| {
            if b.len() == n {
                return true;
            }
            let starts = b
                .iter()
                .filter(|&&e| {
                    let prev = if e == 1 { n } else { e - 1 };
                    self.labels[prev - 1] != self.labels[e - 1]
                })
                .count();
            starts == 1
        })
    }

    /// Relabels `i ↦ i + k (mod n)`.
    pub fn rotate(&self, k: usize) -> SetPartition {
        let n = self.n();
        let mut labels = vec![0; n];
        for (i, &l) in self.labels.iter().enumerate() {
            labels[(i + k) % n] = l;
        }
        Self::canonical(&labels)
    }

    fn write_text(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, block) in self.blocks.iter().enumerate() {
            if b > 0 {
                f.write_str("/")?;
            }
            for (k, e) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_text(f)
    }
}

fn parse_blocks(s: &str) -> Result<(usize, Vec<Vec<usize>>)> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty partition".into()));
    }
    let mut blocks = Vec::new();
    let mut n = 0;
    for part in s.split('/') {
        let mut block = Vec::new();
        for tok in part.split(',') {
            let tok = tok.trim();
            let e: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("not a positive integer: {tok:?}")))?;
            n = n.max(e);
            block.push(e);
        }
        blocks.push(block);
    }
    Ok((n, blocks))
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses the text format `1,3,4,9/2/5,7,8/6`; `n` is the largest element.
    fn from_str(s: &str) -> Result<Self> {
        let (n, blocks) = parse_blocks(s)?;
        SetPartition::from_blocks(n, &blocks)
    }
}

/// A non-crossing partition of `{1, ..., n}`, an element of NC(n).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionJson", into = "PartitionJson")]
pub struct NcPartition(SetPartition);

impl Deref for NcPartition {
    type Target = SetPartition;

    fn deref(&self) -> &SetPartition {
        &self.0
    }
}

impl TryFrom<SetPartition> for NcPartition {
    type Error = Error;

    fn try_from(p: SetPartition) -> Result<Self> {
        match p.find_crossing() {
            None => Ok(NcPartition(p)),
            Some((a, b)) => Err(Error::Validation(format!(
                "partition {p} is crossing: blocks {:?} and {:?}",
                p.blocks[a], p.blocks[b]
            ))),
        }
    }
}

impl From<NcPartition> for SetPartition {
    fn from(p: NcPartition) -> Self {
        p.0
    }
}

impl NcPartition {
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        SetPartition::from_blocks(n, blocks)?.try_into()
    }

    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        SetPartition::from_labels(labels)?.try_into()
    }

    /// Labels known to describe a non-crossing partition.
    pub(crate) fn from_labels_unchecked(labels: &[usize]) -> Self {
        let p = SetPartition::canonical(labels);
        debug_assert!(p.is_noncrossing(), "{p} is crossing");
        NcPartition(p)
    }

    pub fn as_set_partition(&self) -> &SetPartition {
        &self.0
    }

    /// `0_n`: all singletons.
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self::from_labels_unchecked(&(0..n).collect::<Vec<_>>()))
    }

    /// `1_n`: a single block.
    pub fn one(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self::from_labels_unchecked(&vec![0; n]))
    }

    /// Blocks `{1, n}, {2, n-1}, ...`, with a middle singleton when `n` is odd.
    pub fn rainbow(n: usize) -> Result<Self> {
        check_n(n)?;
        let labels: Vec<usize> = (0..n).map(|i| i.min(n - 1 - i)).collect();
        Ok(Self::from_labels_unchecked(&labels))
    }

    /// `λ_{ℓ,m}`: `m` consecutive blocks of size `ℓ`, a partition of `{1, ..., ℓm}`.
    pub fn lambda_interval(ell: usize, m: usize) -> Result<Self> {
        if ell == 0 || m == 0 {
            return Err(Error::Size("lambda_interval needs ell, m >= 1".into()));
        }
        let labels: Vec<usize> = (0..ell * m).map(|i| i / ell).collect();
        Ok(Self::from_labels_unchecked(&labels))
    }

    /// Rotation `i ↦ i + k (mod n)`; NC(n) is closed under it.
    pub fn rotate(&self, k: usize) -> NcPartition {
        NcPartition(self.0.rotate(k))
    }

    /// The meet `π ∧ ρ`: non-empty pairwise intersections of blocks.
    pub fn meet(&self, other: &NcPartition) -> Result<NcPartition> {
        check_same(self, other)?;
        let nb = other.num_blocks();
        let labels: Vec<usize> = self
            .labels
            .iter()
            .zip(&other.labels)
            .map(|(&a, &b)| a * nb + b)
            .collect();
        Ok(Self::from_labels_unchecked(&labels))
    }

    /// The join `π ∨̃ ρ` in the lattice of all partitions (possibly crossing).
    pub fn join_all(&self, other: &NcPartition) -> Result<SetPartition> {
        check_same(self, other)?;
        let mut uf = UnionFind::new(self.n());
        for p in [self, other] {
            for block in p.blocks() {
                for w in block.windows(2) {
                    uf.union(w[0] - 1, w[1] - 1);
                }
            }
        }
        Ok(SetPartition::canonical(&uf.roots()))
    }

    /// The join `π ∨ ρ` in NC(n): merge crossing blocks of `π ∨̃ ρ` until
    /// none cross.
    pub fn join_nc(&self, other: &NcPartition) -> Result<NcPartition> {
        Ok(noncrossing_closure(self.join_all(other)?))
    }

    /// The permutation `P_π` that cycles every block increasingly.
    pub fn to_permutation(&self) -> Permutation {
        let mut image = vec![0; self.n()];
        for block in self.blocks() {
            for (k, &e) in block.iter().enumerate() {
                image[e - 1] = block[(k + 1) % block.len()] - 1;
            }
        }
        Permutation::from_zero_based(image)
    }

    /// Kreweras complement, defined by `P_{Kr(π)} = P_π^{-1} · P_{1_n}`
    /// with `(σ·τ)(i) = σ(τ(i))`.
    pub fn kreweras(&self) -> NcPartition {
        let n = self.n();
        let perm = self
            .to_permutation()
            .inverse()
            .compose(&Permutation::long_cycle(n));
        let kr = NcPartition::from_cycles(&perm);
        assert_eq!(kr.to_permutation(), perm, "Kreweras permutation is not of the form P_rho");
        kr
    }

    /// The partition whose blocks are the cycles of `perm`.
    fn from_cycles(perm: &Permutation) -> NcPartition {
        let mut labels = vec![usize::MAX; perm.n()];
        for (c, cycle) in perm.cycles().iter().enumerate() {
            for &e in cycle {
                labels[e - 1] = c;
            }
        }
        Self::from_labels_unchecked(&labels)
    }
}

/// Repeatedly merges a crossing pair of blocks; the result is the least
/// non-crossing partition above `p`.
pub(crate) fn noncrossing_closure(mut p: SetPartition) -> NcPartition {
    while let Some((a, b)) = p.find_crossing() {
        let labels: Vec<usize> = p
            .labels
            .iter()
            .map(|&l| if l == b { a } else { l })
            .collect();
        p = SetPartition::canonical(&labels);
    }
    NcPartition(p)
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for NcPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetPartition::from_str(s)?.try_into()
    }
}

/// Whether the given set partition of `{1, ..., n}` is non-crossing.
///
/// Fails if `blocks` is not a partition of `{1, ..., n}`.
pub fn is_noncrossing(n: usize, blocks: &[Vec<usize>]) -> Result<bool> {
    Ok(SetPartition::from_blocks(n, blocks)?.is_noncrossing())
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<PartitionJson> for NcPartition {
    type Error = Error;

    fn try_from(j: PartitionJson) -> Result<Self> {
        NcPartition::from_blocks(j.n, &j.blocks)
    }
}

impl From<NcPartition> for PartitionJson {
    fn from(p: NcPartition) -> Self {
        PartitionJson {
            n: p.n(),
            blocks: p.blocks().to_vec(),
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Size("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

pub(crate) fn check_same(a: &SetPartition, b: &SetPartition) -> Result<()> {
    if a.n() == b.n() {
        Ok(())
    } else {
        Err(size_mismatch(a.n(), b.n()))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if two different classes were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub(crate) fn roots(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|i| self.find(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NcPartition {
        s.parse().unwrap()
    }

    #[test]
    fn crossing_is_rejected() {
        assert!(!is_noncrossing(4, &[vec![1, 3], vec![2, 4]]).unwrap());
        assert!("1,3/2,4".parse::<NcPartition>().is_err());
        assert!(is_noncrossing(9, &[vec![1, 3, 4, 9], vec![2], vec![5, 7, 8], vec![6]]).unwrap());
        assert!(is_noncrossing(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(is_noncrossing(3, &[vec![1, 2]]).is_err());
    }

    #[test]
    fn extremes_are_noncrossing() {
        for n in 1..6 {
            assert_eq!(NcPartition::zero(n).unwrap().num_blocks(), n);
            assert_eq!(NcPartition::one(n).unwrap().num_blocks(), 1);
        }
        assert!(NcPartition::zero(0).is_err());
    }

    #[test]
    fn text_format_is_canonical() {
        let a = p("6/5,8,7/2/9,4,3,1");
        assert_eq!(a.to_string(), "1,3,4,9/2/5,7,8/6");
        assert_eq!(a, p("1,3,4,9/2/5,7,8/6"));
        assert!("1,x".parse::<NcPartition>().is_err());
        assert!("".parse::<NcPartition>().is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let a = p("1,3,4,9/2/5,7,8/6");
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":9,"blocks":[[1,3,4,9],[2],[5,7,8],[6]]}"#);
        let b: NcPartition = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<NcPartition>(r#"{"n":4,"blocks":[[1,3],[2,4]]}"#).is_err());
    }

    #[test]
    fn meet_examples() {
        let a = p("1,2/3,4");
        let b = p("1,4/2,3");
        assert_eq!(a.meet(&b).unwrap(), NcPartition::zero(4).unwrap());
        assert_eq!(a.meet(&NcPartition::one(4).unwrap()).unwrap(), a);
        assert_eq!(a.meet(&a).unwrap(), a);
        assert!(a.meet(&NcPartition::one(5).unwrap()).is_err());
    }

    #[test]
    fn join_examples() {
        let a = p("1,3/2/4");
        let b = p("2,4/1/3");
        let all = a.join_all(&b).unwrap();
        assert_eq!(all.to_string(), "1,3/2,4");
        assert!(!all.is_noncrossing());
        assert_eq!(a.join_nc(&b).unwrap(), NcPartition::one(4).unwrap());
        let z = NcPartition::zero(4).unwrap();
        assert_eq!(a.join_all(&z).unwrap(), *a.as_set_partition());
        assert_eq!(a.join_nc(&z).unwrap(), a);
    }

    #[test]
    fn join_all_of_gamma_example_has_two_blocks() {
        let pi = p("1,3,4,9/2/5,7,8/6");
        let rho = p("1,2,3,5,7/4/6/8,9");
        assert_eq!(pi.join_all(&rho).unwrap().num_blocks(), 2);
    }

    #[test]
    fn permutation_of_partition() {
        let a = p("1,3,4,9/2/5,7,8/6");
        assert_eq!(a.to_permutation().to_string(), "(1 3 4 9)(2)(5 7 8)(6)");
        assert_eq!(a.to_permutation().cycle_count(), a.num_blocks());
        assert!(NcPartition::zero(5).unwrap().to_permutation().is_identity());
        assert_eq!(NcPartition::one(5).unwrap().to_permutation(), Permutation::long_cycle(5));
    }

    #[test]
    fn kreweras_examples() {
        assert_eq!(p("1,2/3").kreweras(), p("1/2,3"));
        assert_eq!(
            NcPartition::zero(6).unwrap().kreweras(),
            NcPartition::one(6).unwrap()
        );
        assert_eq!(
            NcPartition::one(6).unwrap().kreweras(),
            NcPartition::zero(6).unwrap()
        );
    }

    #[test]
    fn named_partitions() {
        assert_eq!(NcPartition::lambda_interval(2, 2).unwrap(), p("1,2/3,4"));
        assert_eq!(NcPartition::rainbow(5).unwrap(), p("1,5/2,4/3"));
        assert_eq!(NcPartition::rainbow(4).unwrap(), p("1,4/2,3"));
        assert_eq!(
            NcPartition::lambda_interval(1, 4).unwrap(),
            NcPartition::zero(4).unwrap()
        );
        assert!(NcPartition::lambda_interval(0, 3).is_err());
    }

    #[test]
    fn interval_predicates() {
        assert!(p("1,2/3/4,5").is_interval());
        assert!(!p("1,5/2,3,4").is_interval());
        assert!(p("1,5/2,3,4").is_cyclic_interval());
        assert!(!p("1,3/2").is_interval());
        assert!(p("1,3/2").is_cyclic_interval());
        assert!(!p("1,4/2,3/5").is_cyclic_interval());
        assert!(NcPartition::one(4).unwrap().is_cyclic_interval());
    }
}
