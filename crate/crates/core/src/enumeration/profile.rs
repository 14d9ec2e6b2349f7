use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A multiset of part sizes: `count(k)` parts of size `k`. Used for the
/// degree histograms `i` (white vertices) and `j` (black vertices).
///
/// `m()` is the number of parts and `n()` their total size.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreeProfile {
    counts: BTreeMap<usize, usize>,
}

impl DegreeProfile {
    /// From a dense vector: `v[k - 1]` parts of size `k`.
    pub fn from_dense(v: &[usize]) -> Self {
        v.iter()
            .enumerate()
            .map(|(k, &c)| (k + 1, c))
            .collect()
    }

    /// From the list of part sizes (a multiset, any order).
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let mut p = DegreeProfile::default();
        for &k in parts {
            if k == 0 {
                return Err(Error::Validation("part sizes must be positive".into()));
            }
            p.add(k, 1);
        }
        Ok(p)
    }

    pub fn add(&mut self, size: usize, count: usize) {
        if count > 0 {
            *self.counts.entry(size).or_insert(0) += count;
        }
    }

    /// Multiplicity of the part size `k`.
    pub fn count(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// Nonzero `(size, multiplicity)` pairs in increasing size.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    /// Number of parts, `Σ_k j_k`.
    pub fn m(&self) -> usize {
        self.counts.values().sum()
    }

    /// Total size, `Σ_k k j_k`.
    pub fn n(&self) -> usize {
        self.counts.iter().map(|(k, c)| k * c).sum()
    }

    /// Dense form up to the largest part size.
    pub fn to_dense(&self) -> Vec<usize> {
        let max = self.counts.keys().next_back().copied().unwrap_or(0);
        (1..=max).map(|k| self.count(k)).collect()
    }
}

impl FromIterator<(usize, usize)> for DegreeProfile {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut p = DegreeProfile::default();
        for (k, c) in iter {
            if k > 0 {
                p.add(k, c);
            }
        }
        p
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_dense())
    }
}

/// Integer partitions of `n` into exactly `m` positive parts, as profiles,
/// in decreasing lexicographic order of the non-increasing part list.
///
/// Lazy; each call to [`partitions`] starts afresh.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<usize>,
    n: usize,
    m: usize,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Integer partitions of `n` into exactly `m` parts.
pub fn partitions(n: usize, m: usize) -> Partitions {
    Partitions {
        parts: Vec::new(),
        n,
        m,
        state: State::Fresh,
    }
}

/// Appends the greedy (largest) non-increasing split of `rest` into
/// `slots` parts, each at most `cap`.
fn fill_greedy(parts: &mut Vec<usize>, mut rest: usize, slots: usize, cap: usize) {
    let mut cap = cap;
    for left in (1..=slots).rev() {
        let part = cap.min(rest - (left - 1));
        parts.push(part);
        rest -= part;
        cap = part;
    }
}

impl Iterator for Partitions {
    type Item = DegreeProfile;

    fn next(&mut self) -> Option<DegreeProfile> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if self.m > self.n || (self.m == 0) != (self.n == 0) {
                    self.state = State::Done;
                    return None;
                }
                fill_greedy(&mut self.parts, self.n, self.m, self.n);
            }
            State::Running => {
                let mut prefix: usize = self.parts.iter().sum();
                let mut found = false;
                for i in (0..self.m).rev() {
                    prefix -= self.parts[i];
                    let new = self.parts[i] - 1;
                    let slots = self.m - i - 1;
                    if new == 0 {
                        continue;
                    }
                    let rest = self.n - prefix - new;
                    if rest >= slots && rest <= slots * new {
                        self.parts.truncate(i);
                        self.parts.push(new);
                        fill_greedy(&mut self.parts, rest, slots, new);
                        found = true;
                        break;
                    }
                }
                if !found {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        Some(DegreeProfile::from_parts(&self.parts).expect("positive parts"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_round_trip() {
        let j = DegreeProfile::from_dense(&[0, 2]);
        assert_eq!(j.m(), 2);
        assert_eq!(j.n(), 4);
        assert_eq!(j.to_dense(), vec![0, 2]);
        let i = DegreeProfile::from_dense(&[2, 0, 1]);
        assert_eq!((i.m(), i.n()), (3, 5));
    }

    #[test]
    fn partition_counts() {
        // p(n, m): partitions of n into exactly m parts.
        let expected = [(5, 2, 2), (6, 3, 3), (7, 3, 4), (10, 4, 9), (1, 1, 1), (4, 5, 0)];
        for (n, m, c) in expected {
            let all: Vec<_> = partitions(n, m).collect();
            assert_eq!(all.len(), c, "p({n}, {m})");
            for p in &all {
                assert_eq!((p.n(), p.m()), (n, m));
            }
        }
    }
}
