use std::collections::BTreeSet;

use super::partition::NcPartition;
use crate::error::{check_limit, Result};

/// Largest `n` accepted by [`enumerate_nc`].
pub const MAX_NC_ORDER: usize = 20;
/// Largest `n` accepted by [`enumerate_int`].
pub const MAX_INT_ORDER: usize = 40;
/// Largest `n` accepted by [`enumerate_int_cyclic`] (the result is materialized).
pub const MAX_CYCLIC_ORDER: usize = 20;

/// Builds the partition encoded by a Dyck word (`true` = up step).
///
/// The word is read as the arc pattern of a non-crossing pairing on `2n`
/// points (up = left end of an arc). Point `i` of the partition sits just
/// after the pairing point `2i - 1`, and two points share a block when no
/// arc separates them.
pub fn partition_from_openers(word: &[bool]) -> NcPartition {
    debug_assert!(word.len() % 2 == 0);
    let n = word.len() / 2;
    let mut labels = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    let mut next_region = 1;
    for (p, &up) in word.iter().enumerate() {
        if up {
            stack.push(next_region);
            next_region += 1;
        } else {
            stack.pop();
        }
        if p % 2 == 0 {
            labels.push(*stack.last().expect("not a Dyck word"));
        }
    }
    NcPartition::from_labels_unchecked(&labels)
}

/// Lazily yields NC(n) in lexicographic order of Dyck words with up < down.
///
/// The last word, `(UD)^n`, gives `0_n`.
#[derive(Debug, Clone)]
pub struct NcIter {
    word: Vec<bool>,
    done: bool,
}

impl NcIter {
    fn new(n: usize) -> Self {
        let mut word = vec![true; n];
        word.extend(std::iter::repeat_n(false, n));
        NcIter { word, done: false }
    }

    fn advance(&mut self) -> bool {
        let len = self.word.len();
        let n = len / 2;
        let mut heights = Vec::with_capacity(len);
        let mut h = 0i64;
        for &up in &self.word {
            heights.push(h);
            h += if up { 1 } else { -1 };
        }
        for i in (0..len).rev() {
            if self.word[i] && heights[i] >= 1 {
                let ups_before = self.word[..i].iter().filter(|&&u| u).count();
                let ups_left = n - ups_before;
                self.word[i] = false;
                for (k, slot) in self.word[i + 1..].iter_mut().enumerate() {
                    *slot = k < ups_left;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for NcIter {
    type Item = NcPartition;

    fn next(&mut self) -> Option<NcPartition> {
        if self.done {
            return None;
        }
        let p = partition_from_openers(&self.word);
        self.done = !self.advance();
        Some(p)
    }
}

fn check_order(n: usize, max: usize) -> Result<()> {
    check_limit(n, max, "enumeration")
}

/// All of NC(n), `Cat_n` values, in Dyck-word lexicographic order.
pub fn enumerate_nc(n: usize) -> Result<NcIter> {
    check_order(n, MAX_NC_ORDER)?;
    Ok(NcIter::new(n))
}

/// The interval partition whose cuts are the set bits of `mask`
/// (bit `i` cuts between `i + 1` and `i + 2`).
pub fn interval_from_cuts(n: usize, mask: u64) -> NcPartition {
    let mut labels = Vec::with_capacity(n);
    let mut block = 0;
    for i in 0..n {
        labels.push(block);
        if mask >> i & 1 == 1 {
            block += 1;
        }
    }
    NcPartition::from_labels_unchecked(&labels)
}

/// All of Int(n), `2^(n-1)` values, ordered by the cut bitmask.
pub fn enumerate_int(n: usize) -> Result<impl Iterator<Item = NcPartition> + Clone> {
    check_order(n, MAX_INT_ORDER)?;
    Ok((0..1u64 << (n - 1)).map(move |mask| interval_from_cuts(n, mask)))
}

/// All rotations of interval partitions, `2^n - n` values (`1` when `n = 1`),
/// in canonical order.
pub fn enumerate_int_cyclic(n: usize) -> Result<Vec<NcPartition>> {
    check_order(n, MAX_CYCLIC_ORDER)?;
    let mut set = BTreeSet::new();
    for p in enumerate_int(n)? {
        for k in 0..n {
            set.insert(p.rotate(k));
        }
    }
    Ok(set.into_iter().collect())
}
