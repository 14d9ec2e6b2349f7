//! Brute-force counts over `Int(n) × NC(n)` and `Ĩnt(n) × NC(n)`.

use rayon::prelude::*;

use crate::error::Result;
use crate::meander::Prepared;
use crate::nc::{enumerate_int, enumerate_int_cyclic, enumerate_nc, NcPartition};

fn meanders_by_blocks(n: usize, tops: Vec<NcPartition>) -> Result<Vec<u64>> {
    let bottoms: Vec<Prepared> = enumerate_nc(n)?.map(|p| Prepared::new(&p)).collect();
    Ok(tops
        .par_iter()
        .map_init(Vec::new, |seen, pi| {
            let a = Prepared::new(pi);
            let hits = bottoms.iter().filter(|b| a.components(b, seen) == 1).count() as u64;
            let mut row = vec![0u64; n + 1];
            row[pi.num_blocks()] = hits;
            row
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        ))
}

/// Exhaustive count of meanders with interval top; entry `m` counts tops
/// with `m` blocks (entry 0 is unused).
pub fn exhaustive_shallow_by_blocks(n: usize) -> Result<Vec<u64>> {
    meanders_by_blocks(n, enumerate_int(n)?.collect())
}

/// As [`exhaustive_shallow_by_blocks`] for rotated interval tops.
pub fn exhaustive_cyclic_by_blocks(n: usize) -> Result<Vec<u64>> {
    meanders_by_blocks(n, enumerate_int_cyclic(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_three() {
        assert_eq!(exhaustive_shallow_by_blocks(3).unwrap(), [0, 1, 4, 1]);
        assert_eq!(exhaustive_cyclic_by_blocks(3).unwrap().iter().sum::<u64>(), 8);
    }
}
