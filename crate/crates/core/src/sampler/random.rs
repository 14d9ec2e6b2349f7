use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::nc::{partition_from_openers, NcPartition};

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Size("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Uniform Dyck word of semilength `n` (`true` = up step).
///
/// Shuffles `n` up steps and `n + 1` down steps; exactly one rotation of
/// such a sequence has all proper prefix sums nonnegative, namely the one
/// starting after the first global minimum. Dropping its final down step
/// leaves a Dyck word, and each Dyck word comes from `2n + 1` sequences.
pub fn random_dyck_word<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<bool> {
    let mut steps = vec![true; n];
    steps.resize(2 * n + 1, false);
    steps.shuffle(rng);
    let (mut height, mut min, mut cut) = (0i64, 0i64, 0usize);
    for (i, &up) in steps.iter().enumerate() {
        height += if up { 1 } else { -1 };
        if height < min {
            min = height;
            cut = i + 1;
        }
    }
    let len = steps.len();
    steps.rotate_left(cut % len);
    assert_eq!(steps.pop(), Some(false), "cycle lemma rotation must end with a down step");
    let mut h = 0i64;
    for &up in &steps {
        h += if up { 1 } else { -1 };
        assert!(h >= 0, "cycle lemma rotation is not a Dyck word");
    }
    steps
}

/// Uniform element of NC(n) through a uniform Dyck word.
pub fn random_nc<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<NcPartition> {
    check_n(n)?;
    Ok(partition_from_openers(&random_dyck_word(n, rng)))
}

/// Uniform element of Int(n): each of the `n - 1` gaps is cut independently
/// with probability 1/2.
pub fn random_interval<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<NcPartition> {
    check_n(n)?;
    let mut labels = Vec::with_capacity(n);
    let mut block = 0;
    for i in 0..n {
        if i > 0 && rng.random_bool(0.5) {
            block += 1;
        }
        labels.push(block);
    }
    Ok(NcPartition::from_labels_unchecked(&labels))
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn dyck_words_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..40 {
            let w = random_dyck_word(n, &mut rng);
            assert_eq!(w.len(), 2 * n);
            assert_eq!(w.iter().filter(|&&u| u).count(), n);
        }
    }

    #[test]
    fn determinism_and_trivial_sizes() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20).map(|_| random_nc(9, &mut rng).unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(random_interval(1, &mut rng).unwrap().to_string(), "1");
        assert_eq!(random_nc(1, &mut rng).unwrap().to_string(), "1");
        assert!(random_nc(0, &mut rng).is_err());
        assert!(random_interval(300, &mut rng).unwrap().is_interval());
    }
}
