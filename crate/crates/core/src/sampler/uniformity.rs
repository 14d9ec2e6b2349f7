use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use super::estimate::trial_rng;
use super::random::{random_interval, random_nc};
use crate::error::{Error, Result};
use crate::nc::{enumerate_int, enumerate_nc, NcPartition};

/// Largest `n` for [`uniformity_test`].
pub const UNIFORMITY_MAX: usize = 10;

const CHUNK: u64 = 4096;

/// Which sampler to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Nc,
    Interval,
}

/// Pearson chi-square test of observed frequencies against the uniform
/// distribution on the family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChiSquare {
    pub n: usize,
    pub family: Family,
    pub samples: u64,
    pub seed: u64,
    pub counts: Vec<u64>,
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    /// Largest `|observed - expected|` in binomial standard deviations.
    pub max_abs_z: f64,
}

/// Draws `samples` values and compares their frequencies with the
/// uniform distribution; categories follow the enumeration order.
///
/// Samples are drawn in chunks of 4096, chunk `c` from stream `c`.
pub fn uniformity_test(n: usize, samples: u64, seed: u64, family: Family) -> Result<ChiSquare> {
    if n == 0 || n > UNIFORMITY_MAX || samples == 0 {
        return Err(Error::Size(format!(
            "need 1 <= n <= {UNIFORMITY_MAX} and samples >= 1, got n = {n}, samples = {samples}"
        )));
    }
    let values: Vec<NcPartition> = match family {
        Family::Nc => enumerate_nc(n)?.collect(),
        Family::Interval => enumerate_int(n)?.collect(),
    };
    let index: HashMap<&NcPartition, usize> = values.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let k = values.len();
    let counts = (0..samples.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut rng = trial_rng(seed, c);
            let mut counts = vec![0u64; k];
            for _ in c * CHUNK..((c + 1) * CHUNK).min(samples) {
                let p = match family {
                    Family::Nc => random_nc(n, &mut rng),
                    Family::Interval => random_interval(n, &mut rng),
                }
                .expect("n >= 1");
                counts[index[&p]] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; k],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let expected = samples as f64 / k as f64;
    let sd = (expected * (1.0 - 1.0 / k as f64)).sqrt();
    let statistic = counts.iter().map(|&o| (o as f64 - expected).powi(2) / expected).sum();
    let max_abs_z = counts
        .iter()
        .map(|&o| if sd > 0.0 { (o as f64 - expected).abs() / sd } else { 0.0 })
        .fold(0.0, f64::max);
    let dof = k - 1;
    let p_value = if dof == 0 {
        1.0
    } else {
        let dist = ChiSquared::new(dof as f64).expect("positive degrees of freedom");
        1.0 - dist.cdf(statistic)
    };
    Ok(ChiSquare {
        n,
        family,
        samples,
        seed,
        counts,
        statistic,
        dof,
        p_value,
        max_abs_z,
    })
}
