use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::random::{random_interval, random_nc};
use crate::error::{Error, Result};
use crate::meander::Prepared;
use crate::nc::NcPartition;

/// How the top partition of each sampled pair is chosen; the bottom is
/// always uniform on NC(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    /// Uniform on NC(n).
    All,
    /// Uniform on Int(n).
    IntervalTop,
    /// A fixed partition.
    FixedBase(NcPartition),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::All => f.write_str("all"),
            Mode::IntervalTop => f.write_str("interval-top"),
            Mode::FixedBase(p) => write!(f, "fixed-base:{p}"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    /// `all`, `interval-top` or `fixed-base:<partition>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Mode::All),
            "interval-top" => Ok(Mode::IntervalTop),
            _ => match s.strip_prefix("fixed-base:") {
                Some(p) => Ok(Mode::FixedBase(p.parse()?)),
                None => Err(Error::Parse(format!("unknown mode {s:?}"))),
            },
        }
    }
}

/// Monte Carlo estimate of the expected number of components.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Estimate {
    pub n: usize,
    pub mode: String,
    pub trials: u64,
    pub seed: u64,
    /// Sample mean of the component count.
    pub mean: f64,
    /// Standard error of `mean` (0 for a single trial).
    pub stderr: f64,
    /// `mean ± 1.96 stderr`.
    pub ci95: [f64; 2],
    /// `mean / n`.
    pub mean_per_n: f64,
}

/// Generator for trial `t`: ChaCha8 seeded from `seed`, on stream `t`.
pub fn trial_rng(seed: u64, t: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(t);
    rng
}

/// Samples `trials` pairs according to `mode` and averages the number of
/// components of the meandric system.
///
/// Trial `t` draws from [`trial_rng`]`(seed, t)` and sums are exact
/// integers, so the result does not depend on the thread count.
pub fn estimate_components(n: usize, trials: u64, seed: u64, mode: &Mode) -> Result<Estimate> {
    if n == 0 || trials == 0 {
        return Err(Error::Size("n and trials must be at least 1".into()));
    }
    let fixed = match mode {
        Mode::FixedBase(p) if p.n() != n => {
            return Err(Error::Size(format!("base partition has n = {}, expected {n}", p.n())))
        }
        Mode::FixedBase(p) => Some(Prepared::new(p)),
        _ => None,
    };
    let (sum, sum_sq) = (0..trials)
        .into_par_iter()
        .map_init(Vec::new, |seen, t| {
            let mut rng = trial_rng(seed, t);
            let drawn = match mode {
                Mode::FixedBase(_) => None,
                Mode::IntervalTop => Some(random_interval(n, &mut rng)),
                Mode::All => Some(random_nc(n, &mut rng)),
            };
            let drawn = drawn.map(|p| Prepared::new(&p.expect("n >= 1")));
            let top = fixed.as_ref().or(drawn.as_ref()).expect("top partition");
            let bottom = Prepared::new(&random_nc(n, &mut rng).expect("n >= 1"));
            let c = top.components(&bottom, seen) as u128;
            (c, c * c)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let t = trials as f64;
    let mean = sum as f64 / t;
    let stderr = if trials > 1 {
        let centered = trials as u128 * sum_sq - sum * sum;
        (centered as f64 / (t * (t - 1.0)) / t).sqrt()
    } else {
        0.0
    };
    Ok(Estimate {
        n,
        mode: mode.to_string(),
        trials,
        seed,
        mean,
        stderr,
        ci95: [mean - 1.96 * stderr, mean + 1.96 * stderr],
        mean_per_n: mean / n as f64,
    })
}
