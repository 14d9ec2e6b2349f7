//! Exhaustive scans over NC(n) × NC(n). Work is split across threads by
//! index ranges and merged with exact integer sums.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::distance::{
    component_count_arcs, component_count_cycles, distance_bound_b, distance_via_join_all,
    hasse_distance, Prepared,
};
use super::hasse::{HasseDiagram, BFS_ORACLE_MAX};
use crate::error::{check_limit, Result};
use crate::nc::{enumerate_nc, NcPartition};

/// Largest `n` for which meandric partners are counted by exhaustion.
pub const PARTNERS_MAX: usize = 12;
/// Largest `n` for the Kreweras-orbit experiment, which scans all of NC(n)².
pub const EXPERIMENT_MAX: usize = 10;

fn check(n: usize, max: usize, what: &str) -> Result<()> {
    check_limit(n, max, what)
}

/// Number of `ρ ∈ NC(n)` with `M(π, ρ)` a meander.
pub fn count_meandric_partners(pi: &NcPartition) -> Result<u64> {
    check(pi.n(), PARTNERS_MAX, "count_meandric_partners")?;
    let a = Prepared::new(pi);
    let all: Vec<NcPartition> = enumerate_nc(pi.n())?.collect();
    Ok(all
        .par_iter()
        .map_init(Vec::new, |seen, rho| {
            (a.components(&Prepared::new(rho), seen) == 1) as u64
        })
        .sum())
}

/// Totals over all ordered pairs of NC(n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairTotals {
    pub n: usize,
    pub pairs: u64,
    pub sum_distance: u64,
    pub sum_bound_b: u64,
    pub meanders: u64,
}

impl PairTotals {
    pub fn mean_distance(&self) -> BigRational {
        BigRational::new(BigInt::from(self.sum_distance), BigInt::from(self.pairs))
    }

    pub fn mean_bound_b(&self) -> BigRational {
        BigRational::new(BigInt::from(self.sum_bound_b), BigInt::from(self.pairs))
    }
}

/// Sums `d_H` and `b` over NC(n)² and counts meanders.
pub fn pair_totals(n: usize) -> Result<PairTotals> {
    check(n, BFS_ORACLE_MAX, "pair_totals")?;
    let all: Vec<NcPartition> = enumerate_nc(n)?.collect();
    let (sd, sb, m) = all
        .par_iter()
        .map(|pi| {
            let mut acc = (0u64, 0u64, 0u64);
            for rho in &all {
                let d = hasse_distance(pi, rho).unwrap() as u64;
                acc.0 += d;
                acc.1 += distance_bound_b(pi, rho).unwrap() as u64;
                acc.2 += (d as usize + 1 == n) as u64;
            }
            acc
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    Ok(PairTotals {
        n,
        pairs: (all.len() * all.len()) as u64,
        sum_distance: sd,
        sum_bound_b: sb,
        meanders: m,
    })
}

/// The four distance computations that must agree on every pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiveWay {
    pub pi: String,
    pub rho: String,
    pub bfs: usize,
    pub via_cycles: usize,
    pub via_arcs: usize,
    pub via_join: usize,
}

/// Checks `BFS distance = n − cycle count = n − arc count = |π|+|ρ|−2|π∨̃ρ|`
/// on all pairs of NC(n); returns the first disagreement in enumeration order.
pub fn five_way_mismatch(n: usize) -> Result<Option<FiveWay>> {
    let h = HasseDiagram::new(n)?;
    let v = h.vertices();
    let found = (0..v.len()).into_par_iter().find_map_first(|i| {
        (0..v.len()).find_map(|j| {
            let (pi, rho) = (&v[i], &v[j]);
            let row = FiveWay {
                pi: pi.to_string(),
                rho: rho.to_string(),
                bfs: h.distance(i, j),
                via_cycles: n - component_count_cycles(pi, rho).unwrap(),
                via_arcs: n - component_count_arcs(pi, rho).unwrap(),
                via_join: distance_via_join_all(pi, rho).unwrap(),
            };
            let ok = row.bfs == row.via_cycles && row.via_cycles == row.via_arcs && row.via_arcs == row.via_join;
            (!ok).then_some(row)
        })
    });
    Ok(found)
}

/// First pair, in enumeration order, with `b(π, ρ) > d_H(π, ρ)`.
pub fn find_b_gap_witness(n: usize) -> Result<Option<(NcPartition, NcPartition)>> {
    check(n, PARTNERS_MAX, "find_b_gap_witness")?;
    let all: Vec<NcPartition> = enumerate_nc(n)?.collect();
    Ok(all.iter().find_map(|pi| {
        all.iter()
            .find(|rho| distance_bound_b(pi, rho).unwrap() > hasse_distance(pi, rho).unwrap())
            .map(|rho| (pi.clone(), rho.clone()))
    }))
}

/// First pair, in enumeration order, with `π ∧ ρ = 0_n`, `π ∨ ρ = 1_n` and
/// `|π| + |ρ| = n + 1` that is nevertheless not at distance `n − 1`.
pub fn find_diameter_conditions_witness(n: usize) -> Result<Option<(NcPartition, NcPartition)>> {
    check(n, PARTNERS_MAX, "find_diameter_conditions_witness")?;
    let all: Vec<NcPartition> = enumerate_nc(n)?.collect();
    Ok(all.iter().find_map(|pi| {
        all.iter()
            .find(|rho| {
                pi.num_blocks() + rho.num_blocks() == n + 1
                    && pi.meet(rho).unwrap().num_blocks() == n
                    && pi.join_nc(rho).unwrap().num_blocks() == 1
                    && hasse_distance(pi, rho).unwrap() + 1 < n
            })
            .map(|rho| (pi.clone(), rho.clone()))
    }))
}

/// The orbit of `π` under Kreweras complementation, in order of appearance.
pub fn kreweras_orbit(pi: &NcPartition) -> Vec<NcPartition> {
    let mut orbit = vec![pi.clone()];
    loop {
        let next = orbit.last().unwrap().kreweras();
        if &next == pi {
            return orbit;
        }
        orbit.push(next);
    }
}

/// Outcome of the maximal-partners experiment for the rainbow partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowReport {
    pub n: usize,
    /// Partner counts along the Kreweras orbit of the rainbow partition.
    pub orbit: Vec<(String, u64)>,
    pub max_partners: u64,
    /// All partitions attaining the maximum, in text form.
    pub maximizers: Vec<String>,
    /// The maximizers are exactly the rainbow's Kreweras orbit.
    pub orbit_is_argmax: bool,
}

/// Counts meandric partners of every partition of NC(n) and compares the
/// maximizers with the Kreweras orbit of the rainbow partition.
pub fn rainbow_experiment(n: usize) -> Result<RainbowReport> {
    check(n, EXPERIMENT_MAX, "rainbow_experiment")?;
    let all: Vec<NcPartition> = enumerate_nc(n)?.collect();
    let prepared: Vec<Prepared> = all.iter().map(Prepared::new).collect();
    let counts: Vec<u64> = prepared
        .par_iter()
        .map_init(Vec::new, |seen, a| {
            prepared.iter().filter(|b| a.components(b, seen) == 1).count() as u64
        })
        .collect();
    let max = *counts.iter().max().unwrap();
    let maximizers: BTreeSet<&NcPartition> = all
        .iter()
        .zip(&counts)
        .filter(|(_, &c)| c == max)
        .map(|(p, _)| p)
        .collect();
    let orbit = kreweras_orbit(&NcPartition::rainbow(n)?);
    let orbit_set: BTreeSet<&NcPartition> = orbit.iter().collect();
    let count_of = |p: &NcPartition| counts[all.iter().position(|q| q == p).unwrap()];
    Ok(RainbowReport {
        n,
        orbit: orbit.iter().map(|p| (p.to_string(), count_of(p))).collect(),
        max_partners: max,
        maximizers: maximizers.iter().map(|p| p.to_string()).collect(),
        orbit_is_argmax: maximizers == orbit_set,
    })
}
