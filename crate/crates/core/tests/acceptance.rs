//! Acceptance criteria 1 to 12. Every criterion prints one PASS/FAIL line;
//! the test fails if any hard criterion fails. The Monte Carlo band of
//! criterion 12 is reported but does not fail the run.

use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};
use std::io::Write;
use std::time::{Duration, Instant};

use meandric::enumeration::oracle::{exhaustive_cyclic_by_blocks, exhaustive_shallow_by_blocks};
use meandric::enumeration::{
    count_cyclic_shallow, count_n, count_na, count_shallow_meanders, count_shallow_meanders_by_blocks, growth_rate,
    ln_count_shallow_meanders, partners_lambda, DegreeProfile,
};
use meandric::meander::oracle::{five_way_mismatch, pair_totals};
use meandric::meander::{count_meandric_partners, hasse_distance, is_meander};
use meandric::nc::{enumerate_int, enumerate_nc, NcPartition};
use meandric::sampler::{estimate_components, uniformity_test, Family, Mode};
use meandric::series::oracle::*;
use meandric::series::*;
use meandric::shallow_tree::{enumerate_trees, forget, recover};
use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;

struct Outcome {
    ok: bool,
    detail: String,
    /// Soft outcomes are reported but never fail the suite.
    soft: bool,
}

fn hard(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into(), soft: false }
}

fn timed(limit: Duration, start: Instant) -> (bool, String) {
    let e = start.elapsed();
    (e < limit, format!("{:.1}s (limit {}s)", e.as_secs_f64(), limit.as_secs()))
}

fn ratio(sum: usize, count: usize) -> BigRational {
    BigRational::new(sum.into(), count.into())
}

fn shallow_meanders(n: usize) -> Vec<(NcPartition, NcPartition)> {
    let bottoms: Vec<NcPartition> = enumerate_nc(n).unwrap().collect();
    let tops: Vec<NcPartition> = enumerate_int(n).unwrap().collect();
    tops.par_iter()
        .flat_map_iter(|pi| {
            bottoms
                .iter()
                .filter(|rho| is_meander(pi, rho).unwrap())
                .map(|rho| (pi.clone(), rho.clone()))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn sizes(p: &NcPartition) -> DegreeProfile {
    DegreeProfile::from_parts(&p.blocks().iter().map(Vec::len).collect::<Vec<_>>()).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=9 {
        let brute = exhaustive_shallow_by_blocks(n).unwrap();
        for m in 1..=n {
            let formula = count_shallow_meanders_by_blocks(n, m).unwrap();
            if formula != BigUint::from(brute[m]) {
                bad.push(format!("n={n} m={m}: brute {} formula {formula}", brute[m]));
            }
        }
    }
    let (fast, t) = timed(Duration::from_secs(60), start);
    hard(bad.is_empty() && fast, format!("n=1..9 per-m exact, {t} {}", bad.join("; ")))
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=8 {
        let brute = exhaustive_cyclic_by_blocks(n).unwrap();
        for m in 1..=n {
            let formula = count_cyclic_shallow(n, m).unwrap();
            if formula != BigUint::from(brute[m]) {
                bad.push(format!("n={n} m={m}: brute {} formula {formula}", brute[m]));
            }
        }
    }
    hard(bad.is_empty(), format!("n=1..8 per-m exact {}", bad.join("; ")))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let bad: Vec<String> = (1..=7)
        .filter_map(|n| five_way_mismatch(n).unwrap().map(|w| format!("n={n}: {w:?}")))
        .collect();
    let (fast, t) = timed(Duration::from_secs(120), start);
    hard(bad.is_empty() && fast, format!("all pairs n=1..7, {t} {}", bad.join("; ")))
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=9 {
        if let Some(p) = enumerate_nc(n).unwrap().find(|p| hasse_distance(p, &p.kreweras()).unwrap() != n - 1) {
            bad.push(format!("d(pi, Kr pi) != n-1 at {p}"));
        }
    }
    for n in 1..=7 {
        let mean = pair_totals(n).unwrap().mean_distance();
        if mean < BigRational::new((n - 1).into(), 2.into()) {
            bad.push(format!("n={n}: mean {mean} < (n-1)/2"));
        }
    }
    hard(bad.is_empty(), format!("Kreweras n<=9, mean >= (n-1)/2 n<=7 {}", bad.join("; ")))
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=9 {
        let pairs = shallow_meanders(n);
        if let Some(p) = pairs
            .par_iter()
            .find_any(|(pi, rho)| forget(pi, rho).and_then(|t| recover(&t)).ok().as_ref() != Some(&(pi.clone(), rho.clone())))
        {
            bad.push(format!("recover(forget) fails at {p:?}"));
        }
        let trees = enumerate_trees(n).unwrap();
        if let Some(t) = trees
            .par_iter()
            .find_any(|t| recover(t).and_then(|(pi, rho)| forget(&pi, &rho)).ok().as_ref() != Some(*t))
        {
            bad.push(format!("forget(recover) fails at {t}"));
        }
        let formula = count_shallow_meanders(n).unwrap();
        if BigUint::from(trees.len()) != formula || BigUint::from(pairs.len()) != formula {
            bad.push(format!("n={n}: {} trees, {} meanders, formula {formula}", trees.len(), pairs.len()));
        }
        if n > 8 {
            continue;
        }
        // (m, i, j) and (a, m, i, j) histograms
        let mut by_profile: BTreeMap<(usize, DegreeProfile, DegreeProfile), u64> = BTreeMap::new();
        let mut by_first: BTreeMap<(usize, usize, DegreeProfile, DegreeProfile), u64> = BTreeMap::new();
        for (pi, rho) in &pairs {
            let (i, j, m) = (sizes(rho), sizes(pi), pi.num_blocks());
            *by_profile.entry((m, i.clone(), j.clone())).or_default() += 1;
            *by_first.entry((pi.block_containing(1).len(), m, i, j)).or_default() += 1;
        }
        let mut from_trees: BTreeMap<(usize, DegreeProfile, DegreeProfile), u64> = BTreeMap::new();
        for t in &trees {
            let p = t.profile();
            *from_trees.entry((p.m, p.i, p.j)).or_default() += 1;
        }
        if from_trees != by_profile {
            bad.push(format!("n={n}: tree degree histogram differs from block-size histogram"));
        }
        for ((m, i, j), c) in &by_profile {
            let f = count_n(*m, n, i, j).unwrap();
            if f != BigUint::from(*c) {
                bad.push(format!("N(m={m}, n={n}; i={i}, j={j}) = {f}, counted {c}"));
            }
        }
        for ((a, m, i, j), c) in &by_first {
            let f = count_na(*a, *m, n, i, j).unwrap();
            if f != BigUint::from(*c) {
                bad.push(format!("N_{a}(m={m}, n={n}; i={i}, j={j}) = {f}, counted {c}"));
            }
        }
    }
    hard(bad.is_empty(), format!("round trips n<=9, profile histograms n<=8 {}", bad.join("; ")))
}

fn criterion_6() -> Outcome {
    let cases = [(1, 6), (2, 4), (3, 3), (4, 2)];
    let mut bad = Vec::new();
    for (ell, max_m) in cases {
        for m in 1..=max_m {
            let brute = count_meandric_partners(&NcPartition::lambda_interval(ell, m).unwrap()).unwrap();
            let formula = partners_lambda(ell, m).unwrap();
            if formula != BigUint::from(brute) {
                bad.push(format!("(l={ell}, m={m}): brute {brute} formula {formula}"));
            }
        }
    }
    hard(bad.is_empty(), format!("partners of lambda_(l,m) {}", bad.join("; ")))
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=9 {
        let bottoms: Vec<NcPartition> = enumerate_nc(n).unwrap().collect();
        let tops: Vec<NcPartition> = enumerate_int(n).unwrap().collect();
        let sum: usize = tops
            .par_iter()
            .map(|pi| bottoms.iter().map(|rho| hasse_distance(pi, rho).unwrap()).sum::<usize>())
            .sum();
        let brute = ratio(sum, tops.len() * bottoms.len());
        let exact = avg_distance_interval(n).unwrap();
        if exact != brute {
            bad.push(format!("n={n}: formula {exact} brute {brute}"));
        }
    }
    let start = Instant::now();
    let all = avg_distance_interval_all(1000);
    let (fast, t) = timed(Duration::from_secs(60), start);
    let d = rational_to_f64(&all[999]);
    let gap = (d - 2000.0 / 3.0 + 28.0 / 27.0).abs();
    hard(
        bad.is_empty() && fast && gap <= 0.01,
        format!("exact n<=9; |d_1000 - 2n/3 + 28/27| = {gap:.2e} (tol 1e-2); series {t} {}", bad.join("; ")),
    )
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    for m in 1..=4 {
        let lambda = NcPartition::lambda_interval(2, m).unwrap();
        let all: Vec<NcPartition> = enumerate_nc(2 * m).unwrap().collect();
        let sum: usize = all.iter().map(|r| hasse_distance(&lambda, r).unwrap()).sum();
        let exact = avg_distance_lambda2(m).unwrap();
        if exact != ratio(sum, all.len()) {
            bad.push(format!("m={m}: formula {exact}"));
        }
    }
    let m = 5000;
    let gap = (avg_distance_lambda2_f64(m).unwrap() - SQRT_2 * m as f64 - (7.0 * SQRT_2 / 16.0 - 1.5)).abs();
    hard(
        bad.is_empty() && gap <= 1e-3,
        format!("exact m<=4; offset error at m=5000 = {gap:.2e} (tol 1e-3) {}", bad.join("; ")),
    )
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=7 {
        let (exact, brute) = (avg_bound_bn(n).unwrap(), pair_totals(n).unwrap().mean_bound_b());
        if exact != brute {
            bad.push(format!("n={n}: formula {exact} brute {brute}"));
        }
    }
    let start = Instant::now();
    let b = rational_to_f64(&avg_bound_bn(500).unwrap()) / 500.0;
    let t = start.elapsed().as_secs_f64();
    let constant = (3.0 * PI - 8.0) / (8.0 - 2.0 * PI);
    let gap = (b - constant).abs();
    hard(
        bad.is_empty() && gap <= 0.02 && constant < 0.83,
        format!("exact n<=7; |b_500/500 - {constant:.7}| = {gap:.2e} (tol 2e-2) in {t:.1}s {}", bad.join("; ")),
    )
}

fn criterion_10() -> Outcome {
    let order = 7;
    let mut bad = Vec::new();
    let mut check = |name: &str, ok_f: bool, ok_dt: bool| {
        if !ok_f || !ok_dt {
            bad.push(format!("{name}: F(z,1) ok={ok_f}, dF/dt ok={ok_dt}"));
        }
    };
    let f = solve_functional(&psi1_generator(order).unwrap(), order).unwrap();
    let dt = dt_at_one(&f, &f.z_derive()).unwrap();
    check("psi1", f == psi1_at_one(order), dt == psi1_join_sums(order).unwrap());
    let f = solve_functional(&psi2_generator(order).unwrap(), order).unwrap();
    let dt = dt_at_one(&f, &f.z_derive()).unwrap();
    check("psi2", f == psi2_at_one(order), dt == psi2_join_sums(order).unwrap());
    let f = solve_functional(&psi3_generator(order).unwrap(), order).unwrap();
    let dt = dt_at_one(&f, &f.z_derive()).unwrap();
    check("psi3", f == psi3_at_one(order), dt == psi3_join_sums(order).unwrap());
    hard(bad.is_empty(), format!("three families through order {order} {}", bad.join("; ")))
}

fn criterion_11() -> Outcome {
    let g = growth_rate();
    let root = (ln_count_shallow_meanders(2000).unwrap() / 2000.0).exp();
    let ok = (g.rate - 5.21914).abs() <= 1e-3 && (g.alpha_star - 0.4694).abs() <= 1e-3 && (root - g.rate).abs() <= 0.05;
    hard(
        ok,
        format!("rate {:.5} at alpha {:.4}; count^(1/n) at n=2000 = {root:.4}", g.rate, g.alpha_star),
    )
}

fn criterion_12() -> Outcome {
    let mut bad = Vec::new();
    let all = estimate_components(100, 100_000, 1, &Mode::All).unwrap();
    let (lo, hi) = (all.mean - 5.0 * all.stderr, all.mean + 5.0 * all.stderr);
    if lo / 100.0 <= 0.17 || hi / 100.0 >= 0.50 {
        bad.push(format!("mode=all outside (0.17, 0.50) at 5 sigma: {}", all.mean_per_n));
    }
    let n = 200;
    let top = estimate_components(n, 100_000, 1, &Mode::IntervalTop).unwrap();
    let target = n as f64 / 3.0 + 28.0 / 27.0;
    let z_top = (top.mean - target) / top.stderr;
    if z_top.abs() > 3.0 {
        bad.push(format!("interval-top z = {z_top:.2}"));
    }
    let lambda = NcPartition::lambda_interval(2, n / 2).unwrap();
    let fixed = estimate_components(n, 100_000, 1, &Mode::FixedBase(lambda)).unwrap();
    let target = (1.0 - SQRT_2 / 2.0) * n as f64 + (1.5 - 7.0 * SQRT_2 / 16.0);
    let z_fixed = (fixed.mean - target) / fixed.stderr;
    if z_fixed.abs() > 3.0 {
        bad.push(format!("fixed-base z = {z_fixed:.2}"));
    }
    let mut p_values = Vec::new();
    for k in 3..=5 {
        let c = uniformity_test(k, 1_000_000, 1, Family::Nc).unwrap();
        p_values.push(format!("{:.3}", c.p_value));
        if c.p_value <= 0.001 {
            bad.push(format!("chi-square n={k} p = {}", c.p_value));
        }
    }
    let band = (0.21..=0.25).contains(&all.mean_per_n);
    let large = estimate_components(1600, 20_000, 1, &Mode::All).unwrap();
    let detail = format!(
        "mode=all n=100 mean/n = {:.4} +- {:.4} (band [0.21, 0.25]: {}; n=1600 gives {:.4}); \
         interval-top z = {z_top:.2}; fixed-base z = {z_fixed:.2}; chi-square p = {} {}",
        all.mean_per_n,
        all.stderr / 100.0,
        if band { "in" } else { "outside" },
        large.mean_per_n,
        p_values.join(", "),
        bad.join("; "),
    );
    if !bad.is_empty() {
        return hard(false, detail);
    }
    Outcome { ok: band, detail, soft: !band }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(usize, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut failed = Vec::new();
    for (k, run) in criteria {
        let start = Instant::now();
        let o = run();
        let status = match (o.ok, o.soft) {
            (true, _) => "PASS",
            (false, true) => "FAIL (soft)",
            (false, false) => "FAIL",
        };
        // written to the stderr handle directly so the line survives output capture
        let line = format!("criterion {k:>2}: {status} [{:.1}s] {}", start.elapsed().as_secs_f64(), o.detail.trim_end());
        writeln!(std::io::stderr(), "{line}").unwrap();
        if !o.ok && !o.soft {
            failed.push(k);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
