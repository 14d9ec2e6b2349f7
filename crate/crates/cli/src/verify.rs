use clap::ValueEnum;
use meandric::enumeration::oracle::{exhaustive_cyclic_by_blocks, exhaustive_shallow_by_blocks};
use meandric::enumeration::{count_cyclic_shallow, count_shallow_meanders, count_shallow_meanders_by_blocks, partners_lambda};
use meandric::meander::oracle::{five_way_mismatch, pair_totals};
use meandric::meander::{count_meandric_partners, hasse_distance, is_meander, BFS_ORACLE_MAX};
use meandric::nc::{enumerate_int, enumerate_nc, NcPartition};
use meandric::series::oracle::{
    psi1_at_one, psi1_generator, psi1_join_sums, psi2_at_one, psi2_generator, psi2_join_sums, psi3_at_one,
    psi3_generator, psi3_join_sums, PSI1_MAX, PSI2_MAX, PSI3_MAX,
};
use meandric::series::{
    avg_bound_bn, avg_distance_interval, avg_distance_lambda2, dt_at_one, solve_functional, Coefficient,
    TruncatedSeries,
};
use meandric::shallow_tree::{enumerate_trees, forget, recover, MAX_TREE_EDGES};
use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Core,
    Bijection,
    Formulas,
    Series,
}

/// One line of the summary table.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub check: String,
    pub n: usize,
    pub ok: bool,
    /// Counterexample or mismatch description when `ok` is false.
    pub detail: String,
}

type Res<T> = meandric::Result<T>;

fn check(name: &str, n: usize, ok: bool, detail: impl FnOnce() -> String) -> Check {
    Check {
        check: name.to_string(),
        n,
        ok,
        detail: if ok { String::new() } else { detail() },
    }
}

/// Runs `suite` for every size up to `max_n` (clamped to each check's
/// exhaustive limit).
pub fn run(suite: Suite, max_n: usize) -> Res<Vec<Check>> {
    match suite {
        Suite::Core => core(max_n),
        Suite::Bijection => bijection(max_n),
        Suite::Formulas => formulas(max_n),
        Suite::Series => series(max_n),
    }
}

fn core(max_n: usize) -> Res<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(BFS_ORACLE_MAX) {
        let m = five_way_mismatch(n)?;
        out.push(check("five-way distance", n, m.is_none(), || format!("{m:?}")));
    }
    for n in 1..=max_n.min(12) {
        let bad = enumerate_nc(n)?.find(|p| hasse_distance(p, &p.kreweras()).unwrap() != n - 1);
        out.push(check("kreweras at diameter", n, bad.is_none(), || format!("{bad:?}")));
    }
    Ok(out)
}

fn shallow_meanders(n: usize) -> Res<Vec<(NcPartition, NcPartition)>> {
    let bottoms: Vec<NcPartition> = enumerate_nc(n)?.collect();
    let tops: Vec<NcPartition> = enumerate_int(n)?.collect();
    Ok(tops
        .par_iter()
        .flat_map_iter(|pi| {
            bottoms
                .iter()
                .filter(|rho| is_meander(pi, rho).unwrap())
                .map(|rho| (pi.clone(), rho.clone()))
                .collect::<Vec<_>>()
        })
        .collect())
}

fn bijection(max_n: usize) -> Res<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(MAX_TREE_EDGES).min(10) {
        let pairs = shallow_meanders(n)?;
        let bad = pairs.par_iter().find_first(|(pi, rho)| {
            forget(pi, rho).and_then(|t| recover(&t)).ok().as_ref() != Some(&(pi.clone(), rho.clone()))
        });
        out.push(check("recover(forget(pi, rho))", n, bad.is_none(), || format!("{bad:?}")));
        let trees = enumerate_trees(n)?;
        let bad = trees.par_iter().find_first(|t| {
            recover(t).and_then(|(pi, rho)| forget(&pi, &rho)).ok().as_ref() != Some(*t)
        });
        out.push(check("forget(recover(tree))", n, bad.is_none(), || bad.map(|t| t.to_string()).unwrap_or_default()));
        let formula = count_shallow_meanders(n)?;
        let counts = (BigUint::from(pairs.len()), BigUint::from(trees.len()));
        out.push(check("tree count", n, counts.0 == formula && counts.1 == formula, || {
            format!("meanders {}, trees {}, formula {formula}", counts.0, counts.1)
        }));
    }
    Ok(out)
}

fn formulas(max_n: usize) -> Res<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(10) {
        let brute = exhaustive_shallow_by_blocks(n)?;
        let bad = (1..=n).find(|&m| count_shallow_meanders_by_blocks(n, m).unwrap() != BigUint::from(brute[m]));
        out.push(check("shallow by blocks", n, bad.is_none(), || {
            let m = bad.unwrap();
            format!("m = {m}: brute {} formula {}", brute[m], count_shallow_meanders_by_blocks(n, m).unwrap())
        }));
    }
    for n in 1..=max_n.min(9) {
        let brute = exhaustive_cyclic_by_blocks(n)?;
        let bad = (1..=n).find(|&m| count_cyclic_shallow(n, m).unwrap() != BigUint::from(brute[m]));
        out.push(check("cyclic shallow by blocks", n, bad.is_none(), || {
            let m = bad.unwrap();
            format!("m = {m}: brute {} formula {}", brute[m], count_cyclic_shallow(n, m).unwrap())
        }));
    }
    for n in 1..=max_n.min(12) {
        for ell in (1..=n).filter(|l| n % l == 0) {
            let m = n / ell;
            let brute = count_meandric_partners(&NcPartition::lambda_interval(ell, m)?)?;
            let formula = partners_lambda(ell, m)?;
            out.push(check(&format!("partners of lambda_{{{ell},{m}}}"), n, formula == BigUint::from(brute), || {
                format!("brute {brute} formula {formula}")
            }));
        }
    }
    Ok(out)
}

/// Exhaustive average of `d_H` over `Int(n) × NC(n)`.
pub fn brute_interval_average(n: usize) -> Res<BigRational> {
    let bottoms: Vec<NcPartition> = enumerate_nc(n)?.collect();
    let tops: Vec<NcPartition> = enumerate_int(n)?.collect();
    let sum: usize = tops
        .par_iter()
        .map(|pi| bottoms.iter().map(|rho| hasse_distance(pi, rho).unwrap()).sum::<usize>())
        .sum();
    Ok(BigRational::new(sum.into(), (tops.len() * bottoms.len()).into()))
}

fn series_identity<C: Coefficient>(
    name: &str,
    order: usize,
    g: &TruncatedSeries<C>,
    at_one: &TruncatedSeries<C>,
    sums: &TruncatedSeries<C>,
) -> Res<Vec<Check>> {
    let f = solve_functional(g, order)?;
    let dt = dt_at_one(&f, &f.z_derive())?;
    Ok(vec![
        check(&format!("{name}: F(z,1)"), order, &f == at_one, || format!("got {f}, expected {at_one}")),
        check(&format!("{name}: dF/dt at t=1"), order, &dt == sums, || format!("got {dt}, expected {sums}")),
    ])
}

fn series(max_n: usize) -> Res<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(9) {
        let (exact, brute) = (avg_distance_interval(n)?, brute_interval_average(n)?);
        out.push(check("d_n", n, exact == brute, || format!("formula {exact}, brute {brute}")));
    }
    for n in 1..=max_n.min(BFS_ORACLE_MAX) {
        let (exact, brute) = (avg_bound_bn(n)?, pair_totals(n)?.mean_bound_b());
        out.push(check("btilde_n", n, exact == brute, || format!("formula {exact}, brute {brute}")));
    }
    for m in 1..=(max_n / 2).min(5) {
        let lambda = NcPartition::lambda_interval(2, m)?;
        let all: Vec<NcPartition> = enumerate_nc(2 * m)?.collect();
        let sum: usize = all.iter().map(|r| hasse_distance(&lambda, r).unwrap()).sum();
        let brute = BigRational::new(sum.into(), all.len().into());
        let exact = avg_distance_lambda2(m)?;
        out.push(check("dtilde_2m", 2 * m, exact == brute, || format!("formula {exact}, brute {brute}")));
    }
    let o1 = (max_n / 2).min(PSI1_MAX);
    if o1 >= 1 {
        out.extend(series_identity("psi1", o1, &psi1_generator(o1)?, &psi1_at_one(o1), &psi1_join_sums(o1)?)?);
    }
    let o2 = max_n.min(PSI2_MAX);
    if o2 >= 1 {
        out.extend(series_identity("psi2", o2, &psi2_generator(o2)?, &psi2_at_one(o2), &psi2_join_sums(o2)?)?);
    }
    let o3 = max_n.min(PSI3_MAX);
    if o3 >= 1 {
        out.extend(series_identity("psi3", o3, &psi3_generator(o3)?, &psi3_at_one(o3), &psi3_join_sums(o3)?)?);
    }
    Ok(out)
}
