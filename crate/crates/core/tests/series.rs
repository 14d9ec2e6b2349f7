use meandric::meander::{distance_bound_b, hasse_distance};
use meandric::nc::{enumerate_int, enumerate_nc, NcPartition};
use meandric::series::oracle::*;
use meandric::series::*;
use num_rational::BigRational;

fn mean(sum: usize, count: usize) -> BigRational {
    BigRational::new(sum.into(), count.into())
}

#[test]
fn psi3_generator_reproduces_catalan_squares() {
    let order = 6;
    let f = solve_functional(&psi3_generator(order).unwrap(), order).unwrap();
    assert_eq!(f, psi3_at_one(order));
    let dt = dt_at_one(&f, &f.z_derive()).unwrap();
    assert_eq!(dt, psi3_join_sums(order).unwrap());
}

#[test]
fn psi1_generator_reproduces_even_catalans() {
    let order = 4;
    let f = solve_functional(&psi1_generator(order).unwrap(), order).unwrap();
    assert_eq!(f, psi1_at_one(order));
    let dt = dt_at_one(&f, &f.z_derive()).unwrap();
    assert_eq!(dt, psi1_join_sums(order).unwrap());
}

#[test]
fn psi2_bivariate() {
    let order = 5;
    let f = solve_functional(&psi2_generator(order).unwrap(), order).unwrap();
    assert_eq!(f, psi2_at_one(order));
    let dt = dt_at_one(&f, &f.z_derive()).unwrap();
    assert_eq!(dt, psi2_join_sums(order).unwrap());
}

#[test]
fn interval_average_matches_brute_force() {
    for n in 1..=6 {
        let bottoms: Vec<NcPartition> = enumerate_nc(n).unwrap().collect();
        let (mut sum, mut count) = (0, 0);
        for pi in enumerate_int(n).unwrap() {
            for rho in &bottoms {
                sum += hasse_distance(&pi, rho).unwrap();
                count += 1;
            }
        }
        assert_eq!(avg_distance_interval(n).unwrap(), mean(sum, count), "n = {n}");
    }
}

#[test]
fn lambda2_average_matches_brute_force() {
    for m in 1..=3 {
        let lambda = NcPartition::lambda_interval(2, m).unwrap();
        let (mut sum, mut count) = (0, 0);
        for rho in enumerate_nc(2 * m).unwrap() {
            sum += hasse_distance(&lambda, &rho).unwrap();
            count += 1;
        }
        assert_eq!(avg_distance_lambda2(m).unwrap(), mean(sum, count), "m = {m}");
    }
}

#[test]
fn bound_average_matches_brute_force() {
    for n in 1..=5 {
        let all: Vec<NcPartition> = enumerate_nc(n).unwrap().collect();
        let sum: usize = all
            .iter()
            .flat_map(|p| all.iter().map(move |r| distance_bound_b(p, r).unwrap()))
            .sum();
        assert_eq!(avg_bound_bn(n).unwrap(), mean(sum, all.len() * all.len()), "n = {n}");
    }
}
