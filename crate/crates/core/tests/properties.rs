use meandric::meander::{
    component_count_arcs, component_count_cycles, distance_bound_b, distance_via_join_all, hasse_distance,
};
use meandric::nc::{enumerate_nc, NcPartition};
use meandric::sampler::{random_nc, trial_rng};
use proptest::prelude::*;
use proptest::sample::Index;

fn all(n: usize) -> Vec<NcPartition> {
    enumerate_nc(n).unwrap().collect()
}

fn leq(a: &NcPartition, b: &NcPartition) -> bool {
    a.refines(b)
}

/// Least upper bound (or greatest lower bound) found by scanning NC(n).
fn poset_bound(a: &NcPartition, b: &NcPartition, upper: bool) -> NcPartition {
    let ok = |s: &NcPartition| if upper { leq(a, s) && leq(b, s) } else { leq(s, a) && leq(s, b) };
    let candidates: Vec<NcPartition> = all(a.n()).into_iter().filter(ok).collect();
    let best: Vec<&NcPartition> = candidates
        .iter()
        .filter(|s| candidates.iter().all(|t| if upper { leq(s, t) } else { leq(t, s) }))
        .collect();
    assert_eq!(best.len(), 1);
    best[0].clone()
}

fn pick(n: usize, i: &Index) -> NcPartition {
    let v = all(n);
    v[i.index(v.len())].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn meet_and_join_are_lattice_bounds(n in 1usize..=7, i in any::<Index>(), j in any::<Index>()) {
        let (a, b) = (pick(n, &i), pick(n, &j));
        prop_assert_eq!(a.join_nc(&b).unwrap(), poset_bound(&a, &b, true));
        prop_assert_eq!(a.meet(&b).unwrap(), poset_bound(&a, &b, false));
    }

    #[test]
    fn kreweras_reverses_order(n in 1usize..=7, i in any::<Index>(), j in any::<Index>()) {
        let (a, b) = (pick(n, &i), pick(n, &j));
        prop_assert_eq!(a.num_blocks() + a.kreweras().num_blocks(), n + 1);
        if leq(&a, &b) {
            prop_assert!(leq(&b.kreweras(), &a.kreweras()));
        }
        let mut k = a.clone();
        for _ in 0..2 * n {
            k = k.kreweras();
        }
        prop_assert_eq!(k, a.clone());
        prop_assert_eq!(a.kreweras().kreweras(), a.rotate(n - 1));
    }

    #[test]
    fn distance_is_rotation_invariant(n in 1usize..=9, s in any::<u64>(), k in 0usize..9) {
        let mut rng = trial_rng(s, 0);
        let a = random_nc(n, &mut rng).unwrap();
        let b = random_nc(n, &mut rng).unwrap();
        let d = hasse_distance(&a, &b).unwrap();
        prop_assert_eq!(hasse_distance(&a.rotate(k % n), &b.rotate(k % n)).unwrap(), d);
        prop_assert_eq!(hasse_distance(&b, &a).unwrap(), d);
    }

    #[test]
    fn distance_characterizations_agree(n in 1usize..=60, s in any::<u64>()) {
        let mut rng = trial_rng(s, 1);
        let a = random_nc(n, &mut rng).unwrap();
        let b = random_nc(n, &mut rng).unwrap();
        let d = hasse_distance(&a, &b).unwrap();
        prop_assert_eq!(d, n - component_count_cycles(&a, &b).unwrap());
        prop_assert_eq!(d, n - component_count_arcs(&a, &b).unwrap());
        prop_assert_eq!(d, distance_via_join_all(&a, &b).unwrap());
        prop_assert!(distance_bound_b(&a, &b).unwrap() >= d);
        prop_assert_eq!(hasse_distance(&a, &a.kreweras()).unwrap(), n - 1);
    }

    #[test]
    fn text_and_json_round_trip(n in 1usize..=30, s in any::<u64>()) {
        let a = random_nc(n, &mut trial_rng(s, 2)).unwrap();
        prop_assert_eq!(a.to_string().parse::<NcPartition>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<NcPartition>(&json).unwrap(), a);
    }
}
