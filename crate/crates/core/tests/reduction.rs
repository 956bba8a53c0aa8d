mod common;

use profmatch::oracle::{brute_force_max_weight, brute_force_optimal};
use profmatch::rmcheck::to_ranks;
use profmatch::{
    complete, improving_pair, mixed_radix, optimal_matching, optimal_matching_with, profile_of,
    satisfies_condition, ConditionCheck, Instance, Matching, Profile, WeightAssignment,
    WeightTable,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::random_instance;

/// Three edges of utility <1,2> forming one perfect matching against three
/// edges <2,0>, <1,0>, <1,0> forming another.
fn radix_counterexample() -> Instance {
    Instance::from_edges(
        3,
        3,
        vec![2, 2],
        [
            (0, 1, [1, 2]),
            (1, 2, [1, 2]),
            (2, 0, [1, 2]),
            (0, 0, [2, 0]),
            (1, 1, [1, 0]),
            (2, 2, [1, 0]),
        ],
    )
    .unwrap()
}

#[test]
fn mixed_radix_can_miss_the_optimum() {
    let inst = radix_counterexample();
    let (best, _) = brute_force_optimal(&inst).unwrap();
    assert_eq!(best, Profile::from_values(vec![4, 0]));
    let red = optimal_matching(&inst).unwrap();
    assert_eq!(red.profile, Profile::from_values(vec![3, 6]));
    assert_eq!(red.max_weight.to_u64(), Some(21));
    // every single-swap comparison favours the heavier pair, so the checker accepts
    let completed = complete(&inst);
    assert_eq!(
        satisfies_condition(&completed, &mixed_radix(&completed)),
        None
    );
}

#[test]
fn no_improving_pair_does_not_imply_optimal() {
    let inst = Instance::from_edges(
        2,
        2,
        vec![2],
        [(0, 0, [1]), (1, 1, [1]), (0, 1, [2]), (1, 0, [1])],
    )
    .unwrap();
    let completed = complete(&inst).balanced();
    let m = Matching::from_pairs([(0, 0), (1, 1)]).unwrap();
    assert_eq!(improving_pair(&m, &completed).unwrap(), None);
    assert_eq!(
        profile_of(&m, &inst).unwrap(),
        Profile::from_values(vec![2])
    );
    let (best, _) = brute_force_optimal(&inst).unwrap();
    assert_eq!(best, Profile::from_values(vec![3]));

    let flat = WeightTable::parse("0 0 1\n1 1 1\n0 1 1\n1 0 1\n").unwrap();
    let w = WeightAssignment::from_table(&complete(&inst), &flat).unwrap();
    let red = optimal_matching_with(&inst, &w, ConditionCheck::Exhaustive).unwrap();
    assert_eq!(red.profile, Profile::from_values(vec![2]));
}

#[test]
fn checker_catches_flat_weights() {
    let inst = Instance::from_edges(
        2,
        2,
        vec![3],
        [(0, 0, [3]), (0, 1, [1]), (1, 0, [1]), (1, 1, [1])],
    )
    .unwrap();
    let completed = complete(&inst);
    let mut w = WeightAssignment::zeros(2, 2);
    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        w.set(a, b, 1u64.into());
    }
    let cx = satisfies_condition(&completed, &w).unwrap();
    assert_eq!((cx.a, cx.b, cx.b_prime, cx.a_prime), (0, 0, 1, 1));
    assert!(optimal_matching_with(&inst, &w, ConditionCheck::Exhaustive).is_err());
}

#[test]
fn reduction_matches_oracle_on_small_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut misses = 0;
    for _ in 0..300 {
        let inst = random_instance(&mut rng, 4, 3, 2);
        let (best, _) = brute_force_optimal(&inst).unwrap();
        let red = optimal_matching(&inst).unwrap();
        assert!(red.profile <= best);
        misses += usize::from(red.profile != best);
        let completed = complete(&inst);
        assert_eq!(
            satisfies_condition(&completed, &mixed_radix(&completed)),
            None
        );
    }
    assert!(misses <= 2, "{misses} of 300 below the optimum");
}

#[test]
fn rank_maximal_weights_agree_with_indicator_solution() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let shape = random_instance(&mut rng, 4, 1, 1);
        if shape.edge_count() == 0 {
            continue;
        }
        let mut text = String::new();
        for (i, &(a, b)) in shape.pairs().iter().enumerate() {
            text.push_str(&format!("{a} {b} {}\n", [15, 7, 3, 1][(i * 7 + a + b) % 4]));
        }
        let table = WeightTable::parse(&text).unwrap();
        let (ranks, r) = to_ranks(&table, shape.a_count(), shape.b_count()).unwrap();
        let indicator = ranks.indicator_instance(r).unwrap();
        let w = WeightAssignment::from_table(&complete(&indicator), &table).unwrap();
        let via_ranks = optimal_matching(&indicator).unwrap();
        let direct = optimal_matching_with(&indicator, &w, ConditionCheck::Exhaustive).unwrap();
        let total = |m: &Matching| {
            m.pairs()
                .map(|(a, b)| w.get(a, b).clone())
                .sum::<profmatch::Weight>()
        };
        let (best, _) = brute_force_max_weight(&indicator, &w).unwrap();
        assert_eq!(total(&via_ranks.matching), best);
        assert_eq!(total(&direct.matching), best);
    }
}
