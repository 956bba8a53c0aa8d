#![allow(dead_code)]

use profmatch::{Instance, Weight, WeightAssignment};
use rand::Rng;

/// Random instance: every pair is an edge with probability `density`,
/// utilities uniform in `0..=bound`.
pub fn random_instance<R: Rng>(rng: &mut R, max_side: usize, max_r: usize, max_u: u64) -> Instance {
    let a = rng.gen_range(1..=max_side);
    let b = rng.gen_range(1..=max_side);
    let r = rng.gen_range(1..=max_r);
    let bounds: Vec<u64> = (0..r).map(|_| rng.gen_range(1..=max_u)).collect();
    let density = rng.gen_range(0.2..=1.0);
    let mut inst = Instance::new(a, b, bounds.clone()).unwrap();
    for i in 0..a {
        for j in 0..b {
            if rng.gen_bool(density) {
                let u: Vec<u64> = bounds.iter().map(|&ub| rng.gen_range(0..=ub)).collect();
                inst.add_edge(i, j, &u).unwrap();
            }
        }
    }
    inst
}

/// Random weights over `A x B` for the edges of `inst`; zero elsewhere.
pub fn random_weights<R: Rng>(rng: &mut R, inst: &Instance, max: u64) -> WeightAssignment {
    let mut w = WeightAssignment::zeros(inst.a_count(), inst.b_count());
    for &(a, b) in inst.pairs() {
        w.set(a, b, Weight::from(rng.gen_range(0..=max)));
    }
    w
}
