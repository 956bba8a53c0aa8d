//! Input generators shared by the benchmarks.

use profmatch::{AssignmentProblem, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense `n x n` problem with weights uniform in `0..max`.
pub fn random_problem(n: usize, max: u64, seed: u64) -> AssignmentProblem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(0..max)).collect())
        .collect();
    AssignmentProblem::from_rows(&rows).expect("square rows")
}

/// `len` weights of the form `2^k - 1` with `k <= ranks` (at most 127), so
/// the grouped check succeeds and has to sweep everything.
pub fn ladder_weights(len: usize, ranks: u32, seed: u64) -> Vec<Weight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| Weight::from((1u128 << rng.gen_range(1..=ranks)) - 1))
        .collect()
}

/// `len` distinct weights that pass the literal sweep.
pub fn distinct_ladder(len: usize) -> Vec<Weight> {
    let mut v = Vec::with_capacity(len);
    let (mut x, mut y) = (Weight::from(1u64), Weight::from(2u64));
    for _ in 0..len {
        v.push(x.clone());
        let next = &(&x + &y) + &Weight::from(1u64);
        x = y;
        y = next;
    }
    v.reverse();
    v
}
