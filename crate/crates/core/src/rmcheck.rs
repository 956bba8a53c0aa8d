//! Deciding whether a weighted instance is a rank-maximal instance in
//! disguise, and recovering its ranks.

use crate::error::{Error, Result};
use crate::weights::{RankSystem, Weight, WeightTable};

/// Sort-and-sweep test, taken literally: after sorting ascending, every
/// value from the second on must exceed the sum of the two values before it
/// (missing predecessors count as 0). Any repeated value fails.
pub fn is_rank_maximal(weights: &[Weight]) -> bool {
    let mut sorted: Vec<&Weight> = weights.iter().collect();
    sorted.sort();
    let zero = Weight::zero();
    let (mut prev, mut prev2) = (sorted.first().copied().unwrap_or(&zero), &zero);
    for &w in sorted.iter().skip(1) {
        if w <= &(prev + prev2) {
            return false;
        }
        prev2 = prev;
        prev = w;
    }
    true
}

/// Grouped variant: equal weights form one rank. Every distinct value with
/// something below it must exceed the sum of the two largest weights
/// strictly below it, counted with multiplicity.
pub fn is_rank_maximal_grouped(weights: &[Weight]) -> bool {
    let mut sorted: Vec<&Weight> = weights.iter().collect();
    sorted.sort();
    let zero = Weight::zero();
    let mut start = 0;
    while start < sorted.len() {
        let value = sorted[start];
        if start > 0 {
            let below1 = sorted[start - 1];
            let below2 = if start > 1 { sorted[start - 2] } else { &zero };
            if value <= &(below1 + below2) {
                return false;
            }
        }
        start += sorted[start..].partition_point(|w| *w == value);
    }
    true
}

/// Rank of each weight: the largest distinct value is rank 1. Returned
/// ranks line up with `weights`; the second value is the number of ranks.
pub fn ranks_of(weights: &[Weight]) -> Result<(Vec<u32>, u32)> {
    if !is_rank_maximal_grouped(weights) {
        return Err(Error::NotReducible);
    }
    let mut distinct: Vec<&Weight> = weights.iter().collect();
    distinct.sort_by(|x, y| y.cmp(x));
    distinct.dedup();
    let ranks = weights
        .iter()
        .map(|w| {
            let pos = distinct.partition_point(|d| *d > w);
            pos as u32 + 1
        })
        .collect();
    Ok((ranks, distinct.len() as u32))
}

/// Builds the rank system of a weight table over `a_count x b_count`.
pub fn to_ranks(table: &WeightTable, a_count: usize, b_count: usize) -> Result<(RankSystem, u32)> {
    let (ranks, r) = ranks_of(&table.weights())?;
    let mut system = RankSystem::new(a_count, b_count);
    for ((a, b), rank) in table.pairs().zip(ranks) {
        system.set_rank(a, b, rank)?;
    }
    Ok((system, r))
}
