//! Preset weight and utility families: rank-based weights, the
//! common-vertex ladder, fair-matching utilities.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::model::{Instance, Pair};
use crate::weights::{Weight, WeightAssignment};

/// Per-pair ranks (and optionally distances) over an `a_count x b_count`
/// vertex set. Pairs without a rank are not edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSystem {
    a_count: usize,
    b_count: usize,
    ranks: Vec<u32>,
    distances: Option<Vec<u64>>,
    max_distance: u64,
}

impl RankSystem {
    pub fn new(a_count: usize, b_count: usize) -> Self {
        RankSystem {
            a_count,
            b_count,
            ranks: vec![0; a_count * b_count],
            distances: None,
            max_distance: 0,
        }
    }

    /// Enables distances with maximum `max_distance`.
    pub fn with_distances(mut self, max_distance: u64) -> Self {
        self.distances = Some(vec![0; self.a_count * self.b_count]);
        self.max_distance = max_distance;
        self
    }

    pub fn a_count(&self) -> usize {
        self.a_count
    }

    pub fn b_count(&self) -> usize {
        self.b_count
    }

    pub fn max_distance(&self) -> u64 {
        self.max_distance
    }

    pub fn has_distances(&self) -> bool {
        self.distances.is_some()
    }

    /// Sets the rank (`>= 1`) of a pair, making it an edge.
    pub fn set_rank(&mut self, a: usize, b: usize, rank: u32) -> Result<()> {
        if rank == 0 {
            return Err(Error::RankOutOfBounds {
                a,
                b,
                rank,
                max: u32::MAX,
            });
        }
        let i = self.slot(a, b)?;
        self.ranks[i] = rank;
        Ok(())
    }

    pub fn set_distance(&mut self, a: usize, b: usize, d: u64) -> Result<()> {
        let i = self.slot(a, b)?;
        if d > self.max_distance {
            return Err(Error::Validation(format!(
                "distance {d} of ({a}, {b}) exceeds D = {}",
                self.max_distance
            )));
        }
        let distances = self
            .distances
            .as_mut()
            .ok_or(Error::MissingDistance { a, b })?;
        distances[i] = d;
        Ok(())
    }

    fn slot(&self, a: usize, b: usize) -> Result<usize> {
        if a >= self.a_count || b >= self.b_count {
            return Err(Error::Validation(format!(
                "pair ({a}, {b}) outside {} x {}",
                self.a_count, self.b_count
            )));
        }
        Ok(a * self.b_count + b)
    }

    pub fn rank(&self, a: usize, b: usize) -> Option<u32> {
        let r = self.ranks[a * self.b_count + b];
        (r > 0).then_some(r)
    }

    pub fn distance(&self, a: usize, b: usize) -> Option<u64> {
        let d = self.distances.as_ref()?;
        self.rank(a, b).map(|_| d[a * self.b_count + b])
    }

    /// Ranked pairs in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (Pair, u32)> + '_ {
        let nb = self.b_count;
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(move |(i, &r)| ((i / nb, i % nb), r))
    }

    fn check_ranks(&self, r: u32) -> Result<()> {
        match self.edges().find(|&(_, rank)| rank > r) {
            Some(((a, b), rank)) => Err(Error::RankOutOfBounds { a, b, rank, max: r }),
            None => Ok(()),
        }
    }

    /// Inverse of [`RankSystem::indicator_instance`] and
    /// [`RankSystem::indicator_distance_instance`]: every edge must carry
    /// exactly one rank indicator. With `with_distance`, the last utility is
    /// read as `D - d` with `D` its bound. Returns the system and `r`.
    pub fn from_indicator_instance(
        inst: &Instance,
        with_distance: bool,
    ) -> Result<(RankSystem, u32)> {
        let bounds = inst.bounds();
        let r = bounds.len() - usize::from(with_distance);
        if r == 0 || bounds[..r].iter().any(|&u| u != 1) {
            return Err(Error::Validation("rank indicators need bounds of 1".into()));
        }
        let mut system = RankSystem::new(inst.a_count(), inst.b_count());
        if with_distance {
            system = system.with_distances(bounds[r]);
        }
        for ((a, b), u) in inst.edges() {
            let ones: Vec<usize> = (0..r).filter(|&i| u[i] == 1).collect();
            let [i] = ones[..] else {
                return Err(Error::Validation(format!(
                    "edge ({a}, {b}) is not a rank indicator"
                )));
            };
            system.set_rank(a, b, i as u32 + 1)?;
            if with_distance {
                system.set_distance(a, b, bounds[r] - u[r])?;
            }
        }
        Ok((system, r as u32))
    }

    /// Rank-indicator instance: `u_i(e) = 1` iff `rank(e) = i`, bounds all 1.
    pub fn indicator_instance(&self, r: u32) -> Result<Instance> {
        self.check_ranks(r)?;
        let mut inst = Instance::new(self.a_count, self.b_count, vec![1; r as usize])?;
        let mut u = vec![0; r as usize];
        for ((a, b), rank) in self.edges() {
            u.fill(0);
            u[rank as usize - 1] = 1;
            inst.add_edge(a, b, &u)?;
        }
        Ok(inst)
    }

    /// Rank indicators followed by `D - d(e)` (bound `D`): profile-optimal
    /// matchings are rank-maximal with minimum total distance.
    pub fn indicator_distance_instance(&self, r: u32) -> Result<Instance> {
        self.check_ranks(r)?;
        let mut bounds = vec![1; r as usize];
        bounds.push(self.max_distance);
        let mut inst = Instance::new(self.a_count, self.b_count, bounds)?;
        let mut u = vec![0; r as usize + 1];
        for ((a, b), rank) in self.edges() {
            let d = self.distance(a, b).ok_or(Error::MissingDistance { a, b })?;
            u.fill(0);
            u[rank as usize - 1] = 1;
            u[r as usize] = self.max_distance - d;
            inst.add_edge(a, b, &u)?;
        }
        Ok(inst)
    }
}

/// The common-vertex ladder: `w[r] = 1`, `w[r-1] = 2`,
/// `w[i] = w[i+1] + w[i+2] + 1`. Index 0 holds rank 1.
pub fn grp_weights(r: usize) -> Result<Vec<Weight>> {
    if r < 2 {
        return Err(Error::RTooSmall(r));
    }
    let mut w = vec![Weight::zero(); r];
    w[r - 1] = Weight::from(1u64);
    w[r - 2] = Weight::from(2u64);
    for i in (0..r - 2).rev() {
        w[i] = &(&w[i + 1] + &w[i + 2]) + &Weight::from(1u64);
    }
    Ok(w)
}

/// `w(e) = 2^(r - rank(e) + 1) - 1`; non-edges weigh 0.
///
/// The exponent is generalised from the four-rank experiment to any `r`.
pub fn rm_weights(ranks: &RankSystem, r: u32) -> Result<WeightAssignment> {
    ranks.check_ranks(r)?;
    let ladder: Vec<Weight> = (1..=r)
        .map(|rank| {
            let v: BigInt = (BigInt::one() << (r - rank + 1)) - 1;
            Weight::from(v.to_biguint().expect("positive"))
        })
        .collect();
    let mut w = WeightAssignment::zeros(ranks.a_count, ranks.b_count);
    for ((a, b), rank) in ranks.edges() {
        w.set(a, b, ladder[rank as usize - 1].clone());
    }
    Ok(w)
}

/// `w(e) = (D + 1) 2^(r - rank(e)) - D - d(e)`; non-edges weigh 0.
///
/// The closed form turns negative when `(D + 1) 2^(r - rank) < D + d(e)`;
/// such instances are rejected with [`Error::NegativeWeight`].
pub fn mcrm_weights(ranks: &RankSystem, r: u32) -> Result<WeightAssignment> {
    ranks.check_ranks(r)?;
    let dmax = BigInt::from(ranks.max_distance);
    let mut w = WeightAssignment::zeros(ranks.a_count, ranks.b_count);
    for ((a, b), rank) in ranks.edges() {
        let d = ranks
            .distance(a, b)
            .ok_or(Error::MissingDistance { a, b })?;
        let v: BigInt = ((&dmax + 1) << (r - rank)) - &dmax - d;
        match v.to_biguint() {
            Some(v) => w.set(a, b, Weight::from(v)),
            None => {
                return Err(Error::NegativeWeight {
                    a,
                    b,
                    value: v.to_i128().unwrap_or(i128::MIN),
                })
            }
        }
    }
    Ok(w)
}

/// One edge of a two-sided preference system: `a` ranks `b` as `rank_by_a`
/// and `b` ranks `a` as `rank_by_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MutualRank {
    pub a: usize,
    pub b: usize,
    pub rank_by_a: u32,
    pub rank_by_b: u32,
}

/// Fair-matching utilities over `r + 1` functions: `u_1 = 1`, and for
/// `1 <= j <= r`, `u_{j+1}` counts how many endpoints rank the other at
/// most `r - j + 1`. Bounds are `<1, 2, ..., 2>`.
pub fn fair_utilities(
    a_count: usize,
    b_count: usize,
    edges: &[MutualRank],
    r: u32,
) -> Result<Instance> {
    let mut bounds = vec![2; r as usize + 1];
    bounds[0] = 1;
    let mut inst = Instance::new(a_count, b_count, bounds)?;
    let mut u = vec![0; r as usize + 1];
    for e in edges {
        for rank in [e.rank_by_a, e.rank_by_b] {
            if rank == 0 || rank > r {
                return Err(Error::RankOutOfBounds {
                    a: e.a,
                    b: e.b,
                    rank,
                    max: r,
                });
            }
        }
        u[0] = 1;
        for j in 1..=r {
            let threshold = r - j + 1;
            u[j as usize] = (e.rank_by_a <= threshold) as u64 + (e.rank_by_b <= threshold) as u64;
        }
        inst.add_edge(e.a, e.b, &u)?;
    }
    Ok(inst)
}

/// True iff every utility bound equals `w_max`.
pub fn validate_uniform_bound(inst: &Instance, w_max: u64) -> bool {
    inst.bounds().iter().all(|&u| u == w_max)
}
