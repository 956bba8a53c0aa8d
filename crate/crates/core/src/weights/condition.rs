//! Checker for the sufficient condition on weight functions:
//!
//! `p({(a,b)}) > p({(a,b'), (a',b)})  =>  w(a,b) > w(a,b') + w(a',b)`
//!
//! for every vertex-sharing triple with `b' != b` and `a' != a`. Unbalanced
//! instances are checked after padding the smaller side with dummy vertices,
//! so that every vertex has a partner as in the reduction; counterexamples
//! may then name dummy indices.
//!
//! The exhaustive check does not enumerate triples one by one. Lexicographic
//! order on integer vectors is translation invariant, so the premise is
//! `u(a',b) <lex u(a,b) - u(a,b')`: the admissible `a'` form a prefix of
//! column `b` sorted by utility vector, and only the heaviest `a' != a` in
//! that prefix matters. Pairs `(a,b')` of one row with equal utilities and
//! equal weights behave identically, so each row is scanned once per such
//! class. The first violation in `(a, b, b', a')` order is then located by
//! a direct scan of its `(a, b)`, which keeps the result identical to the
//! naive enumeration.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::Magnitude;
use crate::model::CompletedInstance;
use crate::weights::WeightAssignment;

/// A triple `(a,b), (a,b'), (a',b)` violating the weight condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub a: usize,
    pub b: usize,
    pub b_prime: usize,
    pub a_prime: usize,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Counterexample {
            a,
            b,
            b_prime,
            a_prime,
        } = *self;
        write!(
            f,
            "p({{({a},{b})}}) > p({{({a},{b_prime}),({a_prime},{b})}}) \
             but w({a},{b}) <= w({a},{b_prime}) + w({a_prime},{b})"
        )
    }
}

/// Result of the sampling check. A `None` counterexample only means none of
/// the sampled triples violated the condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledCheck {
    pub counterexample: Option<Counterexample>,
    pub samples: usize,
}

/// The balanced completion and zero-extended weights, when `completed` is
/// not balanced yet.
pub(crate) fn balanced_view(
    completed: &CompletedInstance,
    w: &WeightAssignment,
) -> Option<(CompletedInstance, WeightAssignment)> {
    w.check_shape(completed)
        .expect("weight assignment must match the completed instance");
    if completed.is_balanced() {
        return None;
    }
    let balanced = completed.balanced();
    let w = w
        .extended_to(&balanced)
        .expect("zero extension to a larger square");
    Some((balanced, w))
}

/// Exhaustive check. Returns the first violating triple in ascending
/// `(a, b, b', a')` order, or `None` if the condition holds.
pub fn satisfies_condition(
    completed: &CompletedInstance,
    w: &WeightAssignment,
) -> Option<Counterexample> {
    if let Some((balanced, w)) = balanced_view(completed, w) {
        return satisfies_condition(&balanced, &w);
    }
    if w.max_weight().bits() <= 126 {
        let weights: Vec<u128> = w.as_slice().iter().map(u128::from_weight).collect();
        Scan::new(completed, &weights).run()
    } else {
        let weights: Vec<BigUint> = w.as_slice().iter().map(BigUint::from_weight).collect();
        Scan::new(completed, &weights).run()
    }
}

/// Checks `samples` uniformly drawn triples (non-exhaustive).
pub fn satisfies_condition_sampled(
    completed: &CompletedInstance,
    w: &WeightAssignment,
    samples: usize,
    seed: u64,
) -> SampledCheck {
    if let Some((balanced, w)) = balanced_view(completed, w) {
        return satisfies_condition_sampled(&balanced, &w, samples, seed);
    }
    let inst = completed.instance();
    let (na, nb) = (inst.a_count(), inst.b_count());
    if na < 2 || nb < 2 {
        return SampledCheck {
            counterexample: None,
            samples: 0,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let a = rng.gen_range(0..na);
        let b = rng.gen_range(0..nb);
        let b_prime = (b + rng.gen_range(1..nb)) % nb;
        let a_prime = (a + rng.gen_range(1..na)) % na;
        if violates(completed, w, a, b, b_prime, a_prime) {
            return SampledCheck {
                counterexample: Some(Counterexample {
                    a,
                    b,
                    b_prime,
                    a_prime,
                }),
                samples: i + 1,
            };
        }
    }
    SampledCheck {
        counterexample: None,
        samples,
    }
}

/// Direct evaluation of one triple.
pub(crate) fn violates(
    completed: &CompletedInstance,
    w: &WeightAssignment,
    a: usize,
    b: usize,
    b_prime: usize,
    a_prime: usize,
) -> bool {
    let inst = completed.instance();
    let single = inst.utilities_of(a, b).expect("complete");
    let left = inst.utilities_of(a, b_prime).expect("complete");
    let right = inst.utilities_of(a_prime, b).expect("complete");
    let premise = single
        .iter()
        .zip(left.iter().zip(right))
        .map(|(&s, (&l, &r))| (s as u128).cmp(&(l as u128 + r as u128)))
        .find(|o| o.is_ne())
        == Some(Ordering::Greater);
    premise && w.get(a, b) <= &(w.get(a, b_prime) + w.get(a_prime, b))
}

const NONE: u32 = u32::MAX;

struct Column {
    /// Row indices sorted by utility vector (ties by row index).
    order: Vec<u32>,
    /// Heaviest and second heaviest rows within each prefix of `order`.
    best: Vec<[u32; 2]>,
}

struct Scan<'a, M> {
    completed: &'a CompletedInstance,
    weights: &'a [M],
    na: usize,
    nb: usize,
}

impl<'a, M: Magnitude> Scan<'a, M> {
    fn new(completed: &'a CompletedInstance, weights: &'a [M]) -> Self {
        let inst = completed.instance();
        Scan {
            completed,
            weights,
            na: inst.a_count(),
            nb: inst.b_count(),
        }
    }

    fn util(&self, a: usize, b: usize) -> &[u64] {
        self.completed.instance().utilities(a * self.nb + b)
    }

    fn weight(&self, a: usize, b: usize) -> &M {
        &self.weights[a * self.nb + b]
    }

    fn run(&self) -> Option<Counterexample> {
        if self.na < 2 || self.nb < 2 {
            return None;
        }
        let columns: Vec<Column> = (0..self.nb)
            .into_par_iter()
            .map(|b| self.column(b))
            .collect();
        (0..self.na)
            .into_par_iter()
            .find_map_first(|a| self.scan_row(a, &columns))
    }

    fn column(&self, b: usize) -> Column {
        let mut order: Vec<u32> = (0..self.na as u32).collect();
        order.sort_by(|&x, &y| self.util(x as usize, b).cmp(self.util(y as usize, b)));
        let mut best = Vec::with_capacity(order.len());
        let mut top = [NONE, NONE];
        for &a in &order {
            let w = self.weight(a as usize, b);
            if top[0] == NONE || w > self.weight(top[0] as usize, b) {
                top = [a, top[0]];
            } else if top[1] == NONE || w > self.weight(top[1] as usize, b) {
                top[1] = a;
            }
            best.push(top);
        }
        Column { order, best }
    }

    /// Row classes: pairs `(a, b')` grouped by utility vector and weight;
    /// up to two members are kept per class.
    fn row_classes(&self, a: usize) -> Vec<[usize; 2]> {
        let mut cols: Vec<usize> = (0..self.nb).collect();
        cols.sort_by(|&x, &y| {
            self.util(a, x)
                .cmp(self.util(a, y))
                .then_with(|| self.weight(a, x).cmp(self.weight(a, y)))
                .then(x.cmp(&y))
        });
        let mut classes: Vec<[usize; 2]> = Vec::new();
        let mut prev: Option<usize> = None;
        for b in cols {
            let same = prev.is_some_and(|p| {
                self.util(a, p) == self.util(a, b) && self.weight(a, p) == self.weight(a, b)
            });
            match classes.last_mut() {
                Some(last) if same => {
                    if last[1] == usize::MAX {
                        last[1] = b;
                    }
                }
                _ => classes.push([b, usize::MAX]),
            }
            prev = Some(b);
        }
        classes
    }

    fn scan_row(&self, a: usize, columns: &[Column]) -> Option<Counterexample> {
        let classes = self.row_classes(a);
        let r = self.completed.instance().r();
        let mut target = vec![0i128; r];
        for b in 0..self.nb {
            let single = self.util(a, b);
            let w_ab = self.weight(a, b);
            for class in &classes {
                let b_prime = if class[0] != b { class[0] } else { class[1] };
                if b_prime == usize::MAX {
                    continue;
                }
                for (t, (&s, &l)) in target
                    .iter_mut()
                    .zip(single.iter().zip(self.util(a, b_prime)))
                {
                    *t = s as i128 - l as i128;
                }
                if self
                    .heaviest_below(&columns[b], b, a, &target)
                    .is_some_and(|a_prime| {
                        self.weight(a, b_prime).sum(self.weight(a_prime, b)) >= *w_ab
                    })
                {
                    return Some(self.first_violation_at(a, b));
                }
            }
        }
        None
    }

    /// Heaviest row `a' != a` whose utility in column `b` is lexicographically
    /// below `target`.
    fn heaviest_below(
        &self,
        column: &Column,
        b: usize,
        a: usize,
        target: &[i128],
    ) -> Option<usize> {
        let k = column
            .order
            .partition_point(|&row| lex_below(self.util(row as usize, b), target));
        if k == 0 {
            return None;
        }
        let [first, second] = column.best[k - 1];
        let pick = if first as usize != a { first } else { second };
        (pick != NONE).then_some(pick as usize)
    }

    fn first_violation_at(&self, a: usize, b: usize) -> Counterexample {
        let single = self.util(a, b);
        let w_ab = self.weight(a, b);
        for b_prime in (0..self.nb).filter(|&x| x != b) {
            let left = self.util(a, b_prime);
            for a_prime in (0..self.na).filter(|&x| x != a) {
                let right = self.util(a_prime, b);
                let premise = single
                    .iter()
                    .zip(left.iter().zip(right))
                    .map(|(&s, (&l, &r))| (s as u128).cmp(&(l as u128 + r as u128)))
                    .find(|o| o.is_ne())
                    == Some(Ordering::Greater);
                if premise && self.weight(a, b_prime).sum(self.weight(a_prime, b)) >= *w_ab {
                    return Counterexample {
                        a,
                        b,
                        b_prime,
                        a_prime,
                    };
                }
            }
        }
        unreachable!("indexed scan reported a violation at ({a}, {b})")
    }
}

fn lex_below(u: &[u64], target: &[i128]) -> bool {
    for (&x, &t) in u.iter().zip(target) {
        match (x as i128).cmp(&t) {
            Ordering::Less => return true,
            Ordering::Greater => return false,
            Ordering::Equal => {}
        }
    }
    false
}
