//! Exact maximum-weight perfect matching on square complete bipartite
//! graphs, by the shortest-augmenting-path assignment method with vertex
//! potentials.
//!
//! The solver runs on `i64` or `i128` when the weights are small enough that
//! no intermediate value can overflow, and on big integers otherwise.
//! Potentials are returned as a dual certificate: `y_a + y_b >= w(a, b)` for
//! every pair, with equality on matched pairs.

use num_bigint::{BigInt, BigUint};

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::model::Matching;
use crate::weights::{Weight, WeightAssignment};

/// Square, complete weight matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentProblem {
    n: usize,
    weights: Vec<Weight>,
}

impl AssignmentProblem {
    /// `weights` is row-major, `n * n` entries.
    pub fn new(n: usize, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != n * n {
            return Err(Error::WeightShape(format!(
                "{} weights for a {n} x {n} problem",
                weights.len()
            )));
        }
        Ok(AssignmentProblem { n, weights })
    }

    pub fn from_assignment(w: &WeightAssignment) -> Result<Self> {
        if w.a_count() != w.b_count() {
            return Err(Error::NotBalanced {
                a_count: w.a_count(),
                b_count: w.b_count(),
            });
        }
        AssignmentProblem::new(w.a_count(), w.as_slice().to_vec())
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::WeightShape("rows must form a square matrix".into()));
        }
        let weights = rows.iter().flatten().map(|&v| Weight::from(v)).collect();
        AssignmentProblem::new(n, weights)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, a: usize, b: usize) -> &Weight {
        &self.weights[a * self.n + b]
    }
}

/// Dual variables of a solved problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potentials {
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateViolation {
    /// `y_a + y_b < w(a, b)`.
    Infeasible { a: usize, b: usize },
    /// Matched pair with `y_a + y_b != w(a, b)`.
    NotTight { a: usize, b: usize },
    /// The matching does not cover every vertex.
    NotPerfect,
}

impl Potentials {
    /// Verifies dual feasibility on every pair and tightness on `m`.
    pub fn check(
        &self,
        p: &AssignmentProblem,
        m: &Matching,
    ) -> std::result::Result<(), CertificateViolation> {
        if m.len() != p.n || (0..p.n).any(|v| m.partner_of_b(v).is_none()) {
            return Err(CertificateViolation::NotPerfect);
        }
        for a in 0..p.n {
            for b in 0..p.n {
                let w = BigInt::from(p.weight(a, b).as_biguint().clone());
                let y = &self.a[a] + &self.b[b];
                if y < w {
                    return Err(CertificateViolation::Infeasible { a, b });
                }
                if m.contains(a, b) && y != w {
                    return Err(CertificateViolation::NotTight { a, b });
                }
            }
        }
        Ok(())
    }

    /// Dual objective `sum y_a + sum y_b`; equals the optimum at termination.
    pub fn objective(&self) -> BigInt {
        self.a.iter().chain(&self.b).sum()
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub matching: Matching,
    pub total: Weight,
    pub potentials: Potentials,
}

/// Maximum-weight perfect matching.
pub fn max_weight_matching(p: &AssignmentProblem) -> Matching {
    solve(p).matching
}

/// Solves `p`, returning the matching, its weight and the dual certificate.
///
/// Among equally good augmenting choices the lowest column index wins, so
/// the output is deterministic.
pub fn solve(p: &AssignmentProblem) -> Solution {
    let max = p.weights.iter().max().cloned().unwrap_or_default();
    // slack for potentials and the sentinel: 16 (n + 1)^2 (W + 1)
    let n_bits = (p.n as u64 + 1).ilog2() as u64 + 1;
    let bits = max.bits() + 2 * n_bits + 6;
    let (matching, potentials) = if bits < 62 {
        hungarian::<i64>(p, &max)
    } else if bits < 126 {
        hungarian::<i128>(p, &max)
    } else {
        hungarian::<BigInt>(p, &max)
    };
    let total = matching
        .pairs()
        .map(|(a, b)| p.weight(a, b))
        .sum::<Weight>();
    Solution {
        matching,
        total,
        potentials,
    }
}

fn hungarian<T: Scalar>(p: &AssignmentProblem, max: &Weight) -> (Matching, Potentials) {
    let n = p.n;
    if n == 0 {
        return (
            Matching::new(),
            Potentials {
                a: vec![],
                b: vec![],
            },
        );
    }
    let cost: Vec<T> = p.weights.iter().map(|w| T::from_weight(w).neg()).collect();
    let inf = {
        let side = BigUint::from(n as u64 + 1);
        let big = &side * &side * 16u32 * (max.as_biguint() + 1u32);
        T::from_weight(&Weight::from(big))
    };

    // 1-based rows and columns; column 0 is the virtual root.
    let mut u = vec![T::zero(); n + 1];
    let mut v = vec![T::zero(); n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    let mut minv = vec![inf.clone(); n + 1];
    let mut used = vec![false; n + 1];

    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0usize;
        minv.fill(inf.clone());
        used.fill(false);
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let row = &cost[(i0 - 1) * n..i0 * n];
            let mut delta = inf.clone();
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = row[j - 1].clone() - u[i0].clone() - v[j].clone();
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j].clone();
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    let r = row_of[j];
                    u[r] = u[r].clone() + delta.clone();
                    v[j] = v[j].clone() - delta.clone();
                } else {
                    minv[j] = minv[j].clone() - delta.clone();
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut matching = Matching::new();
    for j in 1..=n {
        matching
            .insert(row_of[j] - 1, j - 1)
            .expect("assignment is a permutation");
    }
    // u + v <= -w  <=>  (-u) + (-v) >= w
    let potentials = Potentials {
        a: u[1..].iter().map(|x| x.neg().to_bigint()).collect(),
        b: v[1..].iter().map(|x| x.neg().to_bigint()).collect(),
    };
    (matching, potentials)
}

/// Exact total weight of `m` in `p`.
pub fn matching_weight(m: &Matching, p: &AssignmentProblem) -> Result<Weight> {
    let mut total = Weight::zero();
    for (a, b) in m.pairs() {
        if a >= p.n || b >= p.n {
            return Err(Error::UnknownEdge { a, b });
        }
        total += p.weight(a, b);
    }
    Ok(total)
}
