//! Brute-force ground truth for small instances.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::model::{profile_of, CompletedInstance, Instance, Matching, Profile};
use crate::solver::AssignmentProblem;
use crate::weights::{balanced_view, violates, Counterexample, Weight, WeightAssignment};

/// Largest edge count accepted by the enumerators.
pub const MAX_EDGES: usize = 24;
/// Largest side accepted by [`brute_force_assignment`].
pub const MAX_ASSIGNMENT_SIDE: usize = 8;

fn guard(inst: &Instance) -> Result<()> {
    if inst.edge_count() > MAX_EDGES {
        return Err(Error::TooLarge {
            edges: inst.edge_count(),
            limit: MAX_EDGES,
        });
    }
    Ok(())
}

/// Calls `visit` once for every matching of `inst`, the empty one included.
/// Order: recursive exclusion before inclusion over edges in edge order.
pub fn for_each_matching(inst: &Instance, mut visit: impl FnMut(&Matching)) -> Result<()> {
    guard(inst)?;
    let mut used_a = vec![false; inst.a_count()];
    let mut used_b = vec![false; inst.b_count()];
    let mut current = Matching::new();
    recurse(inst, 0, &mut used_a, &mut used_b, &mut current, &mut visit);
    Ok(())
}

fn recurse(
    inst: &Instance,
    edge: usize,
    used_a: &mut [bool],
    used_b: &mut [bool],
    current: &mut Matching,
    visit: &mut impl FnMut(&Matching),
) {
    if edge == inst.edge_count() {
        visit(current);
        return;
    }
    recurse(inst, edge + 1, used_a, used_b, current, visit);
    let (a, b) = inst.pair(edge);
    if !used_a[a] && !used_b[b] {
        used_a[a] = true;
        used_b[b] = true;
        current.insert(a, b).expect("free endpoints");
        recurse(inst, edge + 1, used_a, used_b, current, visit);
        current.remove_a(a);
        used_a[a] = false;
        used_b[b] = false;
    }
}

pub fn enumerate_matchings(inst: &Instance) -> Result<Vec<Matching>> {
    let mut all = Vec::new();
    for_each_matching(inst, |m| all.push(m.clone()))?;
    Ok(all)
}

/// The lexicographically largest profile and every matching attaining it.
pub fn brute_force_optimal(inst: &Instance) -> Result<(Profile, Vec<Matching>)> {
    let mut best = Profile::zeros(inst.r());
    let mut argmax = Vec::new();
    for_each_matching(inst, |m| {
        let p = profile_of(m, inst).expect("enumerated pairs are edges");
        match p.cmp(&best) {
            Ordering::Greater => {
                best = p;
                argmax.clear();
                argmax.push(m.clone());
            }
            Ordering::Equal => argmax.push(m.clone()),
            Ordering::Less => {}
        }
    })?;
    Ok((best, argmax))
}

/// Maximum total weight over all matchings of `inst` and every matching
/// attaining it. `w` is indexed over `A x B`.
pub fn brute_force_max_weight(
    inst: &Instance,
    w: &WeightAssignment,
) -> Result<(Weight, Vec<Matching>)> {
    if (w.a_count(), w.b_count()) != (inst.a_count(), inst.b_count()) {
        return Err(Error::WeightShape(
            "weights do not cover the instance".into(),
        ));
    }
    let mut best = Weight::zero();
    let mut argmax = Vec::new();
    for_each_matching(inst, |m| {
        let total: Weight = m.pairs().map(|(a, b)| w.get(a, b)).sum();
        match total.cmp(&best) {
            Ordering::Greater => {
                best = total;
                argmax.clear();
                argmax.push(m.clone());
            }
            Ordering::Equal => argmax.push(m.clone()),
            Ordering::Less => {}
        }
    })?;
    Ok((best, argmax))
}

/// Maximum total weight over all perfect matchings (permutations) of a
/// square problem.
pub fn brute_force_assignment(p: &AssignmentProblem) -> Result<Weight> {
    let n = p.n();
    if n > MAX_ASSIGNMENT_SIDE {
        return Err(Error::TooLarge {
            edges: n * n,
            limit: MAX_ASSIGNMENT_SIDE * MAX_ASSIGNMENT_SIDE,
        });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = Weight::zero();
    permute(p, &mut perm, 0, &mut best);
    Ok(best)
}

fn permute(p: &AssignmentProblem, perm: &mut [usize], k: usize, best: &mut Weight) {
    if k == perm.len() {
        let total: Weight = perm.iter().enumerate().map(|(a, &b)| p.weight(a, b)).sum();
        if total > *best {
            *best = total;
        }
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(p, perm, k + 1, best);
        perm.swap(k, i);
    }
}

/// Naive triple enumeration of the weight condition, in `(a, b, b', a')`
/// order.
pub fn condition_brute_force(
    completed: &CompletedInstance,
    w: &WeightAssignment,
) -> Option<Counterexample> {
    if let Some((balanced, w)) = balanced_view(completed, w) {
        return condition_brute_force(&balanced, &w);
    }
    let inst = completed.instance();
    let (na, nb) = (inst.a_count(), inst.b_count());
    for a in 0..na {
        for b in 0..nb {
            for b_prime in (0..nb).filter(|&x| x != b) {
                for a_prime in (0..na).filter(|&x| x != a) {
                    if violates(completed, w, a, b, b_prime, a_prime) {
                        return Some(Counterexample {
                            a,
                            b,
                            b_prime,
                            a_prime,
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::complete;
    use crate::weights::mixed_radix;

    #[test]
    fn counts() {
        let one = Instance::from_edges(1, 1, vec![1], [(0, 0, [1])]).unwrap();
        assert_eq!(enumerate_matchings(&one).unwrap().len(), 2);

        let k22 = Instance::from_edges(
            2,
            2,
            vec![1],
            [(0, 0, [0]), (0, 1, [0]), (1, 0, [0]), (1, 1, [0])],
        )
        .unwrap();
        assert_eq!(enumerate_matchings(&k22).unwrap().len(), 7);

        let path = Instance::from_edges(2, 1, vec![1], [(0, 0, [1]), (1, 0, [1])]).unwrap();
        assert_eq!(enumerate_matchings(&path).unwrap().len(), 3);
    }

    #[test]
    fn guard_rejects_large() {
        let mut inst = Instance::new(5, 5, vec![1]).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                inst.add_edge(a, b, &[0]).unwrap();
            }
        }
        assert!(matches!(
            enumerate_matchings(&inst),
            Err(Error::TooLarge { edges: 25, .. })
        ));
    }

    #[test]
    fn optimal_profiles() {
        let zeros = Instance::from_edges(2, 2, vec![1], [(0, 0, [0]), (1, 1, [0])]).unwrap();
        let (p, all) = brute_force_optimal(&zeros).unwrap();
        assert_eq!(p, Profile::zeros(1));
        assert_eq!(all.len(), 4);

        let inst = Instance::from_edges(
            2,
            2,
            vec![1, 2],
            [(0, 0, [1, 0]), (0, 1, [0, 2]), (1, 1, [1, 0])],
        )
        .unwrap();
        let (p, all) = brute_force_optimal(&inst).unwrap();
        assert_eq!(p, Profile::from_values(vec![2, 0]));
        assert_eq!(all, vec![Matching::from_pairs([(0, 0), (1, 1)]).unwrap()]);

        let single = Instance::from_edges(1, 1, vec![1, 1], [(0, 0, [1, 1])]).unwrap();
        let (p, all) = brute_force_optimal(&single).unwrap();
        assert_eq!(p, Profile::from_values(vec![1, 1]));
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn assignment_permutations() {
        let p = AssignmentProblem::from_rows(&[vec![1, 9], vec![8, 1]]).unwrap();
        assert_eq!(brute_force_assignment(&p).unwrap(), Weight::from(17u64));
        let big = AssignmentProblem::from_rows(&vec![vec![0; 9]; 9]).unwrap();
        assert!(matches!(
            brute_force_assignment(&big),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn max_weight() {
        let inst = Instance::from_edges(
            2,
            2,
            vec![2],
            [(0, 0, [2]), (0, 1, [1]), (1, 0, [1]), (1, 1, [2])],
        )
        .unwrap();
        let c = complete(&inst);
        let (best, all) = brute_force_max_weight(&inst, &mixed_radix(&c)).unwrap();
        assert_eq!(best, Weight::from(4u64));
        assert_eq!(all, vec![Matching::from_pairs([(0, 0), (1, 1)]).unwrap()]);

        let (best, all) = brute_force_max_weight(&inst, &WeightAssignment::zeros(2, 2)).unwrap();
        assert!(best.is_zero());
        assert_eq!(all.len(), 7);
    }
}
