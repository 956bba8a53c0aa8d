use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::model::{CompletedInstance, Matching, Pair, Profile};

fn check_perfect(m: &Matching, completed: &CompletedInstance) -> Result<usize> {
    let inst = completed.instance();
    if !completed.is_balanced() {
        return Err(Error::NotBalanced {
            a_count: inst.a_count(),
            b_count: inst.b_count(),
        });
    }
    let n = inst.a_count();
    for v in 0..n {
        if m.partner_of_a(v).is_none() {
            return Err(Error::NotPerfect {
                side: 'a',
                index: v,
            });
        }
        if m.partner_of_b(v).is_none() {
            return Err(Error::NotPerfect {
                side: 'b',
                index: v,
            });
        }
    }
    if m.len() != n {
        // pairs referencing vertices outside the instance
        return Err(Error::NotPerfect {
            side: 'a',
            index: n,
        });
    }
    Ok(n)
}

fn utilities(completed: &CompletedInstance, a: usize, b: usize) -> &[u64] {
    completed
        .instance()
        .utilities_of(a, b)
        .expect("completed instances contain every pair")
}

/// `p({(a, b)}) > p({(a, M(a)), (M(b), b)})` for a perfect matching `m`.
fn is_improving(m: &Matching, completed: &CompletedInstance, a: usize, b: usize) -> bool {
    let (Some(mb), Some(ma)) = (m.partner_of_a(a), m.partner_of_b(b)) else {
        return false;
    };
    if mb == b {
        return false;
    }
    let single = Profile::from_utilities(utilities(completed, a, b));
    let mut displaced = Profile::from_utilities(utilities(completed, a, mb));
    displaced.add_utilities(utilities(completed, ma, b));
    single.cmp(&displaced) == Ordering::Greater
}

/// Finds the lexicographically smallest improving pair of a perfect matching
/// on a balanced completed instance.
pub fn improving_pair(m: &Matching, completed: &CompletedInstance) -> Result<Option<Pair>> {
    let n = check_perfect(m, completed)?;
    for a in 0..n {
        for b in 0..n {
            if is_improving(m, completed, a, b) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// Swaps in the improving pair `(a, b)`: `(a, M(a))` and `(M(b), b)` become
/// `(a, b)` and `(M(b), M(a))`.
pub fn improve(m: &Matching, completed: &CompletedInstance, pair: Pair) -> Result<Matching> {
    check_perfect(m, completed)?;
    let (a, b) = pair;
    if !is_improving(m, completed, a, b) {
        return Err(Error::NotImproving { a, b });
    }
    let mut next = m.clone();
    let old_b = next.remove_a(a).expect("perfect matching");
    let old_a = m.partner_of_b(b).expect("perfect matching");
    next.remove_a(old_a);
    next.insert(a, b)?;
    next.insert(old_a, old_b)?;
    Ok(next)
}
