use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::model::CompletedInstance;
use crate::weights::{Weight, WeightAssignment};

/// Place values `prod_{j > i} (2 U_j + 1)` for each position `i`.
pub fn place_values(bounds: &[u64]) -> Vec<Weight> {
    let mut places = vec![BigUint::one(); bounds.len()];
    for i in (0..bounds.len().saturating_sub(1)).rev() {
        places[i] = &places[i + 1] * radix(bounds[i + 1]);
    }
    places.into_iter().map(Weight::from).collect()
}

fn radix(bound: u64) -> BigUint {
    BigUint::from(bound) * 2u32 + 1u32
}

/// `prod_i (2 U_i + 1)`, a strict upper bound on every mixed-radix weight.
pub fn radix_bound(bounds: &[u64]) -> Weight {
    Weight::from(bounds.iter().map(|&u| radix(u)).product::<BigUint>())
}

/// Mixed-radix value of one utility vector.
pub fn mixed_radix_value(utilities: &[u64], bounds: &[u64]) -> Weight {
    let mut acc = BigUint::default();
    for (&u, &bound) in utilities.iter().zip(bounds) {
        acc = acc * radix(bound) + u;
    }
    Weight::from(acc)
}

/// Reads each utility vector as a mixed-radix number with base `2 U_i + 1`
/// at position `i`; position 1 is most significant.
///
/// Padding pairs have zero utilities and therefore weight 0.
pub fn mixed_radix(completed: &CompletedInstance) -> WeightAssignment {
    let inst = completed.instance();
    let bounds = inst.bounds();
    let weights = if radix_bound(bounds).bits() <= 127 {
        let radices: Vec<u128> = bounds.iter().map(|&u| 2 * u as u128 + 1).collect();
        (0..inst.edge_count())
            .map(|e| {
                let v = inst
                    .utilities(e)
                    .iter()
                    .zip(&radices)
                    .fold(0u128, |acc, (&u, &base)| acc * base + u as u128);
                Weight::from(v)
            })
            .collect()
    } else {
        (0..inst.edge_count())
            .map(|e| mixed_radix_value(inst.utilities(e), bounds))
            .collect()
    };
    WeightAssignment::from_dense(inst.a_count(), inst.b_count(), weights)
}

/// Decodes a mixed-radix weight back into its digits.
pub fn mixed_radix_digits(weight: &Weight, bounds: &[u64]) -> Vec<u64> {
    let mut value = weight.as_biguint().clone();
    let mut digits = vec![0; bounds.len()];
    for (i, &bound) in bounds.iter().enumerate().rev() {
        let base = radix(bound);
        digits[i] = (&value % &base).to_u64().expect("digit below radix");
        value /= base;
    }
    digits
}
