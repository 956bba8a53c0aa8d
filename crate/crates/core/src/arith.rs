//! Exact integer backends. Weights are arbitrary precision; hot loops run on
//! the narrowest primitive that provably cannot overflow and fall back to
//! big integers otherwise.

use std::ops::{Add, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::weights::Weight;

/// Unsigned magnitude used by the weight-condition scan.
pub(crate) trait Magnitude: Clone + Ord + Send + Sync {
    fn from_weight(w: &Weight) -> Self;
    fn sum(&self, other: &Self) -> Self;
}

impl Magnitude for u128 {
    fn from_weight(w: &Weight) -> Self {
        w.to_u128().expect("weight range checked by caller")
    }

    fn sum(&self, other: &Self) -> Self {
        self + other
    }
}

impl Magnitude for BigUint {
    fn from_weight(w: &Weight) -> Self {
        w.as_biguint().clone()
    }

    fn sum(&self, other: &Self) -> Self {
        self + other
    }
}

/// Signed scalar used by the assignment solver.
pub(crate) trait Scalar:
    Clone + Ord + Add<Output = Self> + Sub<Output = Self> + Send + Sync + std::fmt::Debug
{
    fn zero() -> Self;
    fn from_weight(w: &Weight) -> Self;
    fn neg(&self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }

    fn from_weight(w: &Weight) -> Self {
        w.to_u64()
            .and_then(|v| i64::try_from(v).ok())
            .expect("weight range checked by caller")
    }

    fn neg(&self) -> Self {
        -self
    }

    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }

    fn from_weight(w: &Weight) -> Self {
        w.as_biguint()
            .to_i128()
            .expect("weight range checked by caller")
    }

    fn neg(&self) -> Self {
        -self
    }

    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn from_weight(w: &Weight) -> Self {
        BigInt::from(w.as_biguint().clone())
    }

    fn neg(&self) -> Self {
        -self
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}
