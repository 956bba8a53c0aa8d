use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Non-negative edge weight of unbounded size.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigUint);

impl Weight {
    pub fn zero() -> Self {
        Weight(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    /// `2^exp`.
    pub fn pow2(exp: u32) -> Self {
        Weight(BigUint::from(1u8) << exp)
    }
}

impl From<u64> for Weight {
    fn from(v: u64) -> Self {
        Weight(BigUint::from(v))
    }
}

impl From<u128> for Weight {
    fn from(v: u128) -> Self {
        Weight(BigUint::from(v))
    }
}

impl From<BigUint> for Weight {
    fn from(v: BigUint) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Serialized as a decimal string so no precision is lost.
impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(Error::Validation(format!(
                "`{s}` is not a non-negative decimal weight"
            )));
        }
        BigUint::from_str(s)
            .map(Weight)
            .map_err(|e| Error::Validation(format!("bad weight `{s}`: {e}")))
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        Weight(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        self.0 += &rhs.0;
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |mut acc, w| {
            acc += w;
            acc
        })
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |acc, w| acc + w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_long_decimals() {
        let s = "340282366920938463463374607431768211456000";
        let w: Weight = s.parse().unwrap();
        assert_eq!(w.to_string(), s);
        assert!(w.to_u128().is_none());
        assert!("-3".parse::<Weight>().is_err());
        assert!("".parse::<Weight>().is_err());
        assert!("1e3".parse::<Weight>().is_err());
    }

    #[test]
    fn arithmetic() {
        let ws = [Weight::from(3u64), Weight::from(4u64)];
        assert_eq!(ws.iter().sum::<Weight>(), Weight::from(7u64));
        assert_eq!(Weight::pow2(70).bits(), 71);
    }
}
