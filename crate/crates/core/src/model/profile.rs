use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Instance, Matching};

/// Per-utility-function sums over a matching, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Profile(Vec<u128>);

impl Profile {
    pub fn zeros(r: usize) -> Self {
        Profile(vec![0; r])
    }

    pub fn from_values(values: Vec<u128>) -> Self {
        Profile(values)
    }

    pub fn from_utilities(utilities: &[u64]) -> Self {
        Profile(utilities.iter().map(|&u| u as u128).collect())
    }

    pub fn values(&self) -> &[u128] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_utilities(&mut self, utilities: &[u64]) {
        debug_assert_eq!(self.0.len(), utilities.len());
        for (p, &u) in self.0.iter_mut().zip(utilities) {
            *p += u as u128;
        }
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Profile) -> Result<Profile> {
        check_len(self, other)?;
        Ok(Profile(
            self.0.iter().zip(&other.0).map(|(p, q)| p + q).collect(),
        ))
    }

    /// Keeps the first `k` components.
    pub fn truncated(&self, k: usize) -> Profile {
        Profile(self.0[..k.min(self.0.len())].to_vec())
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(">")
    }
}

fn check_len(p: &Profile, q: &Profile) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(())
}

/// Lexicographic comparison of two equal-length profiles.
pub fn cmp_profile(p: &Profile, q: &Profile) -> Result<Ordering> {
    check_len(p, q)?;
    Ok(p.0.cmp(&q.0))
}

/// Sums the utility vectors of the pairs of `m` in `inst`.
pub fn profile_of(m: &Matching, inst: &Instance) -> Result<Profile> {
    let mut profile = Profile::zeros(inst.r());
    for (a, b) in m.pairs() {
        let u = inst.utilities_of(a, b).ok_or(Error::UnknownEdge { a, b })?;
        profile.add_utilities(u);
    }
    Ok(profile)
}
