use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::model::Pair;

/// A set of vertex-disjoint `(a, b)` pairs with partner lookup on both sides.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    by_a: BTreeMap<usize, usize>,
    by_b: BTreeMap<usize, usize>,
}

impl Matching {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = Pair>>(pairs: I) -> Result<Self> {
        let mut m = Matching::new();
        for (a, b) in pairs {
            m.insert(a, b)?;
        }
        Ok(m)
    }

    /// Adds `(a, b)`; fails if either endpoint is already matched.
    pub fn insert(&mut self, a: usize, b: usize) -> Result<()> {
        if self.by_a.contains_key(&a) || self.by_b.contains_key(&b) {
            return Err(Error::VertexConflict { a, b });
        }
        self.by_a.insert(a, b);
        self.by_b.insert(b, a);
        Ok(())
    }

    /// Removes the pair containing `a`, returning its partner.
    pub fn remove_a(&mut self, a: usize) -> Option<usize> {
        let b = self.by_a.remove(&a)?;
        self.by_b.remove(&b);
        Some(b)
    }

    pub fn partner_of_a(&self, a: usize) -> Option<usize> {
        self.by_a.get(&a).copied()
    }

    pub fn partner_of_b(&self, b: usize) -> Option<usize> {
        self.by_b.get(&b).copied()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.by_a.get(&a) == Some(&b)
    }

    /// Pairs in ascending order of `a`.
    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        self.by_a.iter().map(|(&a, &b)| (a, b))
    }

    pub fn len(&self) -> usize {
        self.by_a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_a.is_empty()
    }

    /// Keeps only the pairs accepted by `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(Pair) -> bool) -> Matching {
        let mut m = Matching::new();
        for (a, b) in self.pairs().filter(|&p| keep(p)) {
            m.by_a.insert(a, b);
            m.by_b.insert(b, a);
        }
        m
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.pairs().map(|(a, b)| [a, b]))
    }
}

/// Rejects pair lists that share a vertex.
impl<'de> Deserialize<'de> for Matching {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[usize; 2]>::deserialize(deserializer)?;
        Matching::from_pairs(pairs.into_iter().map(|[a, b]| (a, b)))
            .map_err(serde::de::Error::custom)
    }
}
