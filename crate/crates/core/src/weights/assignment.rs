use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::text::{content_lines, parse_field};
use crate::model::{CompletedInstance, Pair};
use crate::weights::Weight;

/// One weight per pair of a completed instance, row-major over `A x B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    a_count: usize,
    b_count: usize,
    weights: Vec<Weight>,
}

impl WeightAssignment {
    /// All-zero assignment for an `a_count x b_count` completed instance.
    pub fn zeros(a_count: usize, b_count: usize) -> Self {
        WeightAssignment {
            a_count,
            b_count,
            weights: vec![Weight::zero(); a_count * b_count],
        }
    }

    pub(crate) fn from_dense(a_count: usize, b_count: usize, weights: Vec<Weight>) -> Self {
        debug_assert_eq!(weights.len(), a_count * b_count);
        WeightAssignment {
            a_count,
            b_count,
            weights,
        }
    }

    /// Builds an assignment from listed entries; unlisted pairs weigh 0.
    ///
    /// Entries must name edges of the source instance (padding pairs stay at
    /// zero) and may not repeat.
    pub fn from_table(completed: &CompletedInstance, table: &WeightTable) -> Result<Self> {
        let inst = completed.instance();
        let mut w = WeightAssignment::zeros(inst.a_count(), inst.b_count());
        let mut seen = HashSet::new();
        for (a, b, weight) in &table.entries {
            let (a, b) = (*a, *b);
            if a >= completed.original_a_count()
                || b >= completed.original_b_count()
                || completed.is_padding(a, b)
            {
                return Err(Error::WeightShape(format!(
                    "({a}, {b}) is not an edge of the instance"
                )));
            }
            if !seen.insert((a, b)) {
                return Err(Error::WeightShape(format!(
                    "duplicate weight for ({a}, {b})"
                )));
            }
            w.set(a, b, weight.clone());
        }
        Ok(w)
    }

    pub fn a_count(&self) -> usize {
        self.a_count
    }

    pub fn b_count(&self) -> usize {
        self.b_count
    }

    pub fn get(&self, a: usize, b: usize) -> &Weight {
        &self.weights[a * self.b_count + b]
    }

    pub fn set(&mut self, a: usize, b: usize, w: Weight) {
        self.weights[a * self.b_count + b] = w;
    }

    /// Weights in row-major order.
    pub fn as_slice(&self) -> &[Weight] {
        &self.weights
    }

    pub fn max_weight(&self) -> Weight {
        self.weights.iter().max().cloned().unwrap_or_default()
    }

    /// Checks that the assignment covers exactly the pairs of `completed`.
    pub fn check_shape(&self, completed: &CompletedInstance) -> Result<()> {
        let inst = completed.instance();
        if (self.a_count, self.b_count) != (inst.a_count(), inst.b_count()) {
            return Err(Error::WeightShape(format!(
                "assignment is {} x {}, instance is {} x {}",
                self.a_count,
                self.b_count,
                inst.a_count(),
                inst.b_count()
            )));
        }
        Ok(())
    }

    /// Copies the weights into a larger (balanced) completion; new pairs get 0.
    pub fn extended_to(&self, target: &CompletedInstance) -> Result<WeightAssignment> {
        let inst = target.instance();
        let (a_count, b_count) = (inst.a_count(), inst.b_count());
        if a_count < self.a_count || b_count < self.b_count {
            return Err(Error::WeightShape("target completion is smaller".into()));
        }
        if (a_count, b_count) == (self.a_count, self.b_count) {
            return Ok(self.clone());
        }
        let mut out = WeightAssignment::zeros(a_count, b_count);
        for a in 0..self.a_count {
            for b in 0..self.b_count {
                out.set(a, b, self.get(a, b).clone());
            }
        }
        Ok(out)
    }

    /// Entries for the non-padding pairs, or for every pair.
    pub fn table(&self, completed: &CompletedInstance, include_padding: bool) -> WeightTable {
        let mut entries = Vec::new();
        for a in 0..self.a_count {
            for b in 0..self.b_count {
                if include_padding || !completed.is_padding(a, b) {
                    entries.push((a, b, self.get(a, b).clone()));
                }
            }
        }
        WeightTable { entries }
    }
}

/// Listed `(a, b, weight)` entries; text form is one `a b weight` line each,
/// weights in full decimal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightTable {
    pub entries: Vec<(usize, usize, Weight)>,
}

impl WeightTable {
    pub fn parse(text: &str) -> Result<WeightTable> {
        let mut entries = Vec::new();
        for (line, content) in content_lines(text) {
            let fields: Vec<&str> = content.split_whitespace().collect();
            let [a, b, w] = fields[..] else {
                return Err(Error::Parse {
                    line,
                    message: "expected `a b weight`".into(),
                });
            };
            let a = parse_field(line, a, "a index")?;
            let b = parse_field(line, b, "b index")?;
            let w = w.parse().map_err(|e: Error| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            entries.push((a, b, w));
        }
        Ok(WeightTable { entries })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (a, b, w) in &self.entries {
            let _ = writeln!(out, "{a} {b} {w}");
        }
        out
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.entries.iter().map(|(_, _, w)| w.clone()).collect()
    }

    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        self.entries.iter().map(|&(a, b, _)| (a, b))
    }

    /// Smallest `(a_count, b_count)` covering every entry.
    pub fn extent(&self) -> (usize, usize) {
        self.entries.iter().fold((0, 0), |(na, nb), &(a, b, _)| {
            (na.max(a + 1), nb.max(b + 1))
        })
    }
}
