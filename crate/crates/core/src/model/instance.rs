use std::collections::HashMap;

use crate::error::{Error, Result};

/// An `(a, b)` vertex pair, A-side index first.
pub type Pair = (usize, usize);

#[derive(Debug, Clone)]
enum EdgeIndex {
    /// Edges are exactly `A x B` in row-major order.
    Dense,
    Sparse(HashMap<Pair, usize>),
}

/// A bipartite graph with `r` prioritised integer utility functions.
///
/// Utility function `i` maps every edge into `0..=bounds[i]`; index 0 has the
/// highest priority. Utility vectors are stored contiguously, `r` values per
/// edge, in edge insertion order.
#[derive(Debug, Clone)]
pub struct Instance {
    a_count: usize,
    b_count: usize,
    bounds: Vec<u64>,
    pairs: Vec<Pair>,
    utilities: Vec<u64>,
    index: EdgeIndex,
}

impl Instance {
    /// Creates an instance without edges.
    pub fn new(a_count: usize, b_count: usize, bounds: Vec<u64>) -> Result<Self> {
        if bounds.is_empty() {
            return Err(Error::InvalidInstance(
                "at least one utility function is required".into(),
            ));
        }
        Ok(Instance {
            a_count,
            b_count,
            bounds,
            pairs: Vec::new(),
            utilities: Vec::new(),
            index: EdgeIndex::Sparse(HashMap::new()),
        })
    }

    pub fn from_edges<I, U>(
        a_count: usize,
        b_count: usize,
        bounds: Vec<u64>,
        edges: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, U)>,
        U: AsRef<[u64]>,
    {
        let mut inst = Instance::new(a_count, b_count, bounds)?;
        for (a, b, u) in edges {
            inst.add_edge(a, b, u.as_ref())?;
        }
        Ok(inst)
    }

    /// Builds the complete instance over `A x B` from row-major utilities.
    pub(crate) fn dense(
        a_count: usize,
        b_count: usize,
        bounds: Vec<u64>,
        utilities: Vec<u64>,
    ) -> Self {
        debug_assert_eq!(utilities.len(), a_count * b_count * bounds.len());
        let pairs = (0..a_count)
            .flat_map(|a| (0..b_count).map(move |b| (a, b)))
            .collect();
        Instance {
            a_count,
            b_count,
            bounds,
            pairs,
            utilities,
            index: EdgeIndex::Dense,
        }
    }

    /// Appends an edge, validating indices, utility bounds and uniqueness.
    pub fn add_edge(&mut self, a: usize, b: usize, utilities: &[u64]) -> Result<usize> {
        if a >= self.a_count || b >= self.b_count {
            return Err(Error::InvalidInstance(format!(
                "edge ({a}, {b}) outside {} x {}",
                self.a_count, self.b_count
            )));
        }
        if utilities.len() != self.r() {
            return Err(Error::InvalidInstance(format!(
                "edge ({a}, {b}) has {} utilities, expected {}",
                utilities.len(),
                self.r()
            )));
        }
        for (i, (&u, &bound)) in utilities.iter().zip(&self.bounds).enumerate() {
            if u > bound {
                return Err(Error::InvalidInstance(format!(
                    "edge ({a}, {b}): utility {} is {u}, above its bound {bound}",
                    i + 1
                )));
            }
        }
        if self.edge_index(a, b).is_some() {
            return Err(Error::InvalidInstance(format!("duplicate edge ({a}, {b})")));
        }
        let idx = self.pairs.len();
        let map = match &mut self.index {
            EdgeIndex::Sparse(map) => map,
            EdgeIndex::Dense => {
                // a dense instance already holds every pair
                unreachable!("dense instances are complete")
            }
        };
        map.insert((a, b), idx);
        self.pairs.push((a, b));
        self.utilities.extend_from_slice(utilities);
        Ok(idx)
    }

    pub fn a_count(&self) -> usize {
        self.a_count
    }

    pub fn b_count(&self) -> usize {
        self.b_count
    }

    /// Number of utility functions.
    pub fn r(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[u64] {
        &self.bounds
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, edge: usize) -> Pair {
        self.pairs[edge]
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn utilities(&self, edge: usize) -> &[u64] {
        let r = self.r();
        &self.utilities[edge * r..(edge + 1) * r]
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        match &self.index {
            EdgeIndex::Dense => {
                (a < self.a_count && b < self.b_count).then(|| a * self.b_count + b)
            }
            EdgeIndex::Sparse(map) => map.get(&(a, b)).copied(),
        }
    }

    pub fn utilities_of(&self, a: usize, b: usize) -> Option<&[u64]> {
        self.edge_index(a, b).map(|e| self.utilities(e))
    }

    /// Iterates `(pair, utilities)` in edge order.
    pub fn edges(&self) -> impl Iterator<Item = (Pair, &[u64])> + '_ {
        self.pairs
            .iter()
            .zip(self.utilities.chunks_exact(self.r()))
            .map(|(&p, u)| (p, u))
    }

    pub fn is_complete(&self) -> bool {
        self.pairs.len() == self.a_count * self.b_count
    }
}
