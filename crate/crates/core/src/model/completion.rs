use crate::model::{Instance, Matching};

/// An instance over the complete bipartite vertex set, with the pairs that
/// were not edges of the source instance marked as padding.
///
/// Padding pairs carry all-zero utilities. A balanced completion also adds
/// dummy vertices to the smaller side; every pair touching a dummy vertex is
/// padding.
#[derive(Debug, Clone)]
pub struct CompletedInstance {
    instance: Instance,
    original_a: usize,
    original_b: usize,
    padding: Vec<bool>,
}

impl CompletedInstance {
    /// The complete instance. Edge `(a, b)` has index `a * b_count + b`.
    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn original_a_count(&self) -> usize {
        self.original_a
    }

    pub fn original_b_count(&self) -> usize {
        self.original_b
    }

    pub fn is_padding(&self, a: usize, b: usize) -> bool {
        self.instance
            .edge_index(a, b)
            .is_none_or(|e| self.padding[e])
    }

    pub fn padding_count(&self) -> usize {
        self.padding.iter().filter(|&&p| p).count()
    }

    pub fn is_balanced(&self) -> bool {
        self.instance.a_count() == self.instance.b_count()
    }

    /// Pads the smaller side with dummy vertices so both sides have
    /// `max(a_count, b_count)` vertices.
    pub fn balanced(&self) -> CompletedInstance {
        let (a_count, b_count) = (self.instance.a_count(), self.instance.b_count());
        let n = a_count.max(b_count);
        if n == a_count && n == b_count {
            return self.clone();
        }
        let r = self.instance.r();
        let mut utilities = vec![0; n * n * r];
        let mut padding = vec![true; n * n];
        for a in 0..a_count {
            for b in 0..b_count {
                let src = a * b_count + b;
                let dst = a * n + b;
                utilities[dst * r..(dst + 1) * r].copy_from_slice(self.instance.utilities(src));
                padding[dst] = self.padding[src];
            }
        }
        CompletedInstance {
            instance: Instance::dense(n, n, self.instance.bounds().to_vec(), utilities),
            original_a: self.original_a,
            original_b: self.original_b,
            padding,
        }
    }
}

/// Extends `inst` to `A x B`, giving every missing pair zero utilities.
pub fn complete(inst: &Instance) -> CompletedInstance {
    let (a_count, b_count, r) = (inst.a_count(), inst.b_count(), inst.r());
    let mut utilities = vec![0; a_count * b_count * r];
    let mut padding = vec![true; a_count * b_count];
    for ((a, b), u) in inst.edges() {
        let dst = a * b_count + b;
        utilities[dst * r..(dst + 1) * r].copy_from_slice(u);
        padding[dst] = false;
    }
    CompletedInstance {
        instance: Instance::dense(a_count, b_count, inst.bounds().to_vec(), utilities),
        original_a: a_count,
        original_b: b_count,
        padding,
    }
}

/// `complete` followed by balancing.
pub fn complete_balanced(inst: &Instance) -> CompletedInstance {
    complete(inst).balanced()
}

/// Drops the padding pairs of a matching of the completed instance.
pub fn restrict(m: &Matching, completed: &CompletedInstance) -> Matching {
    m.filtered(|(a, b)| !completed.is_padding(a, b))
}
