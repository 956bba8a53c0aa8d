//! Profile-optimal matching by reduction: complete the graph, balance it,
//! weigh every pair, solve the assignment problem, drop the padding.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{complete, profile_of, restrict, Instance, Matching, Profile};
use crate::solver::{solve, AssignmentProblem};
use crate::weights::{
    mixed_radix, satisfies_condition, satisfies_condition_sampled, Weight, WeightAssignment,
};

/// How the weight condition was established for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verification {
    /// Mixed-radix weights; the condition holds by construction.
    MixedRadix,
    /// Exhaustive check passed.
    Checked,
    /// A sampled check passed; not a proof.
    Sampled,
    /// The caller opted out of checking.
    Unchecked,
}

/// Condition check applied to caller-supplied weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConditionCheck {
    #[default]
    Exhaustive,
    Sampled {
        samples: usize,
        seed: u64,
    },
    Unchecked,
}

#[derive(Debug, Clone, Serialize)]
pub struct Reduction {
    pub matching: Matching,
    pub profile: Profile,
    /// Total weight of the solver's perfect matching on the balanced
    /// completion (padding pairs included).
    pub max_weight: Weight,
    pub verification: Verification,
}

/// Profile-optimal matching of `inst` using mixed-radix weights.
pub fn optimal_matching(inst: &Instance) -> Result<Reduction> {
    let balanced = complete(inst).balanced();
    let weights = mixed_radix(&balanced);
    finish(inst, &balanced, &weights, Verification::MixedRadix)
}

/// Like [`optimal_matching`] with caller-supplied weights over
/// `complete(inst)`. Fails with [`Error::ConditionViolated`] when the check
/// finds a violating triple.
pub fn optimal_matching_with(
    inst: &Instance,
    w: &WeightAssignment,
    check: ConditionCheck,
) -> Result<Reduction> {
    let completed = complete(inst);
    w.check_shape(&completed)?;
    let balanced = completed.balanced();
    let w = w.extended_to(&balanced)?;
    let verification = match check {
        ConditionCheck::Exhaustive => {
            if let Some(cx) = satisfies_condition(&balanced, &w) {
                return Err(Error::ConditionViolated(cx));
            }
            Verification::Checked
        }
        ConditionCheck::Sampled { samples, seed } => {
            if let Some(cx) =
                satisfies_condition_sampled(&balanced, &w, samples, seed).counterexample
            {
                return Err(Error::ConditionViolated(cx));
            }
            Verification::Sampled
        }
        ConditionCheck::Unchecked => Verification::Unchecked,
    };
    finish(inst, &balanced, &w, verification)
}

fn finish(
    inst: &Instance,
    balanced: &crate::model::CompletedInstance,
    w: &WeightAssignment,
    verification: Verification,
) -> Result<Reduction> {
    let problem = AssignmentProblem::from_assignment(w)?;
    let solution = solve(&problem);
    let matching = restrict(&solution.matching, balanced);
    let profile = profile_of(&matching, inst)?;
    Ok(Reduction {
        matching,
        profile,
        max_weight: solution.total,
        verification,
    })
}
