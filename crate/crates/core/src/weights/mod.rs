//! Edge weights: the mixed-radix construction, the weight-condition checker
//! and the preset weight and utility families.

mod assignment;
mod condition;
mod presets;
mod radix;
mod weight;

pub use assignment::{WeightAssignment, WeightTable};
pub(crate) use condition::{balanced_view, violates};
pub use condition::{
    satisfies_condition, satisfies_condition_sampled, Counterexample, SampledCheck,
};
pub use presets::{
    fair_utilities, grp_weights, mcrm_weights, rm_weights, validate_uniform_bound, MutualRank,
    RankSystem,
};
pub use radix::{mixed_radix, mixed_radix_digits, mixed_radix_value, place_values, radix_bound};
pub use weight::Weight;
