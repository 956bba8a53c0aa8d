//! Profile-optimal bipartite matching.
//!
//! An instance carries `r` prioritised utility functions per edge; a
//! matching is optimal when its vector of utility sums (its profile) is
//! lexicographically largest. The crate reduces the problem to
//! maximum-weight matching with mixed-radix weights, checks user-supplied
//! weight functions against the sufficient condition for that reduction,
//! recognises weighted instances that are rank-maximal in disguise, and
//! runs a school-choice lottery experiment on top of all of it.
//!
//! ```
//! use profmatch::{optimal_matching, Instance};
//!
//! let inst: Instance = "2 2 2\n1 2\n0 0 1 0\n0 1 0 2\n1 1 1 0\n".parse().unwrap();
//! let result = optimal_matching(&inst).unwrap();
//! assert_eq!(result.profile.values(), &[2, 0]);
//! ```

mod arith;
pub mod error;
pub mod lottery;
pub mod model;
pub mod oracle;
pub mod reduce;
pub mod rmcheck;
pub mod solver;
pub mod weights;

pub use error::{Error, Result};
pub use model::{
    cmp_profile, complete, complete_balanced, improve, improving_pair, profile_of, restrict,
    CompletedInstance, Instance, Matching, Pair, Profile,
};
pub use reduce::{
    optimal_matching, optimal_matching_with, ConditionCheck, Reduction, Verification,
};
pub use solver::{
    matching_weight, max_weight_matching, solve, AssignmentProblem, Potentials, Solution,
};
pub use weights::{
    mixed_radix, satisfies_condition, Counterexample, RankSystem, Weight, WeightAssignment,
    WeightTable,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Integer backend behind [`Weight`] and the solver.
pub const ARITHMETIC_BACKEND: &str = "exact integers (num-bigint; i64/i128 fast paths)";
