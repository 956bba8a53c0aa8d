//! Problem data model: instances, matchings, profiles, completion to the
//! complete bipartite graph, and improving pairs.

mod completion;
mod improve;
mod instance;
mod matching;
mod profile;
pub(crate) mod text;

pub use completion::{complete, complete_balanced, restrict, CompletedInstance};
pub use improve::{improve, improving_pair};
pub use instance::{Instance, Pair};
pub use matching::Matching;
pub use profile::{cmp_profile, profile_of, Profile};
