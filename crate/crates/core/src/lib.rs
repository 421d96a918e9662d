//! Distinguishing numbers, minimum degrees and primitivity of finite
//! permutation groups, with the graph constructions and exact integer
//! bounds that go with them.

pub mod bounds;
pub mod corpus;
pub mod distinguish;
pub mod error;
pub mod graph;
pub mod group;
pub mod partition;
pub mod perm;
pub mod subsets;

pub use error::{Error, Result};
pub use group::{Block, PermGroup, DEFAULT_ELEMENT_CAP};
pub use partition::Partition;
pub use perm::Permutation;
