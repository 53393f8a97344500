//! Pattern-avoiding Dumont permutations: recognition, pruned generation,
//! Dyck-path and board bijections, exact generating functions, and a
//! catalog of checks comparing enumeration formulas against brute force.

pub mod bijections;
pub mod dumont;
pub mod dyck;
pub mod error;
pub mod harness;
pub mod objects;
pub mod perm;
pub mod series;

pub use dumont::{DumontKind, GenocchiTable};
pub use dyck::{DyckPath, Step, Tunnel};
pub use error::{Error, Result};
pub use objects::NoncrossingPartition;
pub use perm::{perm, Cycle, Permutation, StatRecord, Statistic, Symmetry};
