//! Integer partition statistics, explicit bijections and involutions, and an
//! exact checker for identities involving sums of distinct parts in
//! residue classes (`a_{r,m}(n)`) and of parts repeated at least `m` times
//! (`s_m(n)`).
//!
//! Every identity is evaluated along two independent routes: brute-force
//! enumeration ([`statistics`]) and recurrence / power-series evaluation
//! ([`series`]). [`identity`] compares them.

pub mod certify;
pub mod error;
pub mod identity;
pub mod involutions;
pub mod partition;
pub mod series;
pub mod statistics;

pub use error::{Error, Result};
pub use identity::{IdentityId, IdentityReport, Statement, Variant};
pub use partition::{Overpartition, Partition, PartitionPair};
pub use statistics::{Counter, SignedCounter, StatisticFamily};
