//! Mechanical verification of statements about X-semiprime and X-prime
//! rings over a catalog of small rings.

pub mod catalog;
pub mod checks;
pub mod error;
pub mod facts;
pub mod lattice;
pub mod report;
pub mod suite;

pub use catalog::{Catalog, DEFAULT_CATALOG};
pub use checks::{lookup, registry, CheckDef, Scope};
pub use error::{HarnessError, Result};
pub use facts::{LieFamily, NamedSet, RingFacts};
pub use lattice::{enumerate_additive_subgroups, SubgroupFilter};
pub use report::{Counts, Report};
pub use suite::{run_check, run_suite, Suite};
