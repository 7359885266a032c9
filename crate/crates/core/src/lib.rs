//! Exact enumeration of unlabeled k-valent trees by node count, split into
//! centered and bicentered classes.
//!
//! The counts come from truncated generating functions built on the cycle
//! index of the symmetric group ([`enumerator`]); an explicit tree generator
//! ([`oracle`]) checks them independently for small sizes.

pub mod cli;
pub mod cycle_index;
pub mod enumerator;
pub mod error;
pub mod oracle;
pub mod series;

pub use cycle_index::{cycle_types, substitute, CycleType};
pub use enumerator::{
    bicentered, bicentered_by_diameter, census, centered, centered_by_diameter,
    rooted_bounded_height, CensusRow, CensusTable, RootedTrees,
};
pub use error::{Error, Result};
pub use oracle::{
    classify, generate_free_trees, oracle_census, oracle_census_up_to, CanonicalTree,
    CenterClass, CenterKind, OracleCensus,
};
pub use series::Series;
