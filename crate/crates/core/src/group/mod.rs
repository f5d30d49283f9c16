//! Finite groups as explicit Cayley tables: construction, centers,
//! centralizers and the AC property.

mod build;
mod table;

pub use build::{build_group, build_group_with, expected_order};
pub use table::{direct_product, quotient_by_central, CentralizerFamily, ElementSet, GroupTable};

pub(crate) use build::prime_power_parts;
