//! Commuting graphs of finite groups and their exact adjacency spectra.
//!
//! Groups are realized as explicit Cayley tables ([`group::GroupTable`]),
//! their commuting graphs are built on the non-central elements
//! ([`graph::CommutingGraph`]), and spectra are computed exactly from the
//! integer characteristic polynomial ([`spectrum`]). The [`closed_forms`]
//! module carries the known spectrum formulas for AC-groups and several
//! named families, and [`verify`] ties everything into a reproducible suite.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod bitset;
mod error;

pub mod closed_forms;
pub mod family;
pub mod field;
pub mod graph;
pub mod group;
pub mod poly;
pub mod spectrum;
pub mod verify;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use family::FamilySpec;

/// Resource caps applied throughout construction and spectral computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order `build_group` will construct.
    pub max_group_order: usize,
    /// Largest field order `FiniteField::new` accepts.
    pub max_field_order: u64,
    /// Largest vertex count accepted by the characteristic polynomial path.
    pub max_spectral_vertices: usize,
}

impl Limits {
    pub const DEFAULT_MAX_GROUP_ORDER: usize = 4096;
    pub const DEFAULT_MAX_FIELD_ORDER: u64 = 1 << 16;
    pub const DEFAULT_MAX_SPECTRAL_VERTICES: usize = 600;

    pub fn with_max_group_order(self, max_group_order: usize) -> Self {
        Limits { max_group_order, ..self }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: Self::DEFAULT_MAX_GROUP_ORDER,
            max_field_order: Self::DEFAULT_MAX_FIELD_ORDER,
            max_spectral_vertices: Self::DEFAULT_MAX_SPECTRAL_VERTICES,
        }
    }
}
