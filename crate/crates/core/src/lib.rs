//! Finite soft sets, soft topologies and soft (bi)topological groups, with
//! exhaustive checkers that return concrete witnesses.

pub mod bitop;
pub mod bits;
pub mod error;
pub mod gallery;
pub mod group;
pub mod random;
pub mod sets;
pub mod soft_topology;
pub mod topology;

pub use bitop::{Origin, SbtgInstance, SoftBitopSpace};
pub use bits::SubsetBits;
pub use error::{Error, Result};
pub use group::{FiniteGroup, SeGroup, SoftGroup};
pub use sets::{ParameterSet, SeIndex, SeSubset, SectionLayout, SoftElement, SoftSet, Universe};
pub use soft_topology::{SoftTopology, TauStar};
pub use topology::{CarrierMap, FiniteTopology, SeparationLevel};
