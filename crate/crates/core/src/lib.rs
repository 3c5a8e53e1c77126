//! Subgroup lattices and commutativity degrees of finite groups, computed
//! exactly.
//!
//! The main entry points:
//!
//! * [`make_named`], [`from_permutations`], [`FiniteGroup::from_table`] build groups;
//! * [`enumerate_subgroups`] produces the [`SubgroupLattice`] with its normal,
//!   subnormal, maximal and Sylow sublattices and the permutability operator;
//! * [`degree`] computes `sd`, `spd` and `d` as [`ExactRatio`]s;
//! * [`bounds`] and [`moebius`] check lower bounds and Möbius numbers.
//!
//! ```
//! use subgroup_degree::{enumerate_subgroups, make_named, degree, ExactRatio};
//!
//! let s3 = make_named("S3", 720).unwrap();
//! let lattice = enumerate_subgroups(s3, 20_000).unwrap();
//! assert_eq!(degree::sd(&lattice), ExactRatio::new(5, 6));
//! ```

pub mod app;
pub mod bitset;
pub mod bounds;
pub mod cache;
pub mod catalog;
pub mod degree;
mod error;
pub mod group;
pub mod ingest;
pub mod lattice;
pub mod moebius;
pub mod named;
pub mod primes;
pub mod verify;

pub use bitset::{BitSet, ElementSet};
pub use degree::ExactRatio;
pub use error::{Error, Result};
pub use group::{direct_product, from_permutations, FiniteGroup, DEFAULT_MAX_ORDER};
pub use lattice::{enumerate_subgroups, MaxConvention, SubgroupLattice, SublatticeSelection, DEFAULT_MAX_NODES};
pub use named::make_named;
