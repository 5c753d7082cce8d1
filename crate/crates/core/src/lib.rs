//! Finite unital rings as explicit tables.
//!
//! Rings are built from construction expressions (`Z(n)`, products, matrix
//! and upper-triangular rings, quotients, group rings), analysed into their
//! structural sets (units, idempotents, tripotents, nilpotents, the Jacobson
//! radical and Δ), classified into ring classes with per-element
//! decomposition certificates, and checked against a registry of structural
//! theorems by exhaustive enumeration.

pub mod classify;
pub mod construct;
pub mod error;
pub mod expr;
pub mod group;
pub mod group_ring;
pub mod ring;
pub mod set;
pub mod sets;
pub mod theorems;

pub use error::{Result, RingError};
pub use expr::{GroupExpr, RingExpr};
pub use group::GroupTable;
pub use group_ring::GroupRing;
pub use ring::{verify_ring_axioms, RingTable, DEFAULT_SIZE_CAP};
pub use set::ElementSet;
pub use sets::{Analysis, StructuralSets};
