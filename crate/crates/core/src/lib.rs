//! Finite polynomial functors as an isomix linearly distributive category.
//!
//! Objects are [`Polynomial`]s and maps are [`PolyMap`]s. Coherence laws are
//! decided by pointwise comparison of composites built in [`polycore::Mor`].

pub mod algebra;
pub mod cli;
pub mod closure;
pub mod cores;
pub mod duality;
pub mod error;
pub mod law;
pub mod monoidal;
pub mod polycore;
pub mod suites;

pub use error::{PolyError, Result};
pub use polycore::{FiniteSet, PolyMap, Polynomial};
