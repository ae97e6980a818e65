//! Finite polynomials, their maps, hom-set enumeration and the structured
//! object engine used to evaluate composites.

pub mod arrow;
pub mod cap;
pub mod hom;
pub mod map;
pub mod obj;
pub mod poly;

pub use arrow::{CompareStats, Counterexample, Mor};
pub use cap::{check_cap, set_size_cap, size_cap, CAP_ENV, DEFAULT_CAP};
pub use hom::{checked_family, enumerate_homs, hom_count, polynomials_within, random_hom, HomIter};
pub use map::PolyMap;
pub use obj::{Elem, Kind, Obj};
pub use poly::{FiniteSet, Labels, Polynomial};
