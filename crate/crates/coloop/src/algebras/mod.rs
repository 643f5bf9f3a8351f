//! Exact coefficient algebras with involution and identity checks.

mod cd;
mod doubled;
mod hq;
mod identities;
mod matrix;

pub use cd::{parse_cd, CdElement, MAX_LEVEL};
pub(crate) use cd::split_terms;
pub use doubled::Doubled;
pub use hq::{hq_loop_axioms, HqBasis, HqLoopReport, HqUnit};
pub use identities::{associator, Identity};
pub use matrix::{Matrix, SymplecticM2};
