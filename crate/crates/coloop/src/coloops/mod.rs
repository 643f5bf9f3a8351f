//! Co-operation tables of the coloop bialgebras `H_inv` and `H_FdB`, the
//! axiom battery, the coassociator and the projection to `H ⊗ H`.
//!
//! Every composite is assembled from generator tables, copy relabelings and
//! folds; see [`Morph`].

mod axioms;
mod hopf;
mod tables;

pub use axioms::{axiom_check, sample_products, Axiom, Morph};
pub use hopf::{
    coassociator, coassociator_fold1, coassociator_fold2, compare_nc_hopf, expected, fdb_nc_coproduct,
    pi_iota_roundtrip, projected_coassociativity, projected_coproduct, sweep, Expectation, SweepRecord, Verdict,
};
pub use tables::{codivision_coefficient, CoOpTable, Flavor, Kind, Side};
