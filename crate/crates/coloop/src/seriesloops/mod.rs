//! Truncated series loops `Inv(A)` and `Diff(A)`, element loops of
//! involutive algebras, and the stored non-associativity witnesses.

mod elements;
pub mod random;
mod series;
mod witnesses;

pub use elements::{
    cancellation, cayley_unit, conj_inverse, element_loop_div, is_member, norm, CancellationReport, Carrier,
    ElementLoop,
};
pub use series::{
    cancellation_laws, convolution_eval, diff_compose, diff_compose_binomial, diff_inverse, divide, inv_mul,
    loop_mul, series_inverse, Mode, SeriesFlavor, TruncatedSeries,
};
pub use witnesses::{witness, witness_with_seed, Assertion, WitnessReport, UCD_SEED, WITNESSES};
