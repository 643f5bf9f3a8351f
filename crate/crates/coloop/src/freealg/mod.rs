//! The free graded algebra on `x_n, y_n, z_n` and its structural maps.

mod morph;
mod poly;
mod word;

pub use morph::{
    evaluate, fold, id_mu, include_iota, kill_copy, mu, mu_id, project_pi, MultiMorphism, TensorPoly,
};
pub use poly::NcPoly;
pub use word::{Letter, Word};
