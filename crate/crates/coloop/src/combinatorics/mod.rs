//! Compositions, M-sequences, bit sequences, Lagrange coefficients and the
//! bijection from M-sequences to planar binary trees.

mod lagrange;
mod sets;
mod trees;

pub use lagrange::{
    binom, d_alt_sign, d_product, d_recurrence_check, d_shift, lagrange_d, lagrange_d_labeled, DRecurrence,
};
pub use sets::{
    bit_sequences, catalan, compositions, e_sign, is_m_sequence, m_sequences, m_sequences_labeled,
    all_compositions,
};
pub use trees::{all_trees, tree_of_msequence, PlanarBinaryTree};
