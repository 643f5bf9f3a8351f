//! The graded operation `▷` on the tensor algebra and the recursive
//! operators `L`, `R`, `R_m`, `R^e`.

mod identities;
mod recursive;
mod tensor;

pub use identities::{degree_tuples, r1_holds, re3_scalar_holds, triangle_associator, OperatorIdentity};
pub use recursive::{
    args_from_polys, left_closed, left_rec, left_two_term, product, right_closed, right_e_closed, right_e_rec,
    right_op_m, right_rec, symbols,
};
pub use tensor::{triangle_monomial, GradedTensorPoly};
