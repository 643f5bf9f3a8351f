//! Exact symbolic computation for loops of invertible series and formal
//! diffeomorphisms with non-commutative coefficients.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebras`]: exact coefficient algebras (rationals, matrices, the
//!   Cayley–Dickson tower, hyperbolic quaternion units) and identity checks.
//! * [`freealg`]: the free graded algebra on labeled generators `x_n, y_n, z_n`,
//!   folds, projections and evaluation.
//! * [`combinatorics`]: compositions, M-sequences, Lagrange coefficients and
//!   the tree bijection.
//! * [`operators`]: the graded product `▷` on the tensor algebra and the
//!   recursive operators `L`, `R`, `R^e`.
//! * [`coloops`]: co-operation tables and the coloop axiom battery.
//! * [`seriesloops`]: truncated series loops `Inv(A)` and `Diff(A)`.
//!
//! All arithmetic is exact. The coefficient algebras implement the [`Ring`]
//! trait, which is generic over the scalar carried by the algebra.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub mod algebras;
pub mod coloops;
pub mod combinatorics;
pub mod freealg;
pub mod operators;
pub mod seriesloops;

mod error;

/// Library version, reported by the command-line front end.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub use error::{Error, Result};

/// Arbitrary precision integers.
pub type Z = BigInt;
/// Arbitrary precision rationals, always reduced with positive denominator.
pub type Q = BigRational;

/// Octonions over the rationals (Cayley–Dickson level 3).
pub type Octonion = algebras::CdElement;
/// Sedenions over the rationals (Cayley–Dickson level 4).
pub type Sedenion = algebras::CdElement;
/// Square matrices with rational entries.
pub type MatQ = algebras::Matrix<Q>;
/// Square matrices with Cayley–Dickson entries.
pub type MatCd = algebras::Matrix<algebras::CdElement>;

/// A unital ring, not necessarily associative or commutative.
///
/// Elements may carry a runtime shape (matrix size, Cayley–Dickson level), so
/// the neutral elements are produced from an existing element of the same
/// shape instead of from a bare type.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    /// Multiplication by a central integer scalar.
    fn scale(&self, k: &Z) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
}

/// A ring with an involutive anti-automorphism `x ↦ x*`.
pub trait Involutive: Ring {
    fn conj(&self) -> Self;
}

/// Every commutative `num_traits` number type is a ring with trivial
/// involution. This covers `BigInt` and `BigRational`, and also admits the
/// primitive floats, although nothing in this crate relies on them.
impl<T> Ring for T
where
    T: num_traits::Num + Clone + fmt::Debug,
{
    fn zero_like(&self) -> Self {
        T::zero()
    }
    fn one_like(&self) -> Self {
        T::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn negate(&self) -> Self {
        T::zero() - self.clone()
    }
    fn times(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
    fn scale(&self, k: &Z) -> Self {
        self.clone() * int_as::<T>(k)
    }
}

impl<T> Involutive for T
where
    T: num_traits::Num + Clone + fmt::Debug,
{
    fn conj(&self) -> Self {
        self.clone()
    }
}

/// Image of an integer in a unital number type, by binary expansion.
fn int_as<T: num_traits::Num + Clone>(k: &Z) -> T {
    use num_traits::Signed;
    let mut acc = T::zero();
    let mut pow = T::one();
    let mut m = k.abs();
    let two = Z::from(2u8);
    while !Zero::is_zero(&m) {
        if &m % &two == Z::one() {
            acc = acc + pow.clone();
        }
        pow = pow.clone() + pow;
        m /= &two;
    }
    if k.is_negative() {
        T::zero() - acc
    } else {
        acc
    }
}

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

/// Shorthand for `n / d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(Z::from(n), Z::from(d))
}
