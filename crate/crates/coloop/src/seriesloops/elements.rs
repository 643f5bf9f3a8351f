use std::fmt;

use num_traits::{One, Zero};

use crate::algebras::{CdElement, Doubled, Matrix, SymplecticM2};
use crate::coloops::Side;
use crate::{Error, Involutive, Result, Ring, Q};

/// Coefficient algebras that can recognise rational scalars, so that
/// `x x*` can be inverted when it is central.
pub trait Carrier: Involutive {
    /// `Some(s)` when `self = s · 1`.
    fn as_scalar(&self) -> Option<Q>;
    fn scale_q(&self, s: &Q) -> Self;
    /// For a doubled algebra `A + A j`: whether `p p* + q q* = 1`.
    fn cd_unitary(&self) -> Option<bool> {
        None
    }
}

impl Carrier for Q {
    fn as_scalar(&self) -> Option<Q> {
        Some(self.clone())
    }
    fn scale_q(&self, s: &Q) -> Self {
        self * s
    }
}

impl Carrier for CdElement {
    fn as_scalar(&self) -> Option<Q> {
        self.is_scalar().then(|| self.re().clone())
    }
    fn scale_q(&self, s: &Q) -> Self {
        CdElement::scale_q(self, s)
    }
}

impl<A: Carrier> Carrier for Matrix<A> {
    fn as_scalar(&self) -> Option<Q> {
        let s = self.get(0, 0).as_scalar()?;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let ok = if i == j { self.get(i, j).as_scalar() == Some(s.clone()) } else { self.get(i, j).vanishes() };
                if !ok {
                    return None;
                }
            }
        }
        Some(s)
    }
    fn scale_q(&self, s: &Q) -> Self {
        self.map(|a| a.scale_q(s))
    }
}

impl<A: Carrier> Carrier for SymplecticM2<A> {
    fn as_scalar(&self) -> Option<Q> {
        self.0.as_scalar()
    }
    fn scale_q(&self, s: &Q) -> Self {
        SymplecticM2(self.0.scale_q(s))
    }
}

impl<A: Carrier> Carrier for Doubled<A> {
    fn as_scalar(&self) -> Option<Q> {
        if self.q.vanishes() {
            self.p.as_scalar()
        } else {
            None
        }
    }
    fn scale_q(&self, s: &Q) -> Self {
        Doubled::new(self.p.scale_q(s), self.q.scale_q(s))
    }
    fn cd_unitary(&self) -> Option<bool> {
        let n = self.p.times(&self.p.conj()).plus(&self.q.times(&self.q.conj()));
        Some(n.as_scalar().is_some_and(|s| s.is_one()))
    }
}

/// The element loops built from an involutive algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementLoop {
    /// Invertible elements, `x^{-1} = x* / n(x)`.
    I,
    /// Unitary elements, `x x* = 1`.
    U,
    /// Unitary elements `a + b j` of a doubling, `a a* + b b* = 1`.
    Ucd,
}

impl fmt::Display for ElementLoop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementLoop::I => "I",
            ElementLoop::U => "U",
            ElementLoop::Ucd => "UCD",
        })
    }
}

/// `n(x) = x x*` when it is a rational scalar.
pub fn norm<A: Carrier>(x: &A) -> Option<Q> {
    x.times(&x.conj()).as_scalar()
}

/// Whether `x` satisfies the defining invariant of the loop.
pub fn is_member<A: Carrier>(kind: ElementLoop, x: &A) -> bool {
    match kind {
        ElementLoop::I => norm(x).is_some_and(|n| !n.is_zero()),
        ElementLoop::U => norm(x).is_some_and(|n| n.is_one()),
        ElementLoop::Ucd => x.cd_unitary() == Some(true),
    }
}

/// `x* / n(x)`. This is a two-sided inverse with the inverse property only
/// on alternative carriers; elsewhere it is just a formula.
pub fn conj_inverse<A: Carrier>(kind: ElementLoop, x: &A) -> Result<A> {
    if !is_member(kind, x) {
        return Err(Error::Domain(format!("{x:?} is not in the loop {kind}")));
    }
    match kind {
        ElementLoop::I => {
            let n = norm(x).expect("member has scalar norm");
            Ok(x.conj().scale_q(&(Q::one() / n)))
        }
        ElementLoop::U | ElementLoop::Ucd => Ok(x.conj()),
    }
}

/// `x \ y = x^{-1} y` (`Side::Left`) or `y / x = y x^{-1}` (`Side::Right`),
/// with the conjugate inverse.
pub fn element_loop_div<A: Carrier>(kind: ElementLoop, side: Side, x: &A, y: &A) -> Result<A> {
    let inv = conj_inverse(kind, x)?;
    Ok(match side {
        Side::Left => inv.times(y),
        Side::Right => y.times(&inv),
    })
}

/// Defects of the cancellation laws `x(x\y) = y`, `(y/x)x = y` and whether
/// the quotients stay in the loop.
#[derive(Clone, Debug, PartialEq)]
pub struct CancellationReport<A> {
    pub left_quotient: A,
    pub right_quotient: A,
    pub left_cancels: bool,
    pub right_cancels: bool,
    pub quotients_in_loop: bool,
}

impl<A> CancellationReport<A> {
    pub fn holds(&self) -> bool {
        self.left_cancels && self.right_cancels && self.quotients_in_loop
    }
}

pub fn cancellation<A: Carrier>(kind: ElementLoop, x: &A, y: &A) -> Result<CancellationReport<A>> {
    let l = element_loop_div(kind, Side::Left, x, y)?;
    let r = element_loop_div(kind, Side::Right, x, y)?;
    Ok(CancellationReport {
        left_cancels: &x.times(&l) == y,
        right_cancels: &r.times(x) == y,
        quotients_in_loop: is_member(kind, &l) && is_member(kind, &r),
        left_quotient: l,
        right_quotient: r,
    })
}

/// The Cayley transform `(1 + p)(1 − p)^{-1}` of a pure imaginary `p`, a
/// rational point of the unit sphere.
pub fn cayley_unit(p: &CdElement) -> Result<CdElement> {
    if !p.re().is_zero() {
        return Err(Error::Invalid("Cayley transform needs a pure imaginary element".into()));
    }
    let one = p.one_like();
    one.plus(p).mul(&one.minus(p).inverse()?)
}
