use std::fmt;

use crate::{Involutive, Ring, Z};

/// One Cayley–Dickson doubling `A ⊕ A j` of an involutive algebra, with
/// `(p + q j)(r + s j) = (p r − s* q) + (s p + q r*) j` and
/// `(p + q j)* = p* − q j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Doubled<A> {
    pub p: A,
    pub q: A,
}

impl<A: Involutive> Doubled<A> {
    pub fn new(p: A, q: A) -> Self {
        Doubled { p, q }
    }

    /// Embed `a` as `a + 0 j`.
    pub fn lift(a: A) -> Self {
        let z = a.zero_like();
        Doubled { p: a, q: z }
    }

    /// The doubling unit `j`, shaped like `like`.
    pub fn j(like: &A) -> Self {
        Doubled { p: like.zero_like(), q: like.one_like() }
    }
}

impl<A: Involutive> Ring for Doubled<A> {
    fn zero_like(&self) -> Self {
        Doubled { p: self.p.zero_like(), q: self.q.zero_like() }
    }
    fn one_like(&self) -> Self {
        Doubled { p: self.p.one_like(), q: self.q.zero_like() }
    }
    fn vanishes(&self) -> bool {
        self.p.vanishes() && self.q.vanishes()
    }
    fn plus(&self, o: &Self) -> Self {
        Doubled { p: self.p.plus(&o.p), q: self.q.plus(&o.q) }
    }
    fn negate(&self) -> Self {
        Doubled { p: self.p.negate(), q: self.q.negate() }
    }
    fn times(&self, o: &Self) -> Self {
        let (p, q, r, s) = (&self.p, &self.q, &o.p, &o.q);
        Doubled {
            p: p.times(r).minus(&s.conj().times(q)),
            q: s.times(p).plus(&q.times(&r.conj())),
        }
    }
    fn scale(&self, k: &Z) -> Self {
        Doubled { p: self.p.scale(k), q: self.q.scale(k) }
    }
}

impl<A: Involutive> Involutive for Doubled<A> {
    fn conj(&self) -> Self {
        Doubled { p: self.p.conj(), q: self.q.negate() }
    }
}

impl<A: fmt::Debug> fmt::Debug for Doubled<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})j", self.p, self.q)
    }
}

impl<A: fmt::Display> fmt::Display for Doubled<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})j", self.p, self.q)
    }
}
