use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::combinatorics::binom;
use crate::freealg::{NcPoly, Word};
use crate::{Error, Result, Z};

/// An element of `T(A) = F ⊕ A ⊕ A^{⊗2} ⊕ ⋯`, with `A` the positive part of
/// the free algebra. Keys are tuples of words; the empty tuple is the scalar
/// component.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedTensorPoly {
    terms: BTreeMap<Vec<Word>, Z>,
}

impl GradedTensorPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The scalar `1 ∈ F = A^{⊗0}`.
    pub fn one() -> Self {
        Self::monomial(Vec::new(), Z::one())
    }

    pub fn monomial(factors: Vec<Word>, c: Z) -> Self {
        let mut t = Self::zero();
        t.add_term(factors, c);
        t
    }

    /// A length-one element from a homogeneous polynomial of positive degree.
    pub fn from_poly(p: &NcPoly) -> Result<Self> {
        if p.is_zero() {
            return Ok(Self::zero());
        }
        match p.homogeneous_degree() {
            Some(d) if d > 0 => {}
            _ => return Err(Error::Invalid(format!("{p} is not homogeneous of positive degree"))),
        }
        let mut t = Self::zero();
        for (w, c) in p.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        Ok(t)
    }

    /// `a_1 ⊗ ⋯ ⊗ a_k`, expanded multilinearly.
    pub fn tensor_of(ps: &[NcPoly]) -> Result<Self> {
        let mut acc = Self::one();
        for p in ps {
            acc = acc.tensor(&Self::from_poly(p)?);
        }
        Ok(acc)
    }

    pub fn add_term(&mut self, factors: Vec<Word>, c: Z) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Z)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Z) -> Self {
        let mut out = Self::zero();
        for (f, c) in &self.terms {
            out.add_term(f.clone(), c * k);
        }
        out
    }

    /// Part of tensor length `l`.
    pub fn length_part(&self, l: usize) -> Self {
        GradedTensorPoly {
            terms: self.terms.iter().filter(|(f, _)| f.len() == l).map(|(f, c)| (f.clone(), c.clone())).collect(),
        }
    }

    pub fn scalar_part(&self) -> Z {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(Z::zero)
    }

    /// The length-one part as a polynomial.
    pub fn to_poly(&self) -> NcPoly {
        let mut p = NcPoly::zero();
        for (f, c) in &self.terms {
            if f.len() == 1 {
                p.add_term(f[0].clone(), c.clone());
            }
        }
        p
    }

    /// Concatenation product `⊗`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut f = a.clone();
                f.extend(b.iter().cloned());
                out.add_term(f, ca * cb);
            }
        }
        out
    }

    /// The graded operation `▷`, extended bilinearly.
    pub fn triangle(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((f, k)) = triangle_monomial(a, b) {
                    out.add_term(f, k * ca * cb);
                }
            }
        }
        out
    }
}

/// `▷` on multi-monomials; `None` when the result vanishes.
pub fn triangle_monomial(a: &[Word], b: &[Word]) -> Option<(Vec<Word>, Z)> {
    match (a.len(), b.len()) {
        (0, 0) => Some((Vec::new(), Z::one())),
        (0, 1) => Some((b.to_vec(), Z::one())),
        (0, _) => None,
        (la, lb) => {
            let k = binom(a[0].degree() + 1, (la + lb - 1) as u32);
            if k.is_zero() {
                return None;
            }
            let mut w = Word::unit();
            for x in a.iter().chain(b) {
                w = w.concat(x);
            }
            Some((vec![w], k))
        }
    }
}

impl fmt::Display for GradedTensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (ws, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if ws.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let parts: Vec<String> = ws.iter().map(Word::to_string).collect();
            write!(f, "{}", parts.join(" | "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for GradedTensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&GradedTensorPoly> for GradedTensorPoly {
    fn add_assign(&mut self, rhs: &GradedTensorPoly) {
        for (f, c) in &rhs.terms {
            self.add_term(f.clone(), c.clone());
        }
    }
}

impl SubAssign<&GradedTensorPoly> for GradedTensorPoly {
    fn sub_assign(&mut self, rhs: &GradedTensorPoly) {
        for (f, c) in &rhs.terms {
            self.add_term(f.clone(), -c);
        }
    }
}

impl Add<&GradedTensorPoly> for &GradedTensorPoly {
    type Output = GradedTensorPoly;
    fn add(self, rhs: &GradedTensorPoly) -> GradedTensorPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&GradedTensorPoly> for &GradedTensorPoly {
    type Output = GradedTensorPoly;
    fn sub(self, rhs: &GradedTensorPoly) -> GradedTensorPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &GradedTensorPoly {
    type Output = GradedTensorPoly;
    fn neg(self) -> GradedTensorPoly {
        self.scale(&-Z::one())
    }
}
