use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Letter, Word};
use crate::algebras::split_terms;
use crate::{Error, Result, Ring, Z};

/// Non-commutative polynomial with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Z>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(Word::unit(), Z::one())
    }

    pub fn constant(c: Z) -> Self {
        Self::monomial(Word::unit(), c)
    }

    pub fn monomial(w: Word, c: Z) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn letter(l: Letter) -> Self {
        Self::monomial(Word::letter(l), Z::one())
    }

    pub fn x(n: u32) -> Self {
        Self::letter(Letter::x(n))
    }
    pub fn y(n: u32) -> Self {
        Self::letter(Letter::y(n))
    }
    pub fn z(n: u32) -> Self {
        Self::letter(Letter::z(n))
    }

    /// `x_n − y_n`
    pub fn u(n: u32) -> Self {
        Self::x(n) - Self::y(n)
    }

    /// `y_n − x_n`
    pub fn v(n: u32) -> Self {
        Self::y(n) - Self::x(n)
    }

    /// Product of letters with unit coefficient.
    pub fn word(letters: &[Letter]) -> Self {
        Self::monomial(Word(letters.to_vec()), Z::one())
    }

    pub fn add_term(&mut self, w: Word, c: Z) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Z)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Z)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Z {
        self.terms.get(w).cloned().unwrap_or_else(Z::zero)
    }

    /// Degree of every term if they all agree; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Word::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Word::degree).max()
    }

    pub fn scale(&self, k: &Z) -> Self {
        if k.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Keep only the words satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&Word) -> bool) -> Self {
        NcPoly { terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(NcPoly::one(), |acc, _| &acc * self)
    }

    /// Parse the text form. Besides `x3`, `y1`, `z2` and `s4_1`, factors may
    /// be `u_n = x_n − y_n` or `v_n = y_n − x_n` and carry a power, as in
    /// `-14*u1*y1^3`.
    pub fn parse(s: &str) -> Result<NcPoly> {
        let mut p = NcPoly::zero();
        if s.trim() == "0" {
            return Ok(p);
        }
        for (neg, term) in split_terms(s)? {
            let mut coef = Z::one();
            let mut t = NcPoly::one();
            for f in term.split('*').map(str::trim) {
                if f.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                    coef *= f.parse::<Z>().map_err(|_| Error::Parse(format!("bad coefficient {f:?}")))?;
                    continue;
                }
                let (base, k) = match f.split_once('^') {
                    Some((b, k)) => (b, k.parse::<usize>().map_err(|_| Error::Parse(format!("bad power {f:?}")))?),
                    None => (f, 1),
                };
                let factor = match base.split_at_checked(1) {
                    Some(("u", i)) => NcPoly::u(parse_index(i)?),
                    Some(("v", i)) => NcPoly::v(parse_index(i)?),
                    _ => NcPoly::letter(Letter::parse(base)?),
                };
                t = &t * &factor.pow(k);
            }
            p += &t.scale(&if neg { -coef } else { coef });
        }
        Ok(p)
    }
}

fn parse_index(i: &str) -> Result<u32> {
    match i.parse() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(Error::Parse(format!("bad index {i:?}"))),
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&NcPoly> for NcPoly {
    fn add_assign(&mut self, rhs: &NcPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&NcPoly> for NcPoly {
    fn sub_assign(&mut self, rhs: &NcPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

macro_rules! by_value {
    ($tr:ident, $f:ident) => {
        impl $tr<NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $f(self, rhs: NcPoly) -> NcPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $f(self, rhs: &NcPoly) -> NcPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<NcPoly> for &NcPoly {
            type Output = NcPoly;
            fn $f(self, rhs: NcPoly) -> NcPoly {
                self.$f(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

/// The free algebra as a coefficient ring, for symbolic series.
impl Ring for NcPoly {
    fn zero_like(&self) -> Self {
        NcPoly::zero()
    }
    fn one_like(&self) -> Self {
        NcPoly::one()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, k: &Z) -> Self {
        NcPoly::scale(self, k)
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

impl std::iter::Sum for NcPoly {
    fn sum<I: Iterator<Item = NcPoly>>(iter: I) -> NcPoly {
        iter.fold(NcPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    word: Vec<(u8, u32)>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl Serialize for NcPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| TermJson {
                    coeff: c.to_string(),
                    word: w.letters().iter().map(|l| (l.copy, l.index)).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NcPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let mut p = NcPoly::zero();
        for t in raw.terms {
            let c: Z = t.coeff.parse().map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            if t.word.iter().any(|&(c, i)| c == 0 || i == 0) {
                return Err(D::Error::custom("letters need copy >= 1 and index >= 1"));
            }
            p.add_term(Word(t.word.into_iter().map(|(c, i)| Letter { copy: c, index: i }).collect()), c);
        }
        Ok(p)
    }
}
