use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::{Error, Involutive, Result, Ring, Q, Z};

/// Largest doubling level we construct (sedenions).
pub const MAX_LEVEL: u32 = 4;

/// An element of the Cayley–Dickson algebra of level `k` over the rationals,
/// with coordinates on `e_0, …, e_{2^k - 1}`.
///
/// Coordinates are little-endian in the doubling: at each level the upper
/// half holds the coefficients of `e_i · j`, so `e_{2^(k-1) + i} = e_i j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CdElement {
    coords: Vec<Q>,
}

impl CdElement {
    pub fn zero(level: u32) -> Self {
        assert!(level <= MAX_LEVEL, "Cayley-Dickson level {level} too large");
        CdElement {
            coords: vec![Q::zero(); 1 << level],
        }
    }

    pub fn one(level: u32) -> Self {
        Self::scalar(level, Q::one())
    }

    pub fn scalar(level: u32, s: Q) -> Self {
        let mut x = Self::zero(level);
        x.coords[0] = s;
        x
    }

    /// The basis unit `e_i`.
    pub fn basis(level: u32, i: usize) -> Self {
        let mut x = Self::zero(level);
        x.coords[i] = Q::one();
        x
    }

    /// Build from coordinates; the length must be a power of two.
    pub fn from_coords(coords: Vec<Q>) -> Result<Self> {
        let n = coords.len();
        if n == 0 || !n.is_power_of_two() || n > (1 << MAX_LEVEL) {
            return Err(Error::Shape(format!("{n} coordinates is not a Cayley-Dickson dimension")));
        }
        Ok(CdElement { coords })
    }

    /// Sum of basis units with unit coefficients, e.g. `units(4, &[1, 10])`.
    pub fn units(level: u32, idx: &[usize]) -> Self {
        let mut x = Self::zero(level);
        for &i in idx {
            x.coords[i] += Q::one();
        }
        x
    }

    pub fn level(&self) -> u32 {
        self.coords.len().trailing_zeros()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Q {
        &self.coords[i]
    }

    /// Real part.
    pub fn re(&self) -> &Q {
        &self.coords[0]
    }

    /// Split into the pair `(a, b)` with `self = a + b j` one level down.
    pub fn halves(&self) -> (CdElement, CdElement) {
        assert!(self.level() > 0, "level 0 element cannot be split");
        let h = self.coords.len() / 2;
        (
            CdElement { coords: self.coords[..h].to_vec() },
            CdElement { coords: self.coords[h..].to_vec() },
        )
    }

    pub fn from_halves(a: &CdElement, b: &CdElement) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::Shape("halves of different levels".into()));
        }
        let mut coords = a.coords.clone();
        coords.extend(b.coords.iter().cloned());
        Self::from_coords(coords)
    }

    /// Checked product; fails when the levels differ.
    pub fn mul(&self, other: &CdElement) -> Result<CdElement> {
        if self.dim() != other.dim() {
            return Err(Error::Shape(format!(
                "Cayley-Dickson levels {} and {} differ",
                self.level(),
                other.level()
            )));
        }
        Ok(CdElement { coords: mul_rec(&self.coords, &other.coords) })
    }

    /// `n(x) = x x*`, returned as its scalar part (no square root).
    pub fn norm(&self) -> Q {
        self.times(&self.conj()).coords[0].clone()
    }

    /// Sum of squared coordinates.
    pub fn sum_sq(&self) -> Q {
        self.coords.iter().map(|c| c * c).sum()
    }

    /// True when all non-real coordinates vanish.
    pub fn is_scalar(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    /// `x* / n(x)`, the two-sided inverse for any nonzero element.
    pub fn inverse(&self) -> Result<CdElement> {
        let n = self.sum_sq();
        if n.is_zero() {
            return Err(Error::Domain("zero element has no inverse".into()));
        }
        let c = self.conj();
        Ok(CdElement { coords: c.coords.iter().map(|x| x / &n).collect() })
    }

    pub fn scale_q(&self, s: &Q) -> CdElement {
        CdElement { coords: self.coords.iter().map(|x| x * s).collect() }
    }
}

fn mul_rec(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len();
    if n == 1 {
        return vec![&a[0] * &b[0]];
    }
    let h = n / 2;
    let (p, q) = a.split_at(h);
    let (r, s) = b.split_at(h);
    // (p + q j)(r + s j) = (p r − s* q) + (s p + q r*) j
    let pr = mul_rec(p, r);
    let sq = mul_rec(&conj_rec(s), q);
    let sp = mul_rec(s, p);
    let qr = mul_rec(q, &conj_rec(r));
    let mut out = Vec::with_capacity(n);
    out.extend(pr.iter().zip(&sq).map(|(x, y)| x - y));
    out.extend(sp.iter().zip(&qr).map(|(x, y)| x + y));
    out
}

fn conj_rec(a: &[Q]) -> Vec<Q> {
    let mut out: Vec<Q> = a.iter().map(|x| -x).collect();
    out[0] = a[0].clone();
    out
}

impl Ring for CdElement {
    fn zero_like(&self) -> Self {
        CdElement { coords: vec![Q::zero(); self.dim()] }
    }
    fn one_like(&self) -> Self {
        CdElement::one(self.level())
    }
    fn vanishes(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "Cayley-Dickson level mismatch");
        CdElement { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }
    fn negate(&self) -> Self {
        CdElement { coords: self.coords.iter().map(|a| -a).collect() }
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other).expect("Cayley-Dickson level mismatch")
    }
    fn scale(&self, k: &Z) -> Self {
        self.scale_q(&Q::from_integer(k.clone()))
    }
}

impl Involutive for CdElement {
    fn conj(&self) -> Self {
        CdElement { coords: conj_rec(&self.coords) }
    }
}

impl fmt::Debug for CdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CD{}[{}]", self.level(), self)
    }
}

/// Text form: `e1 + e10`, `3 - 1/2*e5`, `0`.
impl fmt::Display for CdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{mag}*e{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Parse a sum of signed terms `c*e<i>`, `e<i>` or `c` at a given level.
pub fn parse_cd(s: &str, level: u32) -> Result<CdElement> {
    let mut x = CdElement::zero(level);
    for (sign, term) in split_terms(s)? {
        let (coef, idx) = match term.rsplit_once('*') {
            Some((c, e)) => (parse_q(c)?, parse_unit(e)?),
            None if term.starts_with('e') => (Q::one(), parse_unit(term)?),
            None => (parse_q(term)?, 0),
        };
        if idx >= x.dim() {
            return Err(Error::Parse(format!("e{idx} is beyond level {level}")));
        }
        x.coords[idx] += if sign { -coef } else { coef };
    }
    Ok(x)
}

fn parse_unit(e: &str) -> Result<usize> {
    e.trim()
        .strip_prefix('e')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad basis unit {e:?}")))
}

pub(crate) fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    Q::from_str(s).map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

/// Split `a - b + c` into `(negative, term)` pairs.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut neg = false;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        if ch != '+' && ch != '-' {
            continue;
        }
        let term = s[start..i].trim();
        if term.is_empty() {
            if ch == '-' {
                neg = !neg;
            }
        } else {
            out.push((neg, term));
            neg = ch == '-';
        }
        start = i + 1;
    }
    let term = s[start..].trim();
    if term.is_empty() {
        return Err(Error::Parse(format!("dangling sign or empty expression in {s:?}")));
    }
    out.push((neg, term));
    Ok(out)
}
