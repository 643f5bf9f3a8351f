use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Letter, NcPoly, Word};
use crate::{Error, Result, Ring, Z};

/// An algebra morphism of free algebras, given by the images of generators.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiMorphism {
    images: BTreeMap<Letter, NcPoly>,
}

impl MultiMorphism {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, l: Letter, image: NcPoly) {
        self.images.insert(l, image);
    }

    pub fn with(mut self, l: Letter, image: NcPoly) -> Self {
        self.insert(l, image);
        self
    }

    pub fn image(&self, l: &Letter) -> Option<&NcPoly> {
        self.images.get(l)
    }

    pub fn generators(&self) -> impl Iterator<Item = &Letter> {
        self.images.keys()
    }

    /// Identity on the given generators.
    pub fn identity(letters: impl IntoIterator<Item = Letter>) -> Self {
        MultiMorphism { images: letters.into_iter().map(|l| (l, NcPoly::letter(l))).collect() }
    }

    /// Relabeling of copies on the given generators.
    pub fn relabeling(letters: impl IntoIterator<Item = Letter>, f: impl Fn(u8) -> u8) -> Self {
        MultiMorphism {
            images: letters.into_iter().map(|l| (l, NcPoly::letter(Letter::new(f(l.copy), l.index)))).collect(),
        }
    }

    /// Multiplicative-linear extension.
    pub fn apply(&self, p: &NcPoly) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NcPoly::constant(c.clone());
            for l in w.letters() {
                let img = self.images.get(l).ok_or_else(|| Error::Undefined(l.to_string()))?;
                acc = &acc * img;
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        Ok(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &MultiMorphism) -> Result<MultiMorphism> {
        let mut images = BTreeMap::new();
        for (l, img) in &other.images {
            images.insert(*l, self.apply(img)?);
        }
        Ok(MultiMorphism { images })
    }
}

/// Replace copy labels letterwise; an algebra morphism.
pub fn fold(p: &NcPoly, f: impl Fn(u8) -> u8) -> NcPoly {
    p.map_words(|w| w.relabel(&f))
}

/// `μ`: both copies onto copy 1.
pub fn mu(c: u8) -> u8 {
    match c {
        1 | 2 => 1,
        c => c,
    }
}

/// `id ⊔ μ`: 1 ↦ 1, 2 ↦ 2, 3 ↦ 2.
pub fn id_mu(c: u8) -> u8 {
    match c {
        3 => 2,
        c => c,
    }
}

/// `μ ⊔ id`: 1 ↦ 1, 2 ↦ 1, 3 ↦ 2.
pub fn mu_id(c: u8) -> u8 {
    match c {
        1 | 2 => 1,
        3 => 2,
        c => c,
    }
}

/// The counit on one copy: words containing a letter of that copy vanish,
/// the remaining labels are kept.
pub fn kill_copy(p: &NcPoly, copy: u8) -> NcPoly {
    p.filter(|w| !w.contains_copy(copy))
}

/// Element of `H^{⊗k}` as a map from `k`-tuples of copy-1 words.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorPoly {
    arity: usize,
    terms: BTreeMap<Vec<Word>, Z>,
}

impl TensorPoly {
    pub fn zero(arity: usize) -> Self {
        TensorPoly { arity, terms: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, factors: Vec<Word>, c: Z) -> Result<()> {
        if factors.len() != self.arity {
            return Err(Error::Shape(format!("{} factors in a {}-fold tensor", factors.len(), self.arity)));
        }
        if c.is_zero() {
            return Ok(());
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
        Ok(())
    }

    pub fn monomial(factors: Vec<Word>, c: Z) -> Self {
        let mut t = TensorPoly::zero(factors.len());
        t.add_term(factors, c).expect("arity from factors");
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Z)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Componentwise product.
    pub fn mul(&self, other: &TensorPoly) -> Result<TensorPoly> {
        if self.arity != other.arity {
            return Err(Error::Shape("tensor arities differ".into()));
        }
        let mut out = TensorPoly::zero(self.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let f = a.iter().zip(b).map(|(x, y)| x.concat(y)).collect();
                out.add_term(f, ca * cb)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (ws, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !c.abs().is_one() {
                write!(f, "{}*", c.abs())?;
            }
            let parts: Vec<String> = ws.iter().map(Word::to_string).collect();
            write!(f, "{}", parts.join(" | "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical projection onto `H^{⊗k}`: each word splits into its stable
/// per-copy subwords.
pub fn project_pi(p: &NcPoly, k: usize) -> Result<TensorPoly> {
    let mut out = TensorPoly::zero(k);
    for (w, c) in p.terms() {
        if let Some(l) = w.letters().iter().find(|l| l.copy as usize > k) {
            return Err(Error::Shape(format!("letter {l} outside {k} copies")));
        }
        let factors = (1..=k as u8).map(|i| w.subword(i)).collect();
        out.add_term(factors, c.clone())?;
    }
    Ok(out)
}

/// Canonical inclusion `a_1 ⊗ ⋯ ⊗ a_k ↦ a_1^{(1)} ⋯ a_k^{(k)}`.
pub fn include_iota(t: &TensorPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (ws, c) in t.terms() {
        let mut w = Word::unit();
        for (i, f) in ws.iter().enumerate() {
            w = w.concat(&f.relabel(|_| (i + 1) as u8));
        }
        out.add_term(w, c.clone());
    }
    out
}

/// Evaluate in an associative algebra: each word becomes the ordered product
/// of the images of its letters.
pub fn evaluate<A: Ring>(p: &NcPoly, one: &A, assign: impl Fn(Letter) -> Option<A>) -> Result<A> {
    let mut cache: HashMap<Letter, A> = HashMap::new();
    let mut acc = one.zero_like();
    for (w, c) in p.terms() {
        let mut m = one.clone();
        for l in w.letters() {
            if !cache.contains_key(l) {
                let v = assign(*l).ok_or_else(|| Error::Undefined(l.to_string()))?;
                cache.insert(*l, v);
            }
            m = m.times(&cache[l]);
        }
        acc = acc.plus(&m.scale(c));
    }
    Ok(acc)
}
