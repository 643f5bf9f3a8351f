use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CoOpTable, Flavor, Kind};
use crate::freealg::{fold, id_mu, mu, mu_id, Letter, MultiMorphism, NcPoly, Word};
use crate::{Error, Result};

/// An algebra map `H → H^{⊔k}` given on the generators `x_1..x_n`.
#[derive(Clone, Debug)]
pub struct Morph {
    pub map: MultiMorphism,
    pub copies: u8,
}

impl Morph {
    fn from_fn(n: u32, copies: u8, f: impl Fn(u32) -> NcPoly) -> Morph {
        let mut map = MultiMorphism::new();
        for k in 1..=n {
            map.insert(Letter::x(k), f(k));
        }
        Morph { map, copies }
    }

    pub fn identity(n: u32) -> Morph {
        Morph::from_fn(n, 1, NcPoly::x)
    }

    /// `i_1` or `i_2`: `x_n` into the given copy of `H ⊔ H`.
    pub fn inclusion(n: u32, copy: u8) -> Morph {
        Morph::from_fn(n, 2, |k| NcPoly::letter(Letter::new(copy, k)))
    }

    /// The constant map `u ε`, zero on every generator.
    pub fn unit_counit(n: u32, copies: u8) -> Morph {
        Morph::from_fn(n, copies, |_| NcPoly::zero())
    }

    pub fn coop(table: &CoOpTable, kind: Kind, n: u32) -> Morph {
        Morph::from_fn(n, kind.copies(), |k| table.image(kind, k))
    }

    /// `f ⊔ g : H ⊔ H → H^{⊔(k_f + k_g)}`, with the copies of `g` placed
    /// after those of `f`.
    pub fn coprod(f: &Morph, g: &Morph) -> Morph {
        let mut map = MultiMorphism::new();
        for l in f.map.generators() {
            map.insert(*l, f.map.image(l).expect("listed generator").clone());
            let shifted = fold(g.map.image(l).expect("same generators on both sides"), |c| c + f.copies);
            map.insert(Letter::new(2, l.index), shifted);
        }
        Morph { map, copies: f.copies + g.copies }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morph) -> Result<Morph> {
        Ok(Morph { map: next.map.after(&self.map)?, copies: next.copies })
    }

    /// Post-compose with a relabeling of copies onto `copies` copies.
    pub fn folded(&self, f: impl Fn(u8) -> u8, copies: u8) -> Morph {
        let mut map = MultiMorphism::new();
        for l in self.map.generators() {
            map.insert(*l, fold(self.map.image(l).expect("listed generator"), &f));
        }
        Morph { map, copies }
    }

    pub fn on(&self, p: &NcPoly) -> Result<NcPoly> {
        self.map.apply(p)
    }
}

/// The coloop axioms and the coinverse properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Counit,
    RightCocancel1,
    RightCocancel2,
    LeftCocancel1,
    LeftCocancel2,
    PartialCounit,
    FiveTermsLeft,
    FiveTermsRight,
    MuDelta,
    CoinverseRight,
    CoinverseLeft,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::Counit,
        Axiom::RightCocancel1,
        Axiom::RightCocancel2,
        Axiom::LeftCocancel1,
        Axiom::LeftCocancel2,
        Axiom::PartialCounit,
        Axiom::FiveTermsLeft,
        Axiom::FiveTermsRight,
        Axiom::MuDelta,
        Axiom::CoinverseRight,
        Axiom::CoinverseLeft,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Counit => "counit",
            Axiom::RightCocancel1 => "right-cocancel-1",
            Axiom::RightCocancel2 => "right-cocancel-2",
            Axiom::LeftCocancel1 => "left-cocancel-1",
            Axiom::LeftCocancel2 => "left-cocancel-2",
            Axiom::PartialCounit => "partial-counit",
            Axiom::FiveTermsLeft => "five-terms-left",
            Axiom::FiveTermsRight => "five-terms-right",
            Axiom::MuDelta => "mu-delta",
            Axiom::CoinverseRight => "coinverse-right",
            Axiom::CoinverseLeft => "coinverse-left",
        }
    }

    /// Pairs `(lhs, rhs)` of maps that the axiom equates. Axioms stated as
    /// two equations (counit, partial counit, `μδ = uε`) give two pairs.
    pub fn sides(self, table: &CoOpTable, n: u32) -> Result<Vec<(Morph, Morph)>> {
        let op = |k| Morph::coop(table, k, n);
        let id = Morph::identity(n);
        let eps = op(Kind::Epsilon);
        let (delta, dr, dl) = (op(Kind::Delta), op(Kind::DeltaR), op(Kind::DeltaL));
        let i1 = Morph::inclusion(n, 1);
        let i2 = Morph::inclusion(n, 2);
        Ok(match self {
            // (ε ⊔ id)Δ = φ_2, (id ⊔ ε)Δ = φ_1
            Axiom::Counit => vec![
                (delta.then(&Morph::coprod(&eps, &id))?, id.clone()),
                (delta.then(&Morph::coprod(&id, &eps))?, id),
            ],
            // (id ⊔ μ)(δ_r ⊔ id)Δ = i_1
            Axiom::RightCocancel1 => vec![(delta.then(&Morph::coprod(&dr, &id))?.folded(id_mu, 2), i1)],
            // (id ⊔ μ)(Δ ⊔ id)δ_r = i_1
            Axiom::RightCocancel2 => vec![(dr.then(&Morph::coprod(&delta, &id))?.folded(id_mu, 2), i1)],
            // (μ ⊔ id)(id ⊔ δ_l)Δ = i_2
            Axiom::LeftCocancel1 => vec![(delta.then(&Morph::coprod(&id, &dl))?.folded(mu_id, 2), i2)],
            // (μ ⊔ id)(id ⊔ Δ)δ_l = i_2
            Axiom::LeftCocancel2 => vec![(dl.then(&Morph::coprod(&id, &delta))?.folded(mu_id, 2), i2)],
            // (id ⊔ ε)δ_r = φ_1, (ε ⊔ id)δ_l = φ_2
            Axiom::PartialCounit => vec![
                (dr.then(&Morph::coprod(&id, &eps))?, id.clone()),
                (dl.then(&Morph::coprod(&eps, &id))?, id),
            ],
            // μ(S_r ⊔ id)Δ = uε
            Axiom::FiveTermsLeft => vec![(
                delta.then(&Morph::coprod(&op(Kind::AntipodeR), &id))?.folded(mu, 1),
                Morph::unit_counit(n, 1),
            )],
            // μ(id ⊔ S_l)Δ = uε
            Axiom::FiveTermsRight => vec![(
                delta.then(&Morph::coprod(&id, &op(Kind::AntipodeL)))?.folded(mu, 1),
                Morph::unit_counit(n, 1),
            )],
            Axiom::MuDelta => vec![
                (dr.folded(mu, 1), Morph::unit_counit(n, 1)),
                (dl.folded(mu, 1), Morph::unit_counit(n, 1)),
            ],
            // δ_r = (id ⊔ S_r)Δ
            Axiom::CoinverseRight => vec![(dr, delta.then(&Morph::coprod(&id, &op(Kind::AntipodeR)))?)],
            // δ_l = (S_l ⊔ id)Δ
            Axiom::CoinverseLeft => vec![(dl, delta.then(&Morph::coprod(&op(Kind::AntipodeL), &id))?)],
        })
    }

    /// Check on `x_n`; `None` when it holds, otherwise `lhs − rhs` for the
    /// first failing equation.
    pub fn check(self, table: &CoOpTable, n: u32) -> Result<Option<NcPoly>> {
        self.check_on(table, n, &NcPoly::x(n))
    }

    /// Check on an arbitrary element of degree at most `n`.
    pub fn check_on(self, table: &CoOpTable, n: u32, p: &NcPoly) -> Result<Option<NcPoly>> {
        for (lhs, rhs) in self.sides(table, n)? {
            let diff = &lhs.on(p)? - &rhs.on(p)?;
            if !diff.is_zero() {
                return Ok(Some(diff));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown axiom {s:?}")))
    }
}

/// `axiom_check` on the generator `x_n`: `(holds, discrepancy)`.
pub fn axiom_check(flavor: Flavor, axiom: Axiom, n: u32) -> Result<(bool, Option<NcPoly>)> {
    if n == 0 {
        return Err(Error::Invalid("axioms are checked on x_n with n >= 1".into()));
    }
    let d = axiom.check(CoOpTable::shared(flavor), n)?;
    Ok((d.is_none(), d))
}

/// Random words of degree `1..=max_degree` with at least two letters, drawn
/// from a seeded generator.
pub fn sample_products(seed: u64, count: usize, max_degree: u32) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let deg = rng.gen_range(2..=max_degree.max(2));
        let mut left = deg;
        let mut letters = Vec::new();
        while left > 0 {
            let k = rng.gen_range(1..=left);
            letters.push(Letter::x(k));
            left -= k;
        }
        if letters.len() < 2 {
            continue;
        }
        letters.shuffle(&mut rng);
        out.push(Word(letters));
    }
    out
}
