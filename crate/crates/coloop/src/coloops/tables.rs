use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_traits::One;

use crate::combinatorics::{binom, bit_sequences, compositions, e_sign, lagrange_d, lagrange_d_labeled};
use crate::freealg::{fold, kill_copy, Letter, NcPoly, Word};
use crate::operators::{left_rec, right_e_rec, right_rec, GradedTensorPoly as T};
use crate::{Error, Result, Z};

/// The two coloop bialgebras on `F⟨x_1, x_2, …⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Invertible series under pointwise product.
    Inv,
    /// Formal diffeomorphisms under composition (Faà di Bruno).
    FdB,
}

impl Flavor {
    pub const ALL: [Flavor; 2] = [Flavor::Inv, Flavor::FdB];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Inv => "inv",
            Flavor::FdB => "fdb",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "inv" => Ok(Flavor::Inv),
            "fdb" | "diff" => Ok(Flavor::FdB),
            _ => Err(Error::Parse(format!("unknown flavor {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Right,
    Left,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "right" | "r" => Ok(Side::Right),
            "left" | "l" => Ok(Side::Left),
            _ => Err(Error::Parse(format!("unknown side {s:?}"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

/// A co-operation of a coloop bialgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Delta,
    Epsilon,
    DeltaR,
    DeltaL,
    AntipodeR,
    AntipodeL,
}

impl Kind {
    pub const ALL: [Kind; 6] = [Kind::Delta, Kind::Epsilon, Kind::DeltaR, Kind::DeltaL, Kind::AntipodeR, Kind::AntipodeL];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Delta => "delta",
            Kind::Epsilon => "epsilon",
            Kind::DeltaR => "delta_r",
            Kind::DeltaL => "delta_l",
            Kind::AntipodeR => "s_r",
            Kind::AntipodeL => "s_l",
        }
    }

    /// Number of copies of `H` in the target.
    pub fn copies(self) -> u8 {
        match self {
            Kind::Epsilon => 0,
            Kind::AntipodeR | Kind::AntipodeL => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown co-operation {s:?}")))
    }
}

/// Images of the generators under the co-operations of one flavor, computed
/// on demand and cached per `(kind, n)`.
///
/// The cache only ever grows, and every entry is a pure function of its key,
/// so concurrent extension is harmless.
pub struct CoOpTable {
    flavor: Flavor,
    cache: RwLock<HashMap<(Kind, u32), NcPoly>>,
}

impl CoOpTable {
    pub fn new(flavor: Flavor) -> Self {
        CoOpTable { flavor, cache: RwLock::new(HashMap::new()) }
    }

    /// Process-wide table for a flavor.
    pub fn shared(flavor: Flavor) -> &'static CoOpTable {
        static INV: OnceLock<CoOpTable> = OnceLock::new();
        static FDB: OnceLock<CoOpTable> = OnceLock::new();
        match flavor {
            Flavor::Inv => INV.get_or_init(|| CoOpTable::new(Flavor::Inv)),
            Flavor::FdB => FDB.get_or_init(|| CoOpTable::new(Flavor::FdB)),
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Image of `x_n` (`n ≥ 1`) under `kind`, from the closed formulas.
    pub fn image(&self, kind: Kind, n: u32) -> NcPoly {
        assert!(n >= 1, "co-operations are tabulated on x_n with n >= 1");
        if let Some(p) = self.cache.read().expect("table lock").get(&(kind, n)) {
            return p.clone();
        }
        let p = self.compute(kind, n);
        self.cache.write().expect("table lock").entry((kind, n)).or_insert(p).clone()
    }

    fn compute(&self, kind: Kind, n: u32) -> NcPoly {
        match (self.flavor, kind) {
            (_, Kind::Epsilon) => NcPoly::zero(),
            (Flavor::Inv, Kind::Delta) => inv_delta(n),
            (Flavor::Inv, Kind::DeltaR) => inv_delta_r(n),
            (Flavor::Inv, Kind::DeltaL) => inv_delta_l(n),
            (Flavor::FdB, Kind::Delta) => fdb_delta(n),
            (Flavor::FdB, Kind::DeltaR) => fdb_delta_r(n),
            (Flavor::FdB, Kind::DeltaL) => fdb_delta_l(n),
            // S_r = ψ_2 (ε ⊔ id) δ_r and S_l = ψ_1 (id ⊔ ε) δ_l
            (_, Kind::AntipodeR) => fold(&kill_copy(&self.image(Kind::DeltaR, n), 1), |_| 1),
            (_, Kind::AntipodeL) => kill_copy(&self.image(Kind::DeltaL, n), 2),
        }
    }

    pub fn coproduct(&self, n: u32) -> NcPoly {
        self.image(Kind::Delta, n)
    }

    pub fn codivision(&self, side: Side, n: u32) -> NcPoly {
        match side {
            Side::Right => self.image(Kind::DeltaR, n),
            Side::Left => self.image(Kind::DeltaL, n),
        }
    }

    pub fn antipode(&self, side: Side, n: u32) -> NcPoly {
        match side {
            Side::Right => self.image(Kind::AntipodeR, n),
            Side::Left => self.image(Kind::AntipodeL, n),
        }
    }

    /// The counit on `x_n`: `δ_{n,0}`.
    pub fn counit(&self, n: u32) -> Z {
        if n == 0 {
            Z::one()
        } else {
            Z::from(0)
        }
    }

    /// The same co-operation computed a second, independent way:
    /// for FdB through the operators `▷`, `R_ℓ` and `R^e_ℓ`; for Inv through
    /// the cocancellation recursion. Antipodes and the counit have no second
    /// form and are returned from the table.
    pub fn alternative_form(&self, kind: Kind, n: u32) -> Result<NcPoly> {
        match (self.flavor, kind) {
            (Flavor::FdB, Kind::Delta) => fdb_delta_operator(n),
            (Flavor::FdB, Kind::DeltaR) => fdb_delta_r_operator(n),
            (Flavor::FdB, Kind::DeltaL) => fdb_delta_l_operator(n),
            (Flavor::Inv, Kind::Delta) => Ok(inv_delta(n)),
            (Flavor::Inv, Kind::DeltaR) => Ok(inv_delta_r_recursive(n)),
            (Flavor::Inv, Kind::DeltaL) => Ok(inv_delta_l_recursive(n)),
            _ => Ok(self.image(kind, n)),
        }
    }

    /// Right codivision of FdB through the operators `L_ℓ`.
    pub fn fdb_delta_r_left_operator(n: u32) -> Result<NcPoly> {
        fdb_delta_r_via_l(n)
    }
}

/// `x_0 = 1`, otherwise the letter of the given copy.
fn gen(copy: u8, n: u32) -> NcPoly {
    if n == 0 {
        NcPoly::one()
    } else {
        NcPoly::letter(Letter::new(copy, n))
    }
}

fn word_of(copies: &[u8], ns: &[u32]) -> Word {
    Word(copies.iter().zip(ns).map(|(&c, &n)| Letter::new(c, n)).collect())
}

fn sign(negative: bool) -> Z {
    if negative {
        Z::from(-1)
    } else {
        Z::one()
    }
}

/// Compositions of `n` of every length `ℓ + 1` with `1 ≤ ℓ ≤ n − 1`, with `ℓ`.
fn proper_compositions(n: u32) -> impl Iterator<Item = (usize, Vec<u32>)> {
    (1..n as usize).flat_map(move |l| compositions(n, l + 1).into_iter().map(move |c| (l, c)))
}

fn inv_delta(n: u32) -> NcPoly {
    (0..=n).map(|m| &gen(1, m) * &gen(2, n - m)).sum()
}

/// `δ_r(x_n) = u_n + Σ (−1)^ℓ Σ u_{n_1} y_{n_2} ⋯ y_{n_{ℓ+1}}`.
fn inv_delta_r(n: u32) -> NcPoly {
    let mut p = NcPoly::u(n);
    for (l, c) in proper_compositions(n) {
        let tail = NcPoly::monomial(word_of(&vec![2; l], &c[1..]), sign(l % 2 == 1));
        p += &(&NcPoly::u(c[0]) * &tail);
    }
    p
}

/// `δ_l(x_n) = v_n + Σ (−1)^ℓ Σ x_{n_1} ⋯ x_{n_ℓ} v_{n_{ℓ+1}}`.
fn inv_delta_l(n: u32) -> NcPoly {
    let mut p = NcPoly::v(n);
    for (l, c) in proper_compositions(n) {
        let head = NcPoly::monomial(word_of(&vec![1; l], &c[..l]), sign(l % 2 == 1));
        p += &(&head * &NcPoly::v(c[l]));
    }
    p
}

/// Solve `(id ⊔ μ)(δ_r ⊔ id)Δ = i_1` degree by degree:
/// `δ_r(x_n) = x_n − y_n − Σ_{0<m<n} δ_r(x_m) y_{n−m}`.
fn inv_delta_r_recursive(n: u32) -> NcPoly {
    let mut ds: Vec<NcPoly> = vec![NcPoly::zero()];
    for k in 1..=n {
        let mut p = NcPoly::u(k);
        for m in 1..k {
            p -= &(&ds[m as usize] * &NcPoly::y(k - m));
        }
        ds.push(p);
    }
    ds.pop().expect("n >= 1")
}

/// Solve `(μ ⊔ id)(id ⊔ δ_l)Δ = i_2`:
/// `δ_l(x_n) = y_n − x_n − Σ_{0<m<n} x_m δ_l(x_{n−m})`.
fn inv_delta_l_recursive(n: u32) -> NcPoly {
    let mut ds: Vec<NcPoly> = vec![NcPoly::zero()];
    for k in 1..=n {
        let mut p = NcPoly::v(k);
        for m in 1..k {
            p -= &(&NcPoly::x(m) * &ds[(k - m) as usize]);
        }
        ds.push(p);
    }
    ds.pop().expect("n >= 1")
}

fn fdb_delta(n: u32) -> NcPoly {
    let mut p = NcPoly::x(n) + NcPoly::y(n);
    for (l, c) in proper_compositions(n) {
        let mut copies = vec![2u8; l + 1];
        copies[0] = 1;
        p.add_term(word_of(&copies, &c), binom(c[0] + 1, l as u32));
    }
    p
}

/// `δ_r(x_n) = Σ_ℓ (−1)^ℓ Σ d_ℓ(n_1..n_ℓ) u_{n_1} y_{n_2} ⋯ y_{n_{ℓ+1}}`.
fn fdb_delta_r(n: u32) -> NcPoly {
    let mut p = NcPoly::u(n);
    for (l, c) in proper_compositions(n) {
        let tail = NcPoly::monomial(word_of(&vec![2; l], &c[1..]), sign(l % 2 == 1) * lagrange_d(&c[..l]));
        p += &(&NcPoly::u(c[0]) * &tail);
    }
    p
}

/// `δ_l(x_n) = Σ_ℓ (−1)^ℓ Σ_n Σ_e (−1)^e d^e_ℓ(n_1..n_ℓ) x^{(e_1)}_{n_1} ⋯ x^{(e_ℓ)}_{n_ℓ} v_{n_{ℓ+1}}`.
fn fdb_delta_l(n: u32) -> NcPoly {
    let mut p = NcPoly::v(n);
    for (l, c) in proper_compositions(n) {
        for e in bit_sequences(l) {
            let d = lagrange_d_labeled(&e, &c[..l]);
            if d == Z::from(0) {
                continue;
            }
            let k = sign(l % 2 == 1) * Z::from(e_sign(&e)) * d;
            let head = NcPoly::monomial(word_of(&e, &c[..l]), k);
            p += &(&head * &NcPoly::v(c[l]));
        }
    }
    p
}

fn t_of(p: &NcPoly) -> Result<T> {
    T::from_poly(p)
}

/// `Δ(x_n) = x_n + y_n + Σ x_{n_1} ▷ (y_{n_2} ⊗ ⋯ ⊗ y_{n_{ℓ+1}})`.
fn fdb_delta_operator(n: u32) -> Result<NcPoly> {
    let mut p = NcPoly::x(n) + NcPoly::y(n);
    for (_, c) in proper_compositions(n) {
        let tail = T::tensor_of(&c[1..].iter().map(|&k| NcPoly::y(k)).collect::<Vec<_>>())?;
        p += &t_of(&NcPoly::x(c[0]))?.triangle(&tail).to_poly();
    }
    Ok(p)
}

/// `δ_r(x_n) = u_n + Σ (−1)^ℓ u_{n_1} ▷ R_ℓ(y_{n_2}, …, y_{n_{ℓ+1}})`.
fn fdb_delta_r_operator(n: u32) -> Result<NcPoly> {
    let mut p = NcPoly::u(n);
    for (l, c) in proper_compositions(n) {
        let args = c[1..].iter().map(|&k| t_of(&NcPoly::y(k))).collect::<Result<Vec<_>>>()?;
        let t = t_of(&NcPoly::u(c[0]))?.triangle(&right_rec(&args)).to_poly();
        p += &t.scale(&sign(l % 2 == 1));
    }
    Ok(p)
}

/// `δ_r(x_n) = u_n + Σ (−1)^ℓ L_ℓ(u_{n_1}, y_{n_2}, …, y_{n_ℓ}) ▷ y_{n_{ℓ+1}}`.
fn fdb_delta_r_via_l(n: u32) -> Result<NcPoly> {
    let mut p = NcPoly::u(n);
    for (l, c) in proper_compositions(n) {
        let mut args = vec![t_of(&NcPoly::u(c[0]))?];
        for &k in &c[1..l] {
            args.push(t_of(&NcPoly::y(k))?);
        }
        let t = left_rec(&args).triangle(&t_of(&NcPoly::y(c[l]))?).to_poly();
        p += &t.scale(&sign(l % 2 == 1));
    }
    Ok(p)
}

/// `δ_l(x_n) = v_n + Σ (−1)^ℓ Σ_e (−1)^e x^{(e_1)}_{n_1} ▷ R^e_ℓ(x^{(e_2)}_{n_2}, …, x^{(e_ℓ)}_{n_ℓ}, v_{n_{ℓ+1}})`.
fn fdb_delta_l_operator(n: u32) -> Result<NcPoly> {
    let mut p = NcPoly::v(n);
    for (l, c) in proper_compositions(n) {
        for e in bit_sequences(l) {
            let mut args = Vec::with_capacity(l);
            for i in 1..l {
                args.push(t_of(&NcPoly::letter(Letter::new(e[i], c[i])))?);
            }
            args.push(t_of(&NcPoly::v(c[l]))?);
            let head = t_of(&NcPoly::letter(Letter::new(e[0], c[0])))?;
            let t = head.triangle(&right_e_rec(&e, &args)?).to_poly();
            p += &t.scale(&(sign(l % 2 == 1) * Z::from(e_sign(&e))));
        }
    }
    Ok(p)
}

/// Coefficient of `x_{n_1} y_{n_2} ⋯ y_{n_{ℓ+1}}` in `δ_r(x_n)` and of
/// `x^{(e_1)}_{n_1} ⋯ x^{(e_ℓ)}_{n_ℓ} y_{n_{ℓ+1}}` in `δ_l(x_n)`, where
/// `n = n_1 + ⋯ + n_{ℓ+1}`. These are `(−1)^ℓ d_ℓ` and `(−1)^ℓ (−1)^e d^e_ℓ`.
pub fn codivision_coefficient(table: &CoOpTable, side: Side, ns: &[u32], e: Option<&[u8]>) -> Result<Z> {
    if ns.len() < 1 || ns.contains(&0) {
        return Err(Error::Invalid(format!("{ns:?} is not a composition")));
    }
    let l = ns.len() - 1;
    let copies: Vec<u8> = match (side, e) {
        (Side::Right, None) => std::iter::once(1).chain(std::iter::repeat(2).take(l)).collect(),
        (Side::Left, Some(e)) if e.len() == l => e.iter().copied().chain(std::iter::once(2)).collect(),
        _ => return Err(Error::Invalid("bit sequence required exactly for the left codivision".into())),
    };
    let n = ns.iter().sum();
    Ok(table.codivision(side, n).coeff(&word_of(&copies, ns)))
}
