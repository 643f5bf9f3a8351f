use std::fmt;
use std::str::FromStr;

use crate::coloops::{CoOpTable, Flavor, Kind, Side};
use crate::combinatorics::{binom, compositions};
use crate::freealg::evaluate;
use crate::{Error, Result, Ring};

/// Which loop a truncated series lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesFlavor {
    /// `a = Σ a_n λ^n`, pointwise product.
    Inv,
    /// `a = Σ a_n λ^{n+1}`, composition.
    Diff,
}

impl SeriesFlavor {
    /// The coloop bialgebra representing this loop.
    pub fn coloop(self) -> Flavor {
        match self {
            SeriesFlavor::Inv => Flavor::Inv,
            SeriesFlavor::Diff => Flavor::FdB,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeriesFlavor::Inv => "inv",
            SeriesFlavor::Diff => "diff",
        }
    }
}

impl fmt::Display for SeriesFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesFlavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "inv" => Ok(SeriesFlavor::Inv),
            "diff" | "fdb" => Ok(SeriesFlavor::Diff),
            _ => Err(Error::Parse(format!("unknown series flavor {s:?}"))),
        }
    }
}

/// How a division is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Degree-by-degree solution of the cancellation equation.
    Recursive,
    /// Closed formula (for Diff: the codivision table evaluated on `a ⊔ b`).
    Closed,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "recursive" => Ok(Mode::Recursive),
            "closed" => Ok(Mode::Closed),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// A series `1 + a_1 λ + ⋯ + a_N λ^N` (Inv) or `λ + a_1 λ^2 + ⋯ + a_N λ^{N+1}`
/// (Diff), known modulo the next degree. `a_0 = 1` is implicit.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<A> {
    flavor: SeriesFlavor,
    coeffs: Vec<A>,
}

impl<A: Ring> TruncatedSeries<A> {
    /// `coeffs` are `a_1, …, a_N`; their number is the order `N ≥ 1`.
    pub fn new(flavor: SeriesFlavor, coeffs: Vec<A>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("a truncated series needs order >= 1".into()));
        }
        Ok(TruncatedSeries { flavor, coeffs })
    }

    /// The unit `e`, with coefficients shaped like `like`.
    pub fn unit(flavor: SeriesFlavor, order: usize, like: &A) -> Self {
        assert!(order >= 1, "order must be positive");
        TruncatedSeries { flavor, coeffs: vec![like.zero_like(); order] }
    }

    /// Coefficients given as `a_1, a_2, …`, padded with zeros up to `order`.
    pub fn padded(flavor: SeriesFlavor, order: usize, head: Vec<A>) -> Result<Self> {
        let like = head.first().ok_or_else(|| Error::Invalid("no coefficients given".into()))?.clone();
        if head.len() > order {
            return Err(Error::Invalid(format!("{} coefficients exceed order {order}", head.len())));
        }
        let mut coeffs = head;
        coeffs.resize(order, like.zero_like());
        Self::new(flavor, coeffs)
    }

    pub fn flavor(&self) -> SeriesFlavor {
        self.flavor
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    fn one(&self) -> A {
        self.coeffs[0].one_like()
    }

    /// `a_n` for `0 ≤ n ≤ N`, with `a_0 = 1`.
    pub fn coeff(&self, n: usize) -> A {
        if n == 0 {
            self.one()
        } else {
            self.coeffs[n - 1].clone()
        }
    }

    fn check_pair(&self, other: &Self, flavor: SeriesFlavor) -> Result<()> {
        if self.flavor != flavor || other.flavor != flavor {
            return Err(Error::Shape(format!("expected two {flavor} series, got {} and {}", self.flavor, other.flavor)));
        }
        if self.order() != other.order() {
            return Err(Error::Shape(format!("orders {} and {} differ", self.order(), other.order())));
        }
        Ok(())
    }

    fn build(&self, f: impl FnMut(usize, &[A]) -> A) -> Self {
        let mut f = f;
        let mut out: Vec<A> = vec![self.one()];
        for n in 1..=self.order() {
            let c = f(n, &out);
            out.push(c);
        }
        out.remove(0);
        TruncatedSeries { flavor: self.flavor, coeffs: out }
    }
}

/// `Σ_{k_0+⋯+k_m = total} c_{k_0} ⋯ c_{k_m}` with `c_0 = 1`, the product taken
/// left to right.
fn power_sum<A: Ring>(c: &[A], parts: usize, total: usize) -> A {
    // dp[t] = sum over j-part weak compositions of t
    let one = c[0].one_like();
    let mut dp: Vec<A> = (0..=total).map(|t| if t == 0 { one.clone() } else { one.zero_like() }).collect();
    for _ in 0..parts {
        let mut next = vec![one.zero_like(); total + 1];
        for (t, slot) in next.iter_mut().enumerate() {
            for k in 0..=t {
                let prod = dp[t - k].times(&c[k]);
                *slot = slot.plus(&prod);
            }
        }
        dp = next;
    }
    dp[total].clone()
}

/// Pointwise product `(ab)_n = Σ_m a_m b_{n−m}`.
pub fn inv_mul<A: Ring>(a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> Result<TruncatedSeries<A>> {
    a.check_pair(b, SeriesFlavor::Inv)?;
    Ok(a.build(|n, _| {
        let mut acc = a.coeff(n).plus(&b.coeff(n));
        for m in 1..n {
            acc = acc.plus(&a.coeff(m).times(&b.coeff(n - m)));
        }
        acc
    }))
}

/// Composition `(a∘b)_n = Σ_m a_m Σ_{k_0+⋯+k_m = n−m} b_{k_0} ⋯ b_{k_m}`.
pub fn diff_compose<A: Ring>(a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> Result<TruncatedSeries<A>> {
    a.check_pair(b, SeriesFlavor::Diff)?;
    let bs: Vec<A> = (0..=b.order()).map(|k| b.coeff(k)).collect();
    Ok(a.build(|n, _| {
        let mut acc = a.one().zero_like();
        for m in 0..=n {
            acc = acc.plus(&a.coeff(m).times(&power_sum(&bs, m + 1, n - m)));
        }
        acc
    }))
}

/// Composition through the binomial form
/// `(a∘b)_n = a_n + b_n + Σ_{0<m<n} a_m Σ_l binom(m+1, l) Σ_{k_1+⋯+k_l = n−m, k_i ≥ 1} b_{k_1} ⋯ b_{k_l}`.
pub fn diff_compose_binomial<A: Ring>(a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> Result<TruncatedSeries<A>> {
    a.check_pair(b, SeriesFlavor::Diff)?;
    Ok(a.build(|n, _| {
        let mut acc = a.coeff(n).plus(&b.coeff(n));
        for m in 1..n {
            let mut inner = a.one().zero_like();
            for l in 1..=(n - m).min(m + 1) {
                for ks in compositions((n - m) as u32, l) {
                    let prod = ks.iter().fold(a.one(), |p, &k| p.times(&b.coeff(k as usize)));
                    inner = inner.plus(&prod.scale(&binom(m as u32 + 1, l as u32)));
                }
            }
            acc = acc.plus(&a.coeff(m).times(&inner));
        }
        acc
    }))
}

/// The loop product of the flavor.
pub fn loop_mul<A: Ring>(a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> Result<TruncatedSeries<A>> {
    match a.flavor {
        SeriesFlavor::Inv => inv_mul(a, b),
        SeriesFlavor::Diff => diff_compose(a, b),
    }
}

/// `a / b` (solving `(a/b) b = a`) or `a \ b` (solving `a (a\b) = b`).
pub fn divide<A: Ring>(
    side: Side,
    mode: Mode,
    a: &TruncatedSeries<A>,
    b: &TruncatedSeries<A>,
) -> Result<TruncatedSeries<A>> {
    a.check_pair(b, a.flavor)?;
    match (a.flavor, mode) {
        (SeriesFlavor::Inv, Mode::Recursive) => Ok(inv_divide_recursive(side, a, b)),
        (SeriesFlavor::Inv, Mode::Closed) => Ok(inv_divide_closed(side, a, b)),
        (SeriesFlavor::Diff, Mode::Recursive) => Ok(diff_divide_recursive(side, a, b)),
        (SeriesFlavor::Diff, Mode::Closed) => {
            let kind = match side {
                Side::Right => Kind::DeltaR,
                Side::Left => Kind::DeltaL,
            };
            let coeffs = (1..=a.order()).map(|n| convolution_eval(kind, a, b, n)).collect::<Result<Vec<_>>>()?;
            TruncatedSeries::new(SeriesFlavor::Diff, coeffs)
        }
    }
}

fn inv_divide_recursive<A: Ring>(side: Side, a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> TruncatedSeries<A> {
    match side {
        // c_n = a_n − Σ_{m<n} c_m b_{n−m}
        Side::Right => a.build(|n, c| {
            let mut acc = a.coeff(n).minus(&b.coeff(n));
            for m in 1..n {
                acc = acc.minus(&c[m].times(&b.coeff(n - m)));
            }
            acc
        }),
        // c_n = b_n − Σ_{m≥1} a_m c_{n−m}
        Side::Left => a.build(|n, c| {
            let mut acc = b.coeff(n).minus(&a.coeff(n));
            for m in 1..n {
                acc = acc.minus(&a.coeff(m).times(&c[n - m]));
            }
            acc
        }),
    }
}

/// Closed formulas with the printed parenthesization, valid over any
/// (not necessarily associative) coefficient algebra:
/// right `((u_{n_1} b_{n_2}) b_{n_3}) ⋯`, left `a_{n_1}(a_{n_2}(⋯(v_{n_{ℓ+1}})))`.
fn inv_divide_closed<A: Ring>(side: Side, a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> TruncatedSeries<A> {
    a.build(|n, _| {
        let mut acc = a.one().zero_like();
        for len in 1..=n {
            for c in compositions(n as u32, len) {
                let c: Vec<usize> = c.into_iter().map(|k| k as usize).collect();
                let t = match side {
                    Side::Right => c[1..]
                        .iter()
                        .fold(a.coeff(c[0]).minus(&b.coeff(c[0])), |t, &k| t.times(&b.coeff(k))),
                    Side::Left => {
                        let last = c[len - 1];
                        c[..len - 1]
                            .iter()
                            .rev()
                            .fold(b.coeff(last).minus(&a.coeff(last)), |t, &k| a.coeff(k).times(&t))
                    }
                };
                acc = if (len - 1) % 2 == 1 { acc.minus(&t) } else { acc.plus(&t) };
            }
        }
        acc
    })
}

fn diff_divide_recursive<A: Ring>(side: Side, a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> TruncatedSeries<A> {
    let bs: Vec<A> = (0..=b.order()).map(|k| b.coeff(k)).collect();
    match side {
        // c_n = a_n − Σ_{m<n} c_m Σ_{k_0+⋯+k_m = n−m} b_{k_0} ⋯ b_{k_m}
        Side::Right => a.build(|n, c| {
            let mut acc = a.coeff(n);
            for m in 0..n {
                acc = acc.minus(&c[m].times(&power_sum(&bs, m + 1, n - m)));
            }
            acc
        }),
        // c_n = b_n − Σ_{m≥1} a_m Σ_{k_0+⋯+k_m = n−m} c_{k_0} ⋯ c_{k_m}
        Side::Left => a.build(|n, c| {
            let mut acc = b.coeff(n);
            for m in 1..=n {
                acc = acc.minus(&a.coeff(m).times(&power_sum(c, m + 1, n - m)));
            }
            acc
        }),
    }
}

/// Two-sided inverse of a Diff series from the antipode table,
/// `(a^{-1})_n = a(S(x_n))`.
pub fn diff_inverse<A: Ring>(a: &TruncatedSeries<A>) -> Result<TruncatedSeries<A>> {
    if a.flavor != SeriesFlavor::Diff {
        return Err(Error::Shape("diff_inverse needs a diff series".into()));
    }
    let table = CoOpTable::shared(Flavor::FdB);
    let coeffs = (1..=a.order())
        .map(|n| evaluate(&table.antipode(Side::Right, n as u32), &a.one(), |l| Some(a.coeff(l.index as usize))))
        .collect::<Result<Vec<_>>>()?;
    TruncatedSeries::new(SeriesFlavor::Diff, coeffs)
}

/// `e / a` (`Side::Right`) or `a \ e` (`Side::Left`), solved recursively.
pub fn series_inverse<A: Ring>(side: Side, a: &TruncatedSeries<A>) -> Result<TruncatedSeries<A>> {
    let e = TruncatedSeries::unit(a.flavor, a.order(), &a.coeffs[0]);
    match side {
        Side::Right => divide(Side::Right, Mode::Recursive, &e, a),
        Side::Left => divide(Side::Left, Mode::Recursive, a, &e),
    }
}

/// `μ_A (a ⊔ b)` applied to the image of `x_n` under a co-operation: the
/// representing algebra made executable. Needs an associative `A`.
pub fn convolution_eval<A: Ring>(kind: Kind, a: &TruncatedSeries<A>, b: &TruncatedSeries<A>, n: usize) -> Result<A> {
    a.check_pair(b, a.flavor)?;
    if n == 0 || n > a.order() {
        return Err(Error::Invalid(format!("degree {n} outside 1..={}", a.order())));
    }
    let image = CoOpTable::shared(a.flavor.coloop()).image(kind, n as u32);
    evaluate(&image, &a.one(), |l| match l.copy {
        1 => Some(a.coeff(l.index as usize)),
        2 => Some(b.coeff(l.index as usize)),
        _ => None,
    })
}

/// The four cancellation laws, each as `(name, holds)`.
pub fn cancellation_laws<A: Ring>(a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> Result<Vec<(&'static str, bool)>> {
    let ab = loop_mul(a, b)?;
    let r = divide(Side::Right, Mode::Recursive, a, b)?;
    let l = divide(Side::Left, Mode::Recursive, a, b)?;
    Ok(vec![
        ("(a/b)b = a", &loop_mul(&r, b)? == a),
        ("(ab)/b = a", &divide(Side::Right, Mode::Recursive, &ab, b)? == a),
        ("a(a\\b) = b", &loop_mul(a, &l)? == b),
        ("a\\(ab) = b", &divide(Side::Left, Mode::Recursive, a, &ab)? == b),
    ])
}

impl<A: fmt::Debug> fmt::Debug for TruncatedSeries<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.flavor, self.coeffs)
    }
}

/// `1 + (a_1) λ + ⋯` or `λ + (a_1) λ^2 + ⋯`.
impl<A: Ring + fmt::Display> fmt::Display for TruncatedSeries<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shift = match self.flavor {
            SeriesFlavor::Inv => 0,
            SeriesFlavor::Diff => 1,
        };
        let lam = |k: usize| match k {
            0 => String::new(),
            1 => "λ".to_string(),
            k => format!("λ^{k}"),
        };
        match shift {
            0 => write!(f, "1")?,
            _ => write!(f, "λ")?,
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.vanishes() {
                write!(f, " + ({c}){}", lam(i + 1 + shift))?;
            }
        }
        write!(f, " + O({})", lam(self.order() + 1 + shift))
    }
}
