use num_traits::One;

use super::{Axiom, CoOpTable, Flavor, Kind, Morph};
use crate::freealg::{id_mu, include_iota, mu, project_pi, Letter, NcPoly, TensorPoly, Word};
use crate::{Result, Z};

/// The coassociator `K(x_n) = (Δ ⊔ id)Δ(x_n) − (id ⊔ Δ)Δ(x_n)` in `H^{⊔3}`.
pub fn coassociator(flavor: Flavor, n: u32) -> Result<NcPoly> {
    let table = CoOpTable::shared(flavor);
    let delta = Morph::coop(table, Kind::Delta, n);
    let id = Morph::identity(n);
    let left = delta.then(&Morph::coprod(&delta, &id))?;
    let right = delta.then(&Morph::coprod(&id, &delta))?;
    let x = NcPoly::x(n);
    Ok(&left.on(&x)? - &right.on(&x)?)
}

/// `(id ⊔ μ)K(x_n)`.
pub fn coassociator_fold1(flavor: Flavor, n: u32) -> Result<NcPoly> {
    Ok(crate::freealg::fold(&coassociator(flavor, n)?, id_mu))
}

/// `μ(id ⊔ μ)K(x_n)`.
pub fn coassociator_fold2(flavor: Flavor, n: u32) -> Result<NcPoly> {
    Ok(crate::freealg::fold(&coassociator_fold1(flavor, n)?, mu))
}

/// `Δ^⊗(x_n) = π Δ(x_n)` in `H ⊗ H`.
pub fn projected_coproduct(flavor: Flavor, n: u32) -> Result<TensorPoly> {
    project_pi(&CoOpTable::shared(flavor).coproduct(n), 2)
}

/// `Δ^⊗` on a word, as the componentwise product of the letter images.
fn projected_on_word(flavor: Flavor, w: &Word) -> Result<TensorPoly> {
    let mut acc = TensorPoly::monomial(vec![Word::unit(), Word::unit()], Z::one());
    for l in w.letters() {
        acc = acc.mul(&projected_coproduct(flavor, l.index)?)?;
    }
    Ok(acc)
}

/// `(Δ^⊗ ⊗ id)Δ^⊗(x_n)` and `(id ⊗ Δ^⊗)Δ^⊗(x_n)` in `H^{⊗3}`.
pub fn projected_coassociativity(flavor: Flavor, n: u32) -> Result<(TensorPoly, TensorPoly)> {
    let d = projected_coproduct(flavor, n)?;
    let mut left = TensorPoly::zero(3);
    let mut right = TensorPoly::zero(3);
    for (ws, c) in d.terms() {
        for (a, ca) in projected_on_word(flavor, &ws[0])?.terms() {
            left.add_term(vec![a[0].clone(), a[1].clone(), ws[1].clone()], c * ca)?;
        }
        for (b, cb) in projected_on_word(flavor, &ws[1])?.terms() {
            right.add_term(vec![ws[0].clone(), b[0].clone(), b[1].clone()], c * cb)?;
        }
    }
    Ok((left, right))
}

/// The non-commutative Faà di Bruno coproduct
/// `Δ^nc(x_n) = Σ_m x_m ⊗ Σ_{k_0+⋯+k_m = n−m} x_{k_0} ⋯ x_{k_m}`, with `x_0 = 1`.
pub fn fdb_nc_coproduct(n: u32) -> TensorPoly {
    let mut out = TensorPoly::zero(2);
    for m in 0..=n {
        let left = if m == 0 { Word::unit() } else { Word::letter(Letter::x(m)) };
        for ks in weak_compositions(n - m, m as usize + 1) {
            let right = Word(ks.iter().filter(|&&k| k > 0).map(|&k| Letter::x(k)).collect());
            out.add_term(vec![left.clone(), right], Z::one()).expect("arity 2");
        }
    }
    out
}

/// Sequences of `parts` nonnegative integers summing to `n`.
fn weak_compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `Δ^⊗(x_n) = Δ^nc(x_n)` for FdB.
pub fn compare_nc_hopf(n: u32) -> Result<bool> {
    Ok(projected_coproduct(Flavor::FdB, n)? == fdb_nc_coproduct(n))
}

/// `π ∘ ι = id` on a tensor.
pub fn pi_iota_roundtrip(t: &TensorPoly) -> Result<bool> {
    Ok(&project_pi(&include_iota(t), t.arity())? == t)
}

/// What the battery is expected to report for an axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    /// Fails from degree `from` on.
    FailsFrom { from: u32 },
    /// A failure that needs non-associative coefficients. In the associative
    /// symbolic ring the check passes, and the failure is exhibited by the
    /// named series witness instead.
    WitnessOnly { witness: &'static str },
}

/// The negative results that are part of the theory, so that a sweep can
/// tell them apart from regressions.
pub fn expected(flavor: Flavor, axiom: Axiom) -> Expectation {
    match (flavor, axiom) {
        (Flavor::FdB, Axiom::CoinverseLeft) => Expectation::FailsFrom { from: 3 },
        (Flavor::Inv, Axiom::CoinverseRight | Axiom::CoinverseLeft) => {
            Expectation::WitnessOnly { witness: "inv-left-right-inverse" }
        }
        _ => Expectation::Holds,
    }
}

/// Outcome of one `(axiom, n)` check in a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    ExpectedFail,
    Regression,
}

#[derive(Clone, Debug)]
pub struct SweepRecord {
    pub flavor: Flavor,
    pub axiom: Axiom,
    pub n: u32,
    pub pass: bool,
    pub discrepancy: Option<NcPoly>,
    pub verdict: Verdict,
}

/// Run every axiom on `x_1..x_max_degree`.
pub fn sweep(flavor: Flavor, max_degree: u32) -> Result<Vec<SweepRecord>> {
    let table = CoOpTable::shared(flavor);
    let mut out = Vec::new();
    for axiom in Axiom::ALL {
        // the maps are built once at the top degree and reused below it
        let sides = axiom.sides(table, max_degree)?;
        for n in 1..=max_degree {
            let x = NcPoly::x(n);
            let mut discrepancy = None;
            for (lhs, rhs) in &sides {
                let d = &lhs.on(&x)? - &rhs.on(&x)?;
                if !d.is_zero() {
                    discrepancy = Some(d);
                    break;
                }
            }
            let pass = discrepancy.is_none();
            let verdict = match (expected(flavor, axiom), pass) {
                (_, true) => Verdict::Pass,
                (Expectation::FailsFrom { from }, false) if n >= from => Verdict::ExpectedFail,
                _ => Verdict::Regression,
            };
            out.push(SweepRecord { flavor, axiom, n, pass, discrepancy, verdict });
        }
    }
    Ok(out)
}
