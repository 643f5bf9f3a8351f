use std::fmt;

use serde::Serialize;

use super::random;
use super::{cancellation, diff_compose, inv_mul, series_inverse, ElementLoop, SeriesFlavor, TruncatedSeries};
use crate::algebras::{CdElement, Matrix};
use crate::coloops::{coassociator_fold1, coassociator_fold2, Flavor, Side};
use crate::freealg::{evaluate, NcPoly};
use crate::{q, Error, Result, Ring, MatCd, MatQ};

/// Names accepted by [`witness`].
pub const WITNESSES: [&str; 6] = [
    "diff-power-assoc",
    "diff-right-alt",
    "inv-left-right-inverse",
    "inv-right-alt",
    "inv-power-assoc",
    "ucd-not-loop",
];

/// Default seed of the search behind `ucd-not-loop`.
pub const UCD_SEED: u64 = 2024;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub holds: bool,
}

/// A recomputed counterexample: its inputs, intermediate values and the
/// equalities it asserts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub name: String,
    pub seed: Option<u64>,
    pub inputs: Vec<(String, String)>,
    pub values: Vec<(String, String)>,
    pub assertions: Vec<Assertion>,
}

impl WitnessReport {
    fn new(name: &str) -> Self {
        WitnessReport { name: name.into(), seed: None, inputs: vec![], values: vec![], assertions: vec![] }
    }

    fn input(&mut self, k: &str, v: impl fmt::Display) {
        self.inputs.push((k.into(), v.to_string()));
    }

    fn value(&mut self, k: &str, v: impl fmt::Display) {
        self.values.push((k.into(), v.to_string()));
    }

    fn check<T: PartialEq + fmt::Display>(&mut self, claim: &str, expected: &T, actual: &T) {
        self.assertions.push(Assertion {
            claim: claim.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            holds: expected == actual,
        });
    }

    fn check_true(&mut self, claim: &str, holds: bool) {
        self.assertions.push(Assertion {
            claim: claim.into(),
            expected: "true".into(),
            actual: holds.to_string(),
            holds,
        });
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.holds)
    }
}

impl fmt::Display for WitnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "witness {}", self.name)?;
        if let Some(s) = self.seed {
            writeln!(f, "seed {s}")?;
        }
        for (k, v) in &self.inputs {
            writeln!(f, "input  {k} = {v}")?;
        }
        for (k, v) in &self.values {
            writeln!(f, "value  {k} = {v}")?;
        }
        for a in &self.assertions {
            let tag = if a.holds { "ok  " } else { "FAIL" };
            writeln!(f, "{tag}   {}: expected {}, got {}", a.claim, a.expected, a.actual)?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Recompute a named counterexample from scratch.
pub fn witness(name: &str) -> Result<WitnessReport> {
    witness_with_seed(name, UCD_SEED)
}

/// As [`witness`]; `seed` drives the randomized searches.
pub fn witness_with_seed(name: &str, seed: u64) -> Result<WitnessReport> {
    match name {
        "diff-power-assoc" => Ok(diff_power_assoc()),
        "diff-right-alt" => Ok(diff_right_alt()),
        "inv-left-right-inverse" => Ok(inv_left_right_inverse()),
        "inv-right-alt" => Ok(inv_right_alt()),
        "inv-power-assoc" => Ok(inv_power_assoc()),
        "ucd-not-loop" => ucd_not_loop(seed),
        _ => Err(Error::Invalid(format!("unknown witness {name:?}; expected one of {}", WITNESSES.join(", ")))),
    }
}

fn mq(rows: [[i64; 2]; 2]) -> MatQ {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).expect("2x2")
}

fn diff_series(order: usize, head: Vec<MatQ>) -> TruncatedSeries<MatQ> {
    TruncatedSeries::padded(SeriesFlavor::Diff, order, head).expect("order covers head")
}

/// `evaluate(p)` with copy 1 → `a`, copy 2 → `b` (degree-indexed).
fn eval2<A: Ring>(p: &NcPoly, a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> A {
    evaluate(p, &a.coeff(0), |l| match l.copy {
        1 => Some(a.coeff(l.index as usize)),
        2 => Some(b.coeff(l.index as usize)),
        _ => None,
    })
    .expect("two copies")
}

fn diff_power_assoc() -> WitnessReport {
    let mut r = WitnessReport::new("diff-power-assoc");
    let (c1, c2) = (mq([[1, 1], [0, 1]]), mq([[1, 0], [1, 0]]));
    r.input("c1", &c1);
    r.input("c2", &c2);
    let c1c2c1c1 = c1.times(&c2).times(&c1).times(&c1);
    let c1c1c2c1 = c1.times(&c1).times(&c2).times(&c1);
    r.check("c1 c2 c1^2", &mq([[2, 4], [1, 2]]), &c1c2c1c1);
    r.check("c1^2 c2 c1", &mq([[3, 3], [1, 1]]), &c1c1c2c1);
    r.check_true("c1 c2 c1^2 != c1^2 c2 c1", c1c2c1c1 != c1c1c2c1);

    let c = diff_series(5, vec![c1, c2]);
    let cc = diff_compose(&c, &c).expect("same order");
    let left = diff_compose(&cc, &c).expect("same order");
    let right = diff_compose(&c, &cc).expect("same order");
    let defect = left.coeff(5).minus(&right.coeff(5));
    r.value("((c∘c)∘c - c∘(c∘c)) at λ^6", &defect);
    for n in 1..5 {
        r.check(&format!("associative below λ^6 (coefficient {n})"), &left.coeff(n), &right.coeff(n));
    }
    let fold = coassociator_fold2(Flavor::FdB, 5).expect("degree 5");
    r.value("μ(id⊔μ)K(x5)", &fold);
    r.check("defect equals μ(id⊔μ)K(x5) at c", &eval2(&fold, &c, &c), &defect);
    r.check("defect equals c1 c2 c1^2 - c1^2 c2 c1", &c1c2c1c1.minus(&c1c1c2c1), &defect);
    r
}

fn diff_right_alt() -> WitnessReport {
    let mut r = WitnessReport::new("diff-right-alt");
    let one = mq([[1, 0], [0, 1]]);
    let (b1, b2) = (mq([[1, 0], [0, 0]]), mq([[0, 0], [1, 0]]));
    r.input("a1", &one);
    r.input("b1", &b1);
    r.input("b2", &b2);
    r.check("b2 b1^2", &b2, &b2.times(&b1).times(&b1));
    r.check("b1 b2 b1", &one.zero_like(), &b1.times(&b2).times(&b1));

    let a = diff_series(5, vec![one]);
    let b = diff_series(5, vec![b1, b2.clone()]);
    let left = diff_compose(&diff_compose(&a, &b).expect("order"), &b).expect("order");
    let right = diff_compose(&a, &diff_compose(&b, &b).expect("order")).expect("order");
    let defect = left.coeff(5).minus(&right.coeff(5));
    r.value("((a∘b)∘b - a∘(b∘b)) at λ^6", &defect);
    for n in 1..5 {
        r.check(&format!("right alternative below λ^6 (coefficient {n})"), &left.coeff(n), &right.coeff(n));
    }
    let fold = coassociator_fold1(Flavor::FdB, 5).expect("degree 5");
    r.value("(id⊔μ)K(x5)", &fold);
    r.check("defect equals (id⊔μ)K(x5) at (a, b)", &eval2(&fold, &a, &b), &defect);
    r.check("defect equals E21", &b2, &defect);
    r
}

fn sed(idx: &[usize]) -> CdElement {
    CdElement::units(4, idx)
}

/// `[[e1+e10, e5+e14], [0, 1]]` over the sedenions.
fn sedenion_a1() -> MatCd {
    Matrix::from_rows(vec![vec![sed(&[1, 10]), sed(&[5, 14])], vec![CdElement::zero(4), CdElement::one(4)]])
        .expect("2x2")
}

fn inv_series<A: Ring>(order: usize, a1: A) -> TruncatedSeries<A> {
    TruncatedSeries::padded(SeriesFlavor::Inv, order, vec![a1]).expect("order covers head")
}

fn upper_right(x: CdElement) -> MatCd {
    let z = CdElement::zero(4);
    Matrix::from_rows(vec![vec![z.clone(), x], vec![z.clone(), z]]).expect("2x2")
}

fn inv_left_right_inverse() -> WitnessReport {
    let mut r = WitnessReport::new("inv-left-right-inverse");
    let a1 = sedenion_a1();
    r.input("a1", &a1);
    let a = inv_series(4, a1.clone());
    let right = series_inverse(Side::Right, &a).expect("order");
    let left = series_inverse(Side::Left, &a).expect("order");
    let sq = a1.times(&a1);
    r.check("(e/a)_3 = -(a1 a1) a1", &sq.times(&a1).negate(), &right.coeff(3));
    r.check("(a\\e)_3 = -a1 (a1 a1)", &a1.times(&sq).negate(), &left.coeff(3));
    for n in 1..3 {
        r.check(&format!("inverses agree at λ^{n}"), &right.coeff(n), &left.coeff(n));
    }
    let defect = left.coeff(3).minus(&right.coeff(3));
    r.value("(e/a - a\\e) at λ^3", right.coeff(3).minus(&left.coeff(3)));
    r.check("(a\\e - e/a) at λ^3", &upper_right(sed(&[5, 14]).scale_q(&q(-2))), &defect);
    r
}

fn inv_right_alt() -> WitnessReport {
    let mut r = WitnessReport::new("inv-right-alt");
    let (p, s) = (sed(&[1, 10]), sed(&[5, 14]));
    r.input("a1", &p);
    r.input("b1", &s);
    r.check("(e1+e10)(e5+e14)", &CdElement::zero(4), &p.times(&s));
    r.check("(e5+e14)^2", &CdElement::scalar(4, q(-2)), &s.times(&s));
    let a = inv_series(3, p.clone());
    let b = inv_series(3, s);
    let left = inv_mul(&inv_mul(&a, &b).expect("order"), &b).expect("order");
    let right = inv_mul(&a, &inv_mul(&b, &b).expect("order")).expect("order");
    for n in 1..3 {
        r.check(&format!("right alternative below λ^3 (coefficient {n})"), &left.coeff(n), &right.coeff(n));
    }
    let defect = left.coeff(3).minus(&right.coeff(3));
    r.check("((ab)b - a(bb)) at λ^3", &p.scale_q(&q(2)), &defect);
    r
}

fn inv_power_assoc() -> WitnessReport {
    let mut r = WitnessReport::new("inv-power-assoc");
    let a1 = sedenion_a1();
    r.input("a1", &a1);
    let sq = a1.times(&a1);
    let one = CdElement::one(4);
    let (p, s) = (sed(&[1, 10]), sed(&[5, 14]));
    let expect = |sign: i64| {
        Matrix::from_rows(vec![
            vec![p.scale_q(&q(-2)), s.scale_q(&q(sign))],
            vec![CdElement::zero(4), one.clone()],
        ])
        .expect("2x2")
    };
    r.check("a1^2 a1", &expect(-1), &sq.times(&a1));
    r.check("a1 a1^2", &expect(1), &a1.times(&sq));
    let a = inv_series(3, a1);
    let aa = inv_mul(&a, &a).expect("order");
    let left = inv_mul(&aa, &a).expect("order");
    let right = inv_mul(&a, &aa).expect("order");
    for n in 1..3 {
        r.check(&format!("power associative below λ^3 (coefficient {n})"), &left.coeff(n), &right.coeff(n));
    }
    let defect = left.coeff(3).minus(&right.coeff(3));
    r.check("((aa)a - a(aa)) at λ^3", &upper_right(s.scale_q(&q(-2))), &defect);
    r
}

/// Search `U_CD(M_2(H))` for a pair on which conjugate division fails to be
/// a loop division.
fn ucd_not_loop(seed: u64) -> Result<WitnessReport> {
    let mut r = WitnessReport::new("ucd-not-loop");
    r.seed = Some(seed);
    let mut rng = random::rng(seed);
    for attempt in 1..=64 {
        let x = random::ucd_quaternion_matrix(&mut rng);
        let y = random::ucd_quaternion_matrix(&mut rng);
        let c = cancellation(ElementLoop::Ucd, &x, &y)?;
        if c.holds() {
            continue;
        }
        r.value("attempt", attempt);
        r.input("x", format!("{} + ({}) j", x.p, x.q));
        r.input("y", format!("{} + ({}) j", y.p, y.q));
        r.value("x\\y", format!("{} + ({}) j", c.left_quotient.p, c.left_quotient.q));
        r.check_true("x and y are unitary", super::is_member(ElementLoop::Ucd, &x) && super::is_member(ElementLoop::Ucd, &y));
        r.check_true(
            "x(x\\y) != y or (y/x)x != y or a quotient is not unitary",
            !(c.left_cancels && c.right_cancels && c.quotients_in_loop),
        );
        r.value("x(x\\y) = y", c.left_cancels);
        r.value("(y/x)x = y", c.right_cancels);
        r.value("quotients unitary", c.quotients_in_loop);
        return Ok(r);
    }
    r.check_true("a failing pair within 64 attempts", false);
    Ok(r)
}
