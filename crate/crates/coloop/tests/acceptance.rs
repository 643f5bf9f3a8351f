//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use coloop::algebras::{hq_loop_axioms, CdElement, Identity};
use coloop::coloops::*;
use coloop::combinatorics::*;
use coloop::freealg::NcPoly;
use coloop::operators::*;
use coloop::seriesloops::random::{self, SeededRng};
use coloop::seriesloops::*;
use coloop::{MatQ, Ring};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> NcPoly {
    NcPoly::parse(s).expect("golden parses")
}

const DELTA: [&str; 5] = [
    "x1 + y1",
    "x2 + y2 + 2*x1*y1",
    "x3 + y3 + 2*x1*y2 + 3*x2*y1 + x1*y1^2",
    "x4 + y4 + 2*x1*y3 + 3*x2*y2 + 4*x3*y1 + x1*y1*y2 + x1*y2*y1 + 3*x2*y1^2",
    "x5 + y5 + 2*x1*y4 + 3*x2*y3 + 4*x3*y2 + 5*x4*y1 + x1*y1*y3 + x1*y2^2 + x1*y3*y1 \
     + 3*x2*y1*y2 + 3*x2*y2*y1 + 6*x3*y1^2 + x2*y1^3",
];

const DELTA_R: [&str; 5] = [
    "u1",
    "u2 - 2*u1*y1",
    "u3 - 2*u1*y2 - 3*u2*y1 + 5*u1*y1^2",
    "u4 - 2*u1*y3 - 3*u2*y2 - 4*u3*y1 + 5*u1*y1*y2 + 7*u1*y2*y1 + 9*u2*y1^2 - 14*u1*y1^3",
    "u5 - 2*u1*y4 - 3*u2*y3 - 4*u3*y2 - 5*u4*y1 + 5*u1*y1*y3 + 7*u1*y2^2 + 9*u1*y3*y1 + 9*u2*y1*y2 \
     + 12*u2*y2*y1 + 14*u3*y1^2 - 14*u1*y1^2*y2 - 19*u1*y1*y2*y1 - 23*u1*y2*y1^2 - 28*u2*y1^3 + 42*u1*y1^4",
];

const DELTA_L: [&str; 5] = [
    "v1",
    "v2 - 2*x1*v1",
    "v3 - 2*x1*v2 - 3*x2*v1 + 5*x1^2*v1 - x1*y1*v1",
    "v4 - 2*x1*v3 - 3*x2*v2 - 4*x3*v1 + 5*x1^2*v2 + 7*x1*x2*v1 + 9*x2*x1*v1 - 14*x1^3*v1 \
     - x1*y1*v2 - x1*y2*v1 - 3*x2*y1*v1 + 4*x1^2*y1*v1 + 2*x1*y1*x1*v1",
    "v5 - 2*x1*v4 - 3*x2*v3 - 4*x3*v2 - 5*x4*v1 + 5*x1^2*v3 + 7*x1*x2*v2 + 9*x1*x3*v1 + 9*x2*x1*v2 \
     + 12*x2^2*v1 + 14*x3*x1*v1 - 14*x1^3*v2 - 19*x1^2*x2*v1 - 23*x1*x2*x1*v1 - 28*x2*x1^2*v1 + 42*x1^4*v1 \
     - x1*y1*v3 - x1*y2*v2 - x1*y3*v1 - 3*x2*y1*v2 - 3*x2*y2*v1 - 6*x3*y1*v1 + 4*x1^2*y1*v2 + 4*x1^2*y2*v1 \
     + 9*x1*x2*y1*v1 + 10*x2*x1*y1*v1 + 2*x1*y1*x1*v2 + 3*x1*y1*x2*v1 + 2*x1*y2*x1*v1 + 7*x2*y1*x1*v1 \
     - x2*y1^2*v1 - 14*x1^3*y1*v1 - 9*x1^2*y1*x1*v1 - 5*x1*y1*x1^2*v1 + x1^2*y1^2*v1 + x1*y1*x1*y1*v1",
];

fn c1_goldens() -> Outcome {
    let t = CoOpTable::shared(Flavor::FdB);
    for n in 1..=5u32 {
        let i = n as usize - 1;
        for (name, got, want) in [
            ("Delta", t.coproduct(n), DELTA[i]),
            ("delta_r", t.codivision(Side::Right, n), DELTA_R[i]),
            ("delta_l", t.codivision(Side::Left, n), DELTA_L[i]),
        ] {
            // canonical rendering of both sides
            let (got, want) = (got.to_string(), p(want).to_string());
            ensure(got == want, || format!("{name}(x{n}): got {got}, want {want}"))?;
        }
    }
    Ok(())
}

fn c2_sweep() -> Outcome {
    let axioms = [
        Axiom::Counit,
        Axiom::RightCocancel1,
        Axiom::RightCocancel2,
        Axiom::LeftCocancel1,
        Axiom::LeftCocancel2,
        Axiom::PartialCounit,
        Axiom::FiveTermsLeft,
        Axiom::FiveTermsRight,
        Axiom::MuDelta,
    ];
    for flavor in Flavor::ALL {
        let t = CoOpTable::shared(flavor);
        for axiom in axioms {
            for n in 1..=7 {
                let d = axiom.check(t, n).map_err(|e| e.to_string())?;
                ensure(d.is_none(), || format!("{flavor} {axiom} x{n}: {:?}", d))?;
            }
        }
    }
    Ok(())
}

fn random_diff(rng: &mut SeededRng, order: usize) -> TruncatedSeries<MatQ> {
    TruncatedSeries::new(SeriesFlavor::Diff, (0..order).map(|_| random::matrix_q(rng, 2)).collect()).unwrap()
}

fn c3_antipode() -> Outcome {
    let t = CoOpTable::shared(Flavor::FdB);
    for n in 1..=7 {
        ensure(t.antipode(Side::Right, n) == t.antipode(Side::Left, n), || format!("S_r != S_l at x{n}"))?;
        let (ok, d) = axiom_check(Flavor::FdB, Axiom::CoinverseRight, n).map_err(|e| e.to_string())?;
        ensure(ok, || format!("delta_r != (id⊔S)Δ at x{n}: {d:?}"))?;
    }
    let first = (1..=7)
        .find(|&n| !axiom_check(Flavor::FdB, Axiom::CoinverseLeft, n).unwrap().0)
        .ok_or("delta_l = (S⊔id)Δ everywhere")?;
    ensure(first == 3, || format!("first coinverse-left failure at x{first}"))?;
    let d = axiom_check(Flavor::FdB, Axiom::CoinverseLeft, 3).unwrap().1.unwrap();
    ensure(d == p("x1*v1*y1 - x1*y1*v1"), || format!("discrepancy {d}"))?;
    let mut rng = random::rng(0xa11);
    for _ in 0..4 {
        let a = random_diff(&mut rng, 8);
        let inv = diff_inverse(&a).map_err(|e| e.to_string())?;
        let e = TruncatedSeries::unit(SeriesFlavor::Diff, 8, &a.coeff(1));
        ensure(diff_compose(&a, &inv).unwrap() == e, || "a∘a^-1 != e".into())?;
        ensure(diff_compose(&inv, &a).unwrap() == e, || "a^-1∘a != e".into())?;
    }
    Ok(())
}

fn oracle_pair<A: Ring>(a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> Outcome {
    for side in [Side::Right, Side::Left] {
        let rec = divide(side, Mode::Recursive, a, b).map_err(|e| e.to_string())?;
        let closed = divide(side, Mode::Closed, a, b).map_err(|e| e.to_string())?;
        ensure(rec == closed, || format!("{} {side}: closed != recursive", a.flavor()))?;
        let kind = if side == Side::Right { Kind::DeltaR } else { Kind::DeltaL };
        for n in 1..=a.order() {
            let conv = convolution_eval(kind, a, b, n).map_err(|e| e.to_string())?;
            ensure(conv == rec.coeff(n), || format!("{} {side}: convolution != recursive at {n}", a.flavor()))?;
        }
    }
    Ok(())
}

fn c4_oracles() -> Outcome {
    let mut rng = random::rng(0x0c4);
    for flavor in [SeriesFlavor::Inv, SeriesFlavor::Diff] {
        let a = TruncatedSeries::new(flavor, (1..=7).map(NcPoly::x).collect()).unwrap();
        let b = TruncatedSeries::new(flavor, (1..=7).map(NcPoly::y).collect()).unwrap();
        oracle_pair(&a, &b)?;
        for _ in 0..2 {
            let mut m = || TruncatedSeries::new(flavor, (0..8).map(|_| random::matrix_q(&mut rng, 2)).collect()).unwrap();
            let (a, b) = (m(), m());
            oracle_pair(&a, &b)?;
        }
    }
    Ok(())
}

fn c5_combinatorics() -> Outcome {
    for l in 1..=8usize {
        ensure(Some(m_sequences(l).len()) == catalan(l as u32).try_into().ok(), || format!("|M_{l}|"))?;
    }
    let d: Vec<_> = (1..=5).map(|l| lagrange_d(&vec![1; l])).collect();
    ensure(d == [2, 5, 14, 42, 132].map(coloop::Z::from), || format!("d_l(1..1) = {d:?}"))?;
    for n in 1..=10 {
        for c in all_compositions(n) {
            for r in DRecurrence::ALL {
                ensure(d_recurrence_check(r, &c), || format!("{r} at {c:?}"))?;
            }
        }
    }
    for l in 1..=7usize {
        let ms = m_sequences(l);
        let mut img: Vec<_> = ms.iter().map(|m| tree_of_msequence(m).unwrap()).collect();
        img.sort();
        img.dedup();
        let mut all = all_trees(l + 1);
        all.sort();
        ensure(img.len() == ms.len() && img == all, || format!("Phi not bijective at l = {l}"))?;
    }
    Ok(())
}

fn c6_operators() -> Outcome {
    for l in 1..=6 {
        for ns in degree_tuples(l, 3) {
            let a = symbols(&ns);
            ensure(left_rec(&a) == left_closed(&a), || format!("L at {ns:?}"))?;
            ensure(right_rec(&a) == right_closed(&a), || format!("R at {ns:?}"))?;
        }
    }
    for l in 0..=4 {
        let bad = OperatorIdentity::LR.check(l, 2).map_err(|e| e.to_string())?;
        ensure(bad.is_none(), || format!("LR at {bad:?}"))?;
    }
    for l in 2..=4 {
        let bad = OperatorIdentity::Re1.check(l, 2).map_err(|e| e.to_string())?;
        ensure(bad.is_none(), || format!("Re1 at {bad:?}"))?;
    }
    for l in 0..=4 {
        for ns in degree_tuples(l + 1, 2) {
            let a = symbols(&ns);
            let lhs = a[0].triangle(&right_rec(&a[1..]));
            ensure(lhs == product(&a).scale(&lagrange_d(&ns[..l])), || format!("d at {ns:?}"))?;
            for e in bit_sequences(l) {
                ensure(re3_scalar_holds(&e, &ns).unwrap(), || format!("d^e at {e:?} {ns:?}"))?;
            }
        }
    }
    Ok(())
}

fn c7_witnesses() -> Outcome {
    for name in WITNESSES {
        let r = witness(name).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{r}"))?;
    }
    Ok(())
}

fn c8_coassociator() -> Outcome {
    for n in 1..=4 {
        ensure(coassociator_fold1(Flavor::FdB, n).unwrap().is_zero(), || format!("(id⊔μ)K(x{n}) != 0"))?;
    }
    let f1 = coassociator_fold1(Flavor::FdB, 5).unwrap();
    ensure(f1 == p("x1*y2*y1^2 - x1*y1*y2*y1"), || format!("(id⊔μ)K(x5) = {f1}"))?;
    let f2 = coassociator_fold2(Flavor::FdB, 5).unwrap();
    ensure(f2 == p("x1*x2*x1^2 - x1^2*x2*x1"), || format!("μ(id⊔μ)K(x5) = {f2}"))
}

fn c9_projection() -> Outcome {
    for n in 1..=6 {
        let d = projected_coproduct(Flavor::FdB, n).unwrap();
        ensure(pi_iota_roundtrip(&d).unwrap(), || format!("π∘ι at x{n}"))?;
        let (l, r) = projected_coassociativity(Flavor::FdB, n).unwrap();
        ensure(l == r, || format!("Δ^⊗ not coassociative at x{n}"))?;
        ensure(compare_nc_hopf(n).unwrap(), || format!("Δ^⊗ != Δ^nc at x{n}"))?;
    }
    Ok(())
}

fn c10_element_loops() -> Outcome {
    let moufang = [Identity::Moufang1, Identity::Moufang2, Identity::Moufang3, Identity::Moufang4];
    let mut rng = random::rng(0x10);
    for _ in 0..25 {
        let [a, b, c] = [0, 1, 2].map(|_| random::unit_cd(&mut rng, 3));
        for id in moufang {
            ensure(id.holds(&a, &b, &c), || format!("{id} fails on octonions {a}, {b}, {c}"))?;
        }
    }
    let (a, b, c) = (CdElement::units(4, &[1, 10]), CdElement::basis(4, 2), CdElement::basis(4, 12));
    for id in moufang {
        ensure(!id.holds(&a, &b, &c), || format!("{id} holds on the sedenion witness"))?;
    }
    for _ in 0..25 {
        let (x, y) = (random::ucd_zorn(&mut rng), random::ucd_zorn(&mut rng));
        let r = cancellation(ElementLoop::Ucd, &x, &y).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("U_CD(M_2(Q)) cancellation fails on {x:?}, {y:?}"))?;
    }
    let w = witness("ucd-not-loop").map_err(|e| e.to_string())?;
    ensure(w.passed(), || format!("{w}"))?;
    let hq = hq_loop_axioms();
    ensure(hq.is_loop() && hq.non_associative_triple.is_some(), || format!("{hq:?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 10] = [
        ("printed expansion goldens", c1_goldens, 1),
        ("coloop axiom sweep", c2_sweep, 60),
        ("antipode", c3_antipode, 30),
        ("oracle equivalence", c4_oracles, 60),
        ("coefficient combinatorics", c5_combinatorics, 30),
        ("operator identities", c6_operators, 120),
        ("counterexamples", c7_witnesses, 5),
        ("FdB coassociator", c8_coassociator, 10),
        ("projection to the Hopf algebra", c9_projection, 10),
        ("element loops", c10_element_loops, 10),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let slow = if took > Duration::from_secs(budget) { format!(" (over {budget}s budget)") } else { String::new() };
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} [{:.2}s]{slow}", i + 1, took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{:.2}s]: {why}", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
