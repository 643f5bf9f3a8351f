use coloop::algebras::{CdElement, Doubled, Matrix, SymplecticM2};
use coloop::coloops::{Kind, Side};
use coloop::freealg::NcPoly;
use coloop::seriesloops::random::{self, SeededRng};
use coloop::seriesloops::*;
use coloop::{q, Involutive, MatQ, Ring, Q};
use proptest::prelude::*;

fn symbolic(flavor: SeriesFlavor, order: u32, letter: fn(u32) -> NcPoly) -> TruncatedSeries<NcPoly> {
    TruncatedSeries::new(flavor, (1..=order).map(letter).collect()).unwrap()
}

fn p(s: &str) -> NcPoly {
    NcPoly::parse(s).unwrap()
}

fn random_series(rng: &mut SeededRng, flavor: SeriesFlavor, order: usize, dim: usize) -> TruncatedSeries<MatQ> {
    TruncatedSeries::new(flavor, (0..order).map(|_| random::matrix_q(rng, dim)).collect()).unwrap()
}

#[test]
fn composition_low_degrees() {
    let a = symbolic(SeriesFlavor::Diff, 3, NcPoly::x);
    let b = symbolic(SeriesFlavor::Diff, 3, NcPoly::y);
    let c = diff_compose(&a, &b).unwrap();
    assert_eq!(c.coeff(1), p("x1 + y1"));
    assert_eq!(c.coeff(2), p("x2 + y2 + 2*x1*y1"));
    assert_eq!(c.coeff(3), p("x3 + y3 + 3*x2*y1 + 2*x1*y2 + x1*y1^2"));
    assert_eq!(diff_compose_binomial(&a, &b).unwrap(), c);
}

#[test]
fn composition_forms_agree_symbolically() {
    let a = symbolic(SeriesFlavor::Diff, 7, NcPoly::x);
    let b = symbolic(SeriesFlavor::Diff, 7, NcPoly::y);
    assert_eq!(diff_compose(&a, &b).unwrap(), diff_compose_binomial(&a, &b).unwrap());
}

#[test]
fn convolution_matches_product() {
    for flavor in [SeriesFlavor::Inv, SeriesFlavor::Diff] {
        let a = symbolic(flavor, 7, NcPoly::x);
        let b = symbolic(flavor, 7, NcPoly::y);
        let ab = loop_mul(&a, &b).unwrap();
        for n in 1..=7 {
            assert_eq!(convolution_eval(Kind::Delta, &a, &b, n).unwrap(), ab.coeff(n), "{flavor} n={n}");
        }
    }
}

#[test]
fn printed_division_coefficients() {
    let a = symbolic(SeriesFlavor::Diff, 3, NcPoly::x);
    let b = symbolic(SeriesFlavor::Diff, 3, NcPoly::y);
    let r = divide(Side::Right, Mode::Recursive, &a, &b).unwrap();
    assert_eq!(
        r.coeff(3),
        p("x3 - 2*x1*y2 - 3*x2*y1 + 5*x1*y1^2 - y3 + 2*y1*y2 + 3*y2*y1 - 5*y1^3")
    );
    let l = divide(Side::Left, Mode::Recursive, &a, &b).unwrap();
    assert_eq!(
        l.coeff(3),
        p("y3 - 2*x1*y2 - 3*x2*y1 + 5*x1^2*y1 + x1*y1*x1 - x1*y1^2 - x3 + 2*x1*x2 + 3*x2*x1 - 5*x1^3")
    );
    let a = symbolic(SeriesFlavor::Inv, 2, NcPoly::x);
    let b = symbolic(SeriesFlavor::Inv, 2, NcPoly::y);
    let l = divide(Side::Left, Mode::Recursive, &a, &b).unwrap();
    assert_eq!(l.coeff(2), p("y2 - x1*y1 - x2 + x1*x1"));
}

#[test]
fn recursive_equals_closed_symbolically() {
    for flavor in [SeriesFlavor::Inv, SeriesFlavor::Diff] {
        let a = symbolic(flavor, 7, NcPoly::x);
        let b = symbolic(flavor, 7, NcPoly::y);
        for side in [Side::Right, Side::Left] {
            assert_eq!(
                divide(side, Mode::Recursive, &a, &b).unwrap(),
                divide(side, Mode::Closed, &a, &b).unwrap(),
                "{flavor} {side}"
            );
        }
    }
}

#[test]
fn recursive_equals_closed_on_matrices() {
    let mut rng = random::rng(7);
    for flavor in [SeriesFlavor::Inv, SeriesFlavor::Diff] {
        for _ in 0..3 {
            let a = random_series(&mut rng, flavor, 8, 2);
            let b = random_series(&mut rng, flavor, 8, 2);
            for side in [Side::Right, Side::Left] {
                assert_eq!(
                    divide(side, Mode::Recursive, &a, &b).unwrap(),
                    divide(side, Mode::Closed, &a, &b).unwrap()
                );
            }
        }
    }
}

#[test]
fn diff_inverse_matches_antipode() {
    let a = symbolic(SeriesFlavor::Diff, 8, NcPoly::x);
    let inv = diff_inverse(&a).unwrap();
    assert_eq!(inv.coeff(1), p("-x1"));
    assert_eq!(inv.coeff(2), p("-x2 + 2*x1^2"));
    assert_eq!(inv.coeff(3), p("-x3 + 2*x1*x2 + 3*x2*x1 - 5*x1^3"));
    let e = TruncatedSeries::unit(SeriesFlavor::Diff, 8, &NcPoly::zero());
    assert_eq!(diff_compose(&a, &inv).unwrap(), e);
    assert_eq!(diff_compose(&inv, &a).unwrap(), e);
    assert_eq!(series_inverse(Side::Right, &a).unwrap(), inv);
    assert_eq!(series_inverse(Side::Left, &a).unwrap(), inv);
}

#[test]
fn diff_inverse_of_scalar_series_is_catalan() {
    let a = TruncatedSeries::new(SeriesFlavor::Diff, vec![q(1), q(0), q(0), q(0), q(0)]).unwrap();
    let inv = diff_inverse(&a).unwrap();
    // λ + λ² inverts to the signed Catalan series
    assert_eq!(inv.coeffs(), &[q(-1), q(2), q(-5), q(14), q(-42)]);
}

#[test]
fn commutative_coefficients_give_associative_diff() {
    let mut rng = random::rng(11);
    for _ in 0..3 {
        let s: Vec<_> = (0..3).map(|_| {
            TruncatedSeries::new(SeriesFlavor::Diff, (0..8).map(|_| random::diagonal_q(&mut rng, 2)).collect()).unwrap()
        }).collect();
        let l = diff_compose(&diff_compose(&s[0], &s[1]).unwrap(), &s[2]).unwrap();
        let r = diff_compose(&s[0], &diff_compose(&s[1], &s[2]).unwrap()).unwrap();
        assert_eq!(l, r);
    }
}

#[test]
fn diff_left_division_is_not_inverse_times() {
    // (b\e)∘a and b\a differ as soon as composition is not associative
    let a = symbolic(SeriesFlavor::Diff, 5, NcPoly::x);
    let b = symbolic(SeriesFlavor::Diff, 5, NcPoly::y);
    let via_inverse = diff_compose(&series_inverse(Side::Left, &b).unwrap(), &a).unwrap();
    let direct = divide(Side::Left, Mode::Recursive, &b, &a).unwrap();
    for n in 1..=2 {
        assert_eq!(via_inverse.coeff(n), direct.coeff(n));
    }
    assert_eq!(via_inverse.coeff(3).minus(&direct.coeff(3)), p("y1*y1*x1 - y1*x1*y1"));
}

#[test]
fn diff_left_division_fails_on_matrices() {
    let mut rng = random::rng(17);
    for _ in 0..5 {
        let a = random_series(&mut rng, SeriesFlavor::Diff, 4, 2);
        let b = random_series(&mut rng, SeriesFlavor::Diff, 4, 2);
        let via_inverse = diff_compose(&series_inverse(Side::Left, &b).unwrap(), &a).unwrap();
        assert_ne!(via_inverse, divide(Side::Left, Mode::Recursive, &b, &a).unwrap());
    }
}

#[test]
fn octonion_inverse_loop_division() {
    let mut rng = random::rng(21);
    // n(x) = 4
    let x = CdElement::units(3, &[0, 1, 2, 3]);
    assert_eq!(norm(&x), Some(q(4)));
    for _ in 0..50 {
        let y = random::cd_element(&mut rng, 3);
        let l = element_loop_div(ElementLoop::I, Side::Left, &x, &y).unwrap();
        assert_eq!(x.times(&l), y);
        let r = element_loop_div(ElementLoop::I, Side::Right, &x, &y).unwrap();
        assert_eq!(r.times(&x), y);
    }
}

#[test]
fn cancellation_laws_symbolic() {
    for flavor in [SeriesFlavor::Inv, SeriesFlavor::Diff] {
        let a = symbolic(flavor, 6, NcPoly::x);
        let b = symbolic(flavor, 6, NcPoly::y);
        for (law, ok) in cancellation_laws(&a, &b).unwrap() {
            assert!(ok, "{flavor}: {law}");
        }
    }
}

#[test]
fn inv_divisions_over_sedenion_matrices() {
    let mut rng = random::rng(3);
    let sed = |rng: &mut SeededRng| Matrix::from_fn(2, |_, _| random::cd_element(rng, 4));
    let a = TruncatedSeries::new(SeriesFlavor::Inv, (0..5).map(|_| sed(&mut rng)).collect()).unwrap();
    let b = TruncatedSeries::new(SeriesFlavor::Inv, (0..5).map(|_| sed(&mut rng)).collect()).unwrap();
    for (law, ok) in cancellation_laws(&a, &b).unwrap() {
        assert!(ok, "{law}");
    }
    for side in [Side::Right, Side::Left] {
        assert_eq!(
            divide(side, Mode::Recursive, &a, &b).unwrap(),
            divide(side, Mode::Closed, &a, &b).unwrap()
        );
    }
}

#[test]
fn mismatched_series_are_rejected() {
    let a = symbolic(SeriesFlavor::Diff, 3, NcPoly::x);
    let b = symbolic(SeriesFlavor::Diff, 4, NcPoly::y);
    assert!(diff_compose(&a, &b).is_err());
    let c = symbolic(SeriesFlavor::Inv, 3, NcPoly::y);
    assert!(loop_mul(&a, &c).is_err());
    assert!(TruncatedSeries::<Q>::new(SeriesFlavor::Inv, vec![]).is_err());
}

#[test]
fn octonion_units_form_a_moufang_loop() {
    let mut rng = random::rng(5);
    for _ in 0..20 {
        let [x, y, z] = [0, 1, 2].map(|_| random::unit_cd(&mut rng, 3));
        assert!(is_member(ElementLoop::U, &x));
        let r = cancellation(ElementLoop::U, &x, &y).unwrap();
        assert!(r.holds());
        // x(y(xz)) = ((xy)x)z
        assert_eq!(x.times(&y.times(&x.times(&z))), x.times(&y).times(&x).times(&z));
    }
}

#[test]
fn sedenion_inverse_loop_breaks_cancellation() {
    let a = CdElement::units(4, &[1, 10]);
    let b = CdElement::units(4, &[5, 14]);
    let r = cancellation(ElementLoop::I, &a, &b).unwrap();
    assert!(!r.left_cancels);
}

#[test]
fn zorn_ucd_cancels() {
    let mut rng = random::rng(9);
    for _ in 0..20 {
        let x = random::ucd_zorn(&mut rng);
        let y = random::ucd_zorn(&mut rng);
        assert!(is_member(ElementLoop::Ucd, &x));
        let r = cancellation(ElementLoop::Ucd, &x, &y).unwrap();
        assert!(r.holds(), "{x:?} {y:?}");
    }
}

#[test]
fn quaternion_matrix_ucd_has_unitary_samples() {
    let mut rng = random::rng(13);
    for _ in 0..10 {
        let u = random::unitary_quaternion_matrix(&mut rng);
        assert_eq!(u.times(&u.conj()), u.one_like());
        let x = random::ucd_quaternion_matrix(&mut rng);
        assert!(is_member(ElementLoop::Ucd, &x));
    }
}

#[test]
fn element_division_domain_errors() {
    let zero = Doubled::new(SymplecticM2(MatQ::identity(2, &q(0))), SymplecticM2(MatQ::identity(2, &q(0))));
    assert!(conj_inverse(ElementLoop::Ucd, &zero).is_err());
    assert!(conj_inverse(ElementLoop::I, &q(0)).is_err());
    assert_eq!(conj_inverse(ElementLoop::I, &q(4)).unwrap(), coloop::qr(1, 4));
    assert!(cayley_unit(&CdElement::one(2)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cancellation_laws_on_matrices(seed in any::<u64>(), diff in any::<bool>()) {
        let flavor = if diff { SeriesFlavor::Diff } else { SeriesFlavor::Inv };
        let mut rng = random::rng(seed);
        let a = random_series(&mut rng, flavor, 10, 2);
        let b = random_series(&mut rng, flavor, 10, 2);
        for (law, ok) in cancellation_laws(&a, &b).unwrap() {
            prop_assert!(ok, "{}", law);
        }
    }

    #[test]
    fn cancellation_laws_on_3x3_matrices(seed in any::<u64>(), diff in any::<bool>()) {
        let flavor = if diff { SeriesFlavor::Diff } else { SeriesFlavor::Inv };
        let mut rng = random::rng(seed);
        let a = random_series(&mut rng, flavor, 6, 3);
        let b = random_series(&mut rng, flavor, 6, 3);
        for (law, ok) in cancellation_laws(&a, &b).unwrap() {
            prop_assert!(ok, "{}", law);
        }
    }

    #[test]
    fn unit_is_neutral(seed in any::<u64>(), diff in any::<bool>()) {
        let flavor = if diff { SeriesFlavor::Diff } else { SeriesFlavor::Inv };
        let mut rng = random::rng(seed);
        let a = random_series(&mut rng, flavor, 6, 2);
        let e = TruncatedSeries::unit(flavor, 6, &a.coeff(1));
        prop_assert_eq!(loop_mul(&a, &e).unwrap(), a.clone());
        prop_assert_eq!(loop_mul(&e, &a).unwrap(), a);
    }

    #[test]
    fn cayley_transform_has_unit_norm(seed in any::<u64>(), level in 1u32..=3) {
        let mut rng = random::rng(seed);
        let u = random::unit_cd(&mut rng, level);
        prop_assert_eq!(norm(&u), Some(q(1)));
    }
}

#[test]
fn all_witnesses_reproduce() {
    for name in WITNESSES {
        let r = witness(name).unwrap();
        assert!(r.passed(), "{r}");
        assert!(!r.assertions.is_empty());
    }
    assert!(witness("nope").is_err());
}

#[test]
fn witness_reports_serialize() {
    let r = witness("diff-power-assoc").unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["name"], "diff-power-assoc");
    assert!(v["assertions"].as_array().unwrap().iter().all(|a| a["holds"] == true));
    assert_eq!(witness("ucd-not-loop").unwrap().seed, Some(UCD_SEED));
}

#[test]
fn diff_right_division_through_inverse() {
    let a = symbolic(SeriesFlavor::Diff, 6, NcPoly::x);
    let b = symbolic(SeriesFlavor::Diff, 6, NcPoly::y);
    let via = diff_compose(&a, &series_inverse(Side::Right, &b).unwrap()).unwrap();
    assert_eq!(via, divide(Side::Right, Mode::Recursive, &a, &b).unwrap());
}
