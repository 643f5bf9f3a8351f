use coloop::algebras::{hq_loop_axioms, parse_cd, CdElement, Doubled, HqBasis, HqUnit, Identity, Matrix};
use coloop::{q, Involutive, Ring, Q};
use proptest::prelude::*;

fn e(level: u32, i: usize) -> CdElement {
    CdElement::basis(level, i)
}

#[test]
fn quaternion_table() {
    assert_eq!(e(2, 1).times(&e(2, 2)), e(2, 3));
    assert_eq!(e(2, 2).times(&e(2, 1)), e(2, 3).negate());
    assert_eq!(e(2, 1).times(&e(2, 1)), CdElement::one(2).negate());
}

#[test]
fn sedenion_zero_divisor() {
    let a = CdElement::units(4, &[1, 10]);
    let b = CdElement::units(4, &[5, 14]);
    assert!(a.times(&b).vanishes());
    assert_eq!(b.times(&b), CdElement::scalar(4, q(-2)));
    assert_eq!(a.norm() * b.norm(), q(4));
    assert_eq!(a.times(&b).norm(), q(0));
}

#[test]
fn level_mismatch_is_an_error() {
    assert!(e(2, 1).mul(&e(3, 1)).is_err());
}

#[test]
fn conj_and_norm() {
    assert_eq!(e(3, 1).conj(), e(3, 1).negate());
    let x = parse_cd("1 + e1", 2).unwrap();
    assert_eq!(x.norm(), q(2));
}

#[test]
fn conjugation_is_involutive_anti_automorphism() {
    for level in 0..=4 {
        let n = 1usize << level;
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (e(level, i), e(level, j));
                assert_eq!(a.conj().conj(), a);
                assert_eq!(a.times(&b).conj(), b.conj().times(&a.conj()));
            }
        }
    }
}

#[test]
fn associativity_and_alternativity_by_level() {
    for level in 0..=3u32 {
        let n = 1usize << level;
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (e(level, i), e(level, j));
                assert!(Identity::LeftAlternative.holds(&a, &b, &b));
                assert!(Identity::RightAlternative.holds(&a, &b, &b));
                for k in 0..n {
                    let c = e(level, k);
                    if level <= 2 {
                        assert!(Identity::Associative.holds(&a, &b, &c));
                    }
                }
            }
        }
    }
    let a = CdElement::units(4, &[1, 10]);
    let b = CdElement::units(4, &[5, 14]);
    assert!(!Identity::RightAlternative.holds(&a, &b, &b));
    assert!(!Identity::LeftAlternative.holds(&b, &a, &a));
}

#[test]
fn moufang_first_needs_ac_inner_product() {
    // a(b(ca)) = ((ab)a)c is not an octonion identity; a(b(ac)) is.
    let (a, b, c) = (e(3, 7).negate(), e(3, 7), e(3, 6));
    let lhs = a.times(&b.times(&c.times(&a)));
    assert_ne!(lhs, a.times(&b).times(&a).times(&c));
    assert!(Identity::Moufang1.holds(&a, &b, &c));
}

#[test]
fn octonions_are_not_associative() {
    let (a, b, c) = (e(3, 1), e(3, 2), e(3, 4));
    assert!(!Identity::Associative.holds(&a, &b, &c));
}

#[test]
fn norm_is_scalar_through_octonions() {
    for level in 0..=3u32 {
        for i in 0..(1usize << level) {
            let x = e(level, i).plus(&CdElement::one(level));
            let p = x.times(&x.conj());
            assert!(p.is_scalar());
            assert_eq!(p, x.conj().times(&x));
            assert_eq!(*p.re(), x.sum_sq());
        }
    }
}

#[test]
fn doubling_matches_next_level() {
    for i in 0..16 {
        for j in 0..16 {
            let (x, y) = (e(4, i), e(4, j));
            let (xp, xq) = x.halves();
            let (yp, yq) = y.halves();
            let d = Doubled::new(xp, xq).times(&Doubled::new(yp, yq));
            assert_eq!(CdElement::from_halves(&d.p, &d.q).unwrap(), x.times(&y));
        }
    }
}

#[test]
fn doubled_rationals_unit_times_j() {
    let one = Doubled::new(q(1), q(0));
    let j = Doubled::j(&q(1));
    assert_eq!(one.times(&j), j);
    assert_eq!(j.times(&j), Doubled::lift(q(-1)));
}

#[test]
fn doubled_matrices_expand_by_hand() {
    let m = |r: [[i64; 2]; 2]| Matrix::from_rows(r.iter().map(|row| row.iter().map(|&v| q(v)).collect()).collect()).unwrap();
    let (a, b, c, d) = (m([[1, 2], [3, 4]]), m([[0, 1], [1, 1]]), m([[2, 0], [1, -1]]), m([[1, -1], [0, 2]]));
    let prod = Doubled::new(a, b).times(&Doubled::new(c, d));
    // hand expansion with transpose involution
    assert_eq!(prod.p, m([[4, -2], [10, -4]]).minus(&m([[0, 1], [2, 1]])));
    assert_eq!(prod.q, m([[-2, -2], [6, 8]]).plus(&m([[0, -1], [2, 0]])));
}

#[test]
fn hq_table_and_loop() {
    let i = HqUnit::new(false, HqBasis::I);
    let j = HqUnit::new(false, HqBasis::J);
    let k = HqUnit::new(false, HqBasis::K);
    assert_eq!(i.mul(j), k);
    assert_eq!(j.mul(i), HqUnit::new(true, HqBasis::K));
    assert_eq!(i.mul(i), HqUnit::ONE);
    let r = hq_loop_axioms();
    assert!(r.is_loop());
    assert!(!r.associative);
    let (x, y, z) = r.non_associative_triple.unwrap();
    assert_ne!(x.mul(y).mul(z), x.mul(y.mul(z)));
}

#[test]
fn cd_text_round_trip() {
    let x = parse_cd("e1 + e10", 4).unwrap();
    assert_eq!(x, CdElement::units(4, &[1, 10]));
    assert_eq!(x.to_string(), "e1 + e10");
    let y = parse_cd("3 - 1/2*e5", 3).unwrap();
    assert_eq!(y.to_string(), "3 - 1/2*e5");
    assert_eq!(parse_cd(&y.to_string(), 3).unwrap(), y);
    assert!(parse_cd("e17", 4).is_err());
    assert!(parse_cd("e1 +", 4).is_err());
}

fn small_q() -> impl Strategy<Value = Q> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| coloop::qr(n, d))
}

fn cd(level: u32) -> impl Strategy<Value = CdElement> {
    proptest::collection::vec(small_q(), 1usize << level).prop_map(|c| CdElement::from_coords(c).unwrap())
}

proptest! {
    #[test]
    fn octonion_moufang(a in cd(3), b in cd(3), c in cd(3)) {
        for id in [Identity::Moufang1, Identity::Moufang2, Identity::Moufang3, Identity::Moufang4, Identity::Flexible] {
            prop_assert!(id.holds(&a, &b, &c));
        }
    }

    #[test]
    fn sedenion_power_associative(a in cd(4)) {
        prop_assert!(Identity::PowerAssoc3.holds(&a, &a, &a));
    }

    #[test]
    fn matrices_over_quaternions_associate(
        x in proptest::collection::vec(cd(2), 4),
        y in proptest::collection::vec(cd(2), 4),
        z in proptest::collection::vec(cd(2), 4),
    ) {
        let m = |v: Vec<CdElement>| Matrix::from_rows(vec![v[..2].to_vec(), v[2..].to_vec()]).unwrap();
        let (a, b, c) = (m(x), m(y), m(z));
        prop_assert!(coloop::algebras::associator(&a, &b, &c).vanishes());
        prop_assert_eq!(a.times(&b).conj(), b.conj().times(&a.conj()));
    }

    #[test]
    fn octonion_inverse(a in cd(3)) {
        prop_assume!(!a.vanishes());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.times(&inv), CdElement::one(3));
    }
}
