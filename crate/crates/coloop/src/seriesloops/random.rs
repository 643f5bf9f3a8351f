use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebras::{CdElement, Doubled, Matrix, SymplecticM2};
use crate::{q, qr, Q};

pub use rand::SeedableRng;

/// The generator behind every randomized check.
pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `n/d` with `|n| ≤ 3`, `1 ≤ d ≤ 3`.
pub fn small_q(rng: &mut SeededRng) -> Q {
    qr(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn small_int(rng: &mut SeededRng) -> Q {
    q(rng.gen_range(-3..=3))
}

pub fn matrix_q(rng: &mut SeededRng, n: usize) -> Matrix<Q> {
    Matrix::from_fn(n, |_, _| small_q(rng))
}

pub fn diagonal_q(rng: &mut SeededRng, n: usize) -> Matrix<Q> {
    Matrix::from_fn(n, |i, j| if i == j { small_q(rng) } else { q(0) })
}

/// Integer coordinates in `-3..=3`.
pub fn cd_element(rng: &mut SeededRng, level: u32) -> CdElement {
    CdElement::from_coords((0..1usize << level).map(|_| small_int(rng)).collect()).expect("power of two")
}

/// Nonzero pure imaginary element with integer coordinates.
pub fn pure_imaginary(rng: &mut SeededRng, level: u32) -> CdElement {
    loop {
        let mut c: Vec<Q> = (0..1usize << level).map(|_| small_int(rng)).collect();
        c[0] = q(0);
        let x = CdElement::from_coords(c).expect("power of two");
        if x.sum_sq() != q(0) {
            return x;
        }
    }
}

/// Unit-norm element via the Cayley transform.
pub fn unit_cd(rng: &mut SeededRng, level: u32) -> CdElement {
    super::cayley_unit(&pure_imaginary(rng, level)).expect("1 - p is invertible for pure p")
}

/// Pythagorean pairs `(c, s)` with `c² + s² = 1`.
const PYTHAGOREAN: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)];

pub fn rational_angle(rng: &mut SeededRng) -> (Q, Q) {
    let (a, b, c) = PYTHAGOREAN[rng.gen_range(0..PYTHAGOREAN.len())];
    let (x, y) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
    let sx = if rng.gen_bool(0.5) { 1 } else { -1 };
    (qr(sx * x, c), qr(y, c))
}

/// `U = D_1 R D_2` with `D_i` diagonal of unit quaternions and `R` a rational
/// rotation, so that `U U* = 1` for the conjugate transpose.
pub fn unitary_quaternion_matrix(rng: &mut SeededRng) -> Matrix<CdElement> {
    let d1 = [unit_cd(rng, 2), unit_cd(rng, 2)];
    let d2 = [unit_cd(rng, 2), unit_cd(rng, 2)];
    let (c, s) = rational_angle(rng);
    let scal = |x: &Q| CdElement::scalar(2, x.clone());
    let r = Matrix::from_rows(vec![vec![scal(&c), scal(&-s.clone())], vec![scal(&s), scal(&c)]]).expect("2x2");
    let diag = |d: &[CdElement; 2]| {
        Matrix::from_fn(2, |i, j| if i == j { d[i].clone() } else { CdElement::zero(2) })
    };
    diag(&d1).mul(&r).and_then(|m| m.mul(&diag(&d2))).expect("2x2")
}

/// An element `c U_1 + s U_2 j` of `U_CD(M_2(H))`.
pub fn ucd_quaternion_matrix(rng: &mut SeededRng) -> Doubled<Matrix<CdElement>> {
    let (c, s) = rational_angle(rng);
    let u1 = unitary_quaternion_matrix(rng);
    let u2 = unitary_quaternion_matrix(rng);
    Doubled::new(u1.map(|x| x.scale_q(&c)), u2.map(|x| x.scale_q(&s)))
}

/// An element of `M_2(Q)` with `det = 1`: a product of elementary shears.
pub fn sl2_q(rng: &mut SeededRng) -> Matrix<Q> {
    let upper = Matrix::from_rows(vec![vec![q(1), small_q(rng)], vec![q(0), q(1)]]).expect("2x2");
    let lower = Matrix::from_rows(vec![vec![q(1), q(0)], vec![small_q(rng), q(1)]]).expect("2x2");
    let k = small_q(rng);
    let k = if k == q(0) { q(2) } else { k };
    let diag = Matrix::from_rows(vec![vec![k.clone(), q(0)], vec![q(0), q(1) / k]]).expect("2x2");
    upper.mul(&lower).and_then(|m| m.mul(&diag)).expect("2x2")
}

/// An element of `U_CD(M_2(Q))` for the symplectic involution (the split
/// octonions): `c g_1 + s g_2 j` with `det g_i = 1`, so
/// `det(c g_1) + det(s g_2) = c² + s² = 1`.
pub fn ucd_zorn(rng: &mut SeededRng) -> Doubled<SymplecticM2<Q>> {
    let (c, s) = rational_angle(rng);
    let g1 = sl2_q(rng).map(|x| x * &c);
    let g2 = sl2_q(rng).map(|x| x * &s);
    Doubled::new(SymplecticM2(g1), SymplecticM2(g2))
}
