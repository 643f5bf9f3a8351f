use std::collections::HashMap;

use super::GradedTensorPoly as T;
use crate::combinatorics::{compositions, is_m_sequence, m_sequences, m_sequences_labeled};
use crate::freealg::{Letter, NcPoly};
use crate::{Error, Result};

pub(super) fn signed(t: T, negative: bool) -> T {
    if negative {
        -&t
    } else {
        t
    }
}

pub(super) fn tensor_all(a: &[T]) -> T {
    a.iter().fold(T::one(), |acc, x| acc.tensor(x))
}

/// Independent generic arguments `a_i` of degree `n_i`, one copy label each.
pub fn symbols(ns: &[u32]) -> Vec<T> {
    ns.iter()
        .enumerate()
        .map(|(i, &n)| T::from_poly(&NcPoly::letter(Letter::new(i as u8 + 1, n))).expect("letter is homogeneous"))
        .collect()
}

/// Arguments from homogeneous polynomials.
pub fn args_from_polys(ps: &[NcPoly]) -> Result<Vec<T>> {
    ps.iter().map(T::from_poly).collect()
}

/// `L_ℓ` from its defining recursion
/// `L_ℓ = Σ_{i<ℓ} (−1)^{ℓ−1−i} (L_i(a_1..a_i) ▷ a_{i+1}) ⊗ a_{i+2} ⊗ ⋯ ⊗ a_ℓ`.
pub fn left_rec(a: &[T]) -> T {
    let mut ls = vec![T::one()];
    for l in 1..=a.len() {
        let mut acc = T::zero();
        for i in 0..l {
            let t = ls[i].triangle(&a[i]).tensor(&tensor_all(&a[i + 1..l]));
            acc += &signed(t, (l - 1 - i) % 2 == 1);
        }
        ls.push(acc);
    }
    ls.pop().expect("nonempty")
}

/// `L_ℓ` as the signed sum of the `2^{ℓ−1}` left-parenthesized products
/// mixing `▷` and `⊗`.
pub fn left_closed(a: &[T]) -> T {
    let Some((first, rest)) = a.split_first() else {
        return T::one();
    };
    let mut acc = T::zero();
    for mask in 0u64..1 << rest.len() {
        let mut t = first.clone();
        for (k, x) in rest.iter().enumerate() {
            t = if mask >> k & 1 == 1 { t.tensor(x) } else { t.triangle(x) };
        }
        acc += &signed(t, mask.count_ones() % 2 == 1);
    }
    acc
}

/// `L_ℓ = L_{ℓ−1} ▷ a_ℓ − L_{ℓ−1} ⊗ a_ℓ`.
pub fn left_two_term(a: &[T]) -> T {
    let Some((first, rest)) = a.split_first() else {
        return T::one();
    };
    rest.iter().fold(first.clone(), |l, x| &l.triangle(x) - &l.tensor(x))
}

/// `R_ℓ` from its defining recursion over compositions.
pub fn right_rec(a: &[T]) -> T {
    RightRec { a, e: None, memo: HashMap::new() }.eval(0, a.len())
}

/// The labeled operator `R^e_ℓ` from its defining recursion.
pub fn right_e_rec(e: &[u8], a: &[T]) -> Result<T> {
    check_bits(e, a.len())?;
    Ok(RightRec { a, e: Some(e), memo: HashMap::new() }.eval(0, a.len()))
}

fn check_bits(e: &[u8], l: usize) -> Result<()> {
    if e.len() != l || e.iter().any(|&b| b != 1 && b != 2) {
        return Err(Error::Invalid(format!("bit sequence {e:?} for {l} arguments")));
    }
    Ok(())
}

struct RightRec<'a> {
    a: &'a [T],
    e: Option<&'a [u8]>,
    memo: HashMap<(usize, usize), T>,
}

impl RightRec<'_> {
    /// The operator on `a[lo..hi]`, labeled by `e[lo..hi]`.
    fn eval(&mut self, lo: usize, hi: usize) -> T {
        if lo == hi {
            return T::one();
        }
        if let Some(t) = self.memo.get(&(lo, hi)) {
            return t.clone();
        }
        let l = hi - lo;
        let mut acc = T::zero();
        let first_killed = self.e.is_some_and(|e| e[lo] == 2);
        if !first_killed {
            for j in 1..=l {
                for p in compositions(l as u32, j) {
                    let mut term = T::one();
                    let mut s = lo;
                    for &pi in &p {
                        let end = s + pi as usize;
                        let inner = self.eval(s + 1, end);
                        term = term.tensor(&self.a[s].triangle(&inner));
                        s = end;
                    }
                    acc += &term;
                }
            }
        }
        self.memo.insert((lo, hi), acc.clone());
        acc
    }
}

/// `R^ℓ_m`: nest `▷` and `⊗` in `a_1 ⊗ ⋯ ⊗ a_ℓ` as prescribed by `m ∈ M_ℓ`.
/// `m_1` is the tensor length; `m_i ≠ 0` makes `a_{i−1}` act on a
/// multi-monomial of length `m_i`.
pub fn right_op_m(m: &[u32], a: &[T]) -> Result<T> {
    if m.len() != a.len() || !is_m_sequence(m) {
        return Err(Error::Invalid(format!("{m:?} is not in M_{}", a.len())));
    }
    let mut pos = 0;
    let mut out = T::one();
    for _ in 0..m[0] {
        out = out.tensor(&nest_block(m, a, &mut pos)?);
    }
    if pos != a.len() {
        return Err(Error::Invalid(format!("{m:?} leaves arguments unused")));
    }
    Ok(out)
}

fn nest_block(m: &[u32], a: &[T], pos: &mut usize) -> Result<T> {
    let i = *pos;
    if i >= a.len() {
        return Err(Error::Invalid(format!("{m:?} runs past the arguments")));
    }
    *pos += 1;
    let k = if i + 1 < m.len() { m[i + 1] } else { 0 };
    if k == 0 {
        return Ok(a[i].clone());
    }
    let mut inner = T::one();
    for _ in 0..k {
        inner = inner.tensor(&nest_block(m, a, pos)?);
    }
    Ok(a[i].triangle(&inner))
}

/// `R_ℓ = Σ_{m∈M_ℓ} R^ℓ_m`.
pub fn right_closed(a: &[T]) -> T {
    if a.is_empty() {
        return T::one();
    }
    let mut acc = T::zero();
    for m in m_sequences(a.len()) {
        acc += &right_op_m(&m, a).expect("valid sequence");
    }
    acc
}

/// `R^e_ℓ = Σ_{m∈M^e_ℓ} R^ℓ_m`.
pub fn right_e_closed(e: &[u8], a: &[T]) -> Result<T> {
    check_bits(e, a.len())?;
    if a.is_empty() {
        return Ok(T::one());
    }
    let mut acc = T::zero();
    for m in m_sequences_labeled(e) {
        acc += &right_op_m(&m, a)?;
    }
    Ok(acc)
}

/// The plain product `a_1 ⋯ a_k` of length-one elements.
pub fn product(a: &[T]) -> T {
    let Some((first, rest)) = a.split_first() else {
        return T::one();
    };
    let mut acc = first.clone();
    for x in rest {
        let mut next = T::zero();
        for (fa, ca) in acc.terms() {
            for (fb, cb) in x.terms() {
                next.add_term(vec![fa[0].concat(&fb[0])], ca * cb);
            }
        }
        acc = next;
    }
    acc
}
