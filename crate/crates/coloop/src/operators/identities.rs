use std::fmt;
use std::str::FromStr;

use super::recursive::*;
use super::GradedTensorPoly as T;
use crate::combinatorics::{binom, bit_sequences, lagrange_d, lagrange_d_labeled, m_sequences};
use crate::{Error, Result};

/// The operator identities available as symbolic checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum OperatorIdentity {
    /// `a_1 ▷ R_ℓ(a_2..a_{ℓ+1}) = L_ℓ(a_1..a_ℓ) ▷ a_{ℓ+1}`
    LR,
    /// `a_1 ▷ R^ℓ_m(a_2..a_{ℓ+1}) = Π binom(n_i+1, m_i) a_1⋯a_{ℓ+1}` for every
    /// `m ∈ M_ℓ`, and the sum over `M_ℓ` carries `d_ℓ`.
    R1,
    /// `a_1 ▷ R_ℓ = Σ_{i<ℓ} (−1)^{ℓ−1−i} (a_1 ▷ R_i(a_2..a_{i+1})) ▷ (a_{i+2} ⊗ ⋯ ⊗ a_{ℓ+1})`
    R2,
    /// `a_1 ▷ R_ℓ = Σ_{i=1}^{ℓ} (−1)^{i−1} (a_1 ▷ (a_2 ⊗ ⋯ ⊗ a_{i+1})) ▷ R_{ℓ−i}(a_{i+2}..a_{ℓ+1})`
    R3,
    /// `L_ℓ = Σ_{i=1}^{ℓ−1} (−1)^{i−1} L_{ℓ−i}(a_1 ▷ (a_2 ⊗ ⋯ ⊗ a_{i+1}), a_{i+2}, …) + (−1)^{ℓ−1} a_1 ⊗ ⋯ ⊗ a_ℓ`
    L3,
    /// `R^e_ℓ = R^{(e_1)}_1(a_1) ▷ R^{(e_2..)}_{ℓ−1}(a_2..) + Σ_i R^{(e_1..e_i)}_i(a_1..a_i) ⊗ (a_{i+1} ▷ R^{(e_{i+2}..)}_{ℓ−i−1}(a_{i+2}..))`
    Re1,
}

impl OperatorIdentity {
    pub const ALL: [OperatorIdentity; 6] = [
        OperatorIdentity::LR,
        OperatorIdentity::R1,
        OperatorIdentity::R2,
        OperatorIdentity::R3,
        OperatorIdentity::L3,
        OperatorIdentity::Re1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorIdentity::LR => "LR",
            OperatorIdentity::R1 => "R1",
            OperatorIdentity::R2 => "R2",
            OperatorIdentity::R3 => "R3",
            OperatorIdentity::L3 => "L3",
            OperatorIdentity::Re1 => "Re1",
        }
    }

    /// Number of generic arguments at level `ℓ`.
    pub fn arity(self, l: usize) -> usize {
        match self {
            OperatorIdentity::LR | OperatorIdentity::R1 | OperatorIdentity::R2 | OperatorIdentity::R3 => l + 1,
            OperatorIdentity::L3 | OperatorIdentity::Re1 => l,
        }
    }

    /// Both sides at one degree assignment (and bit sequence, for `Re1`).
    /// `R1` returns the summed form; per-`m` checks live in [`r1_holds`].
    pub fn sides(self, ns: &[u32], e: Option<&[u8]>) -> Result<(T, T)> {
        let a = symbols(ns);
        let l = ns.len().saturating_sub(self.arity(0));
        if ns.is_empty() || (l == 0 && !matches!(self, OperatorIdentity::LR | OperatorIdentity::R1)) {
            return Err(Error::Invalid(format!("{} needs more arguments", self.name())));
        }
        Ok(match self {
            OperatorIdentity::LR => (a[0].triangle(&right_rec(&a[1..])), left_rec(&a[..l]).triangle(&a[l])),
            OperatorIdentity::R1 => {
                let lhs = a[0].triangle(&right_closed(&a[1..]));
                (lhs, product(&a).scale(&lagrange_d(&ns[..l])))
            }
            OperatorIdentity::R2 => {
                let lhs = a[0].triangle(&right_rec(&a[1..]));
                let mut rhs = T::zero();
                for i in 0..l {
                    let t = a[0].triangle(&right_rec(&a[1..=i])).triangle(&tensor_all(&a[i + 1..]));
                    rhs += &signed(t, (l - 1 - i) % 2 == 1);
                }
                (lhs, rhs)
            }
            OperatorIdentity::R3 => {
                let lhs = a[0].triangle(&right_rec(&a[1..]));
                let mut rhs = T::zero();
                for i in 1..=l {
                    let t = a[0].triangle(&tensor_all(&a[1..=i])).triangle(&right_rec(&a[i + 1..]));
                    rhs += &signed(t, (i - 1) % 2 == 1);
                }
                (lhs, rhs)
            }
            OperatorIdentity::L3 => {
                let lhs = left_rec(&a);
                let mut rhs = signed(tensor_all(&a), (l - 1) % 2 == 1);
                for i in 1..l {
                    let mut args = vec![a[0].triangle(&tensor_all(&a[1..=i]))];
                    args.extend_from_slice(&a[i + 1..]);
                    rhs += &signed(left_rec(&args), (i - 1) % 2 == 1);
                }
                (lhs, rhs)
            }
            OperatorIdentity::Re1 => {
                let e = e.ok_or_else(|| Error::Invalid("Re1 needs a bit sequence".into()))?;
                if l < 2 {
                    return Err(Error::Invalid("Re1 needs at least two arguments".into()));
                }
                let lhs = right_e_rec(e, &a)?;
                let head = if e[0] == 1 { a[0].clone() } else { T::zero() };
                let mut rhs = head.triangle(&right_e_rec(&e[1..], &a[1..])?);
                for i in 1..l {
                    let left = right_e_rec(&e[..i], &a[..i])?;
                    let right = a[i].triangle(&right_e_rec(&e[i + 1..], &a[i + 1..])?);
                    rhs += &left.tensor(&right);
                }
                (lhs, rhs)
            }
        })
    }

    /// Check every degree assignment in `1..=max_degree` (and every bit
    /// sequence for `Re1`). Returns the first failing assignment.
    pub fn check(self, l: usize, max_degree: u32) -> Result<Option<Vec<u32>>> {
        for ns in degree_tuples(self.arity(l), max_degree) {
            let ok = match self {
                OperatorIdentity::Re1 => {
                    let mut ok = true;
                    for e in bit_sequences(l) {
                        let (x, y) = self.sides(&ns, Some(&e))?;
                        ok &= x == y;
                    }
                    ok
                }
                OperatorIdentity::R1 => {
                    let (x, y) = self.sides(&ns, None)?;
                    x == y && r1_holds(&ns)
                }
                _ => {
                    let (x, y) = self.sides(&ns, None)?;
                    x == y
                }
            };
            if !ok {
                return Ok(Some(ns));
            }
        }
        Ok(None)
    }
}

/// Per-sequence form: `a_1 ▷ R^ℓ_m(a_2..a_{ℓ+1}) = Π_{i≤ℓ} binom(n_i+1, m_i) a_1⋯a_{ℓ+1}`.
pub fn r1_holds(ns: &[u32]) -> bool {
    let a = symbols(ns);
    let l = ns.len() - 1;
    let prod = product(&a);
    m_sequences(l).iter().all(|m| {
        let lhs = a[0].triangle(&right_op_m(m, &a[1..]).expect("valid sequence"));
        let k = ns.iter().zip(m).map(|(&n, &mi)| binom(n + 1, mi)).product();
        lhs == prod.scale(&k)
    })
}

/// `a_1 ▷ R^e_ℓ(a_2..a_{ℓ+1}) = d^e_ℓ(n_1..n_ℓ) a_1⋯a_{ℓ+1}`.
pub fn re3_scalar_holds(e: &[u8], ns: &[u32]) -> Result<bool> {
    let a = symbols(ns);
    let l = e.len();
    let lhs = a[0].triangle(&right_e_rec(e, &a[1..])?);
    Ok(lhs == product(&a).scale(&lagrange_d_labeled(e, &ns[..l])))
}

/// `(a ▷ b) ▷ c − a ▷ (b ▷ c)` for generic `a, b, c` of the given degrees.
pub fn triangle_associator(na: u32, nb: u32, nc: u32) -> T {
    let a = symbols(&[na, nb, nc]);
    &a[0].triangle(&a[1]).triangle(&a[2]) - &a[0].triangle(&a[1].triangle(&a[2]))
}

/// All tuples of length `k` over `1..=max`, in lexicographic order.
pub fn degree_tuples(k: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=max).map(move |d| {
                    let mut t = t.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    out
}

impl fmt::Display for OperatorIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OperatorIdentity::ALL
            .into_iter()
            .find(|i| i.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown operator identity {s:?}")))
    }
}
