use std::cell::RefCell;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{compositions, m_sequences, m_sequences_labeled};
use crate::{Error, Z};

thread_local! {
    static PASCAL: RefCell<Vec<Vec<Z>>> = RefCell::new(vec![vec![Z::one()]]);
}

/// `binom(n, k)`, zero when `k > n`. Rows are memoized per thread.
pub fn binom(n: u32, k: u32) -> Z {
    if k > n {
        return Z::zero();
    }
    PASCAL.with(|p| {
        let mut rows = p.borrow_mut();
        while rows.len() <= n as usize {
            let prev = rows.last().expect("row 0");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(Z::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(Z::one());
            rows.push(row);
        }
        rows[n as usize][k as usize].clone()
    })
}

fn binom_product(ns: &[u32], m: &[u32]) -> Z {
    ns.iter().zip(m).map(|(&n, &mi)| binom(n + 1, mi)).product()
}

/// `d_ℓ(n_1,…,n_ℓ) = Σ_{m∈M_ℓ} Π binom(n_i+1, m_i)`, with `d_0 = 1`.
pub fn lagrange_d(ns: &[u32]) -> Z {
    if ns.is_empty() {
        return Z::one();
    }
    m_sequences(ns.len()).iter().map(|m| binom_product(ns, m)).sum()
}

/// The labeled coefficient `d_ℓ^e`: the same sum restricted to `M_ℓ^e`.
pub fn lagrange_d_labeled(e: &[u8], ns: &[u32]) -> Z {
    assert_eq!(e.len(), ns.len(), "bit sequence and degrees differ in length");
    if ns.is_empty() {
        return Z::one();
    }
    m_sequences_labeled(e).iter().map(|m| binom_product(ns, m)).sum()
}

/// Alternating recursion:
/// `d_ℓ = Σ_{i<ℓ} (−1)^{ℓ−1−i} binom(n_1+⋯+n_{i+1}+1, ℓ−i) d_i(n_1..n_i)`.
pub fn d_alt_sign(ns: &[u32]) -> Z {
    let l = ns.len();
    if l == 0 {
        return Z::one();
    }
    let mut acc = Z::zero();
    for i in 0..l {
        let s: u32 = ns[..=i].iter().sum();
        let t = binom(s + 1, (l - i) as u32) * lagrange_d(&ns[..i]);
        if (l - 1 - i) % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// Product recursion over compositions `p ∈ C_ℓ^j`:
/// `d_ℓ = Σ binom(n_1+1, j) Π_i d_{p_i−1}(n_{P_{i−1}+2}, …, n_{P_i})`.
pub fn d_product(ns: &[u32]) -> Z {
    let l = ns.len();
    if l == 0 {
        return Z::one();
    }
    let mut acc = Z::zero();
    for j in 1..=l {
        for p in compositions(l as u32, j) {
            let mut term = binom(ns[0] + 1, j as u32);
            let mut start = 0usize;
            for &pi in &p {
                let pi = pi as usize;
                term *= lagrange_d(&ns[start + 1..start + pi]);
                start += pi;
            }
            acc += term;
        }
    }
    acc
}

/// Shift recursion:
/// `d_ℓ = Σ_{i=1}^{ℓ} (−1)^{i−1} binom(n_1+1, i) d_{ℓ−i}(n_1+⋯+n_{i+1}, n_{i+2}, …, n_ℓ)`.
pub fn d_shift(ns: &[u32]) -> Z {
    let l = ns.len();
    if l == 0 {
        return Z::one();
    }
    let mut acc = Z::zero();
    for i in 1..=l {
        let inner = if i == l {
            Z::one()
        } else {
            let mut args = vec![ns[..=i].iter().sum::<u32>()];
            args.extend_from_slice(&ns[i + 1..]);
            lagrange_d(&args)
        };
        let t = binom(ns[0] + 1, i as u32) * inner;
        if (i - 1) % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DRecurrence {
    AltSign,
    Product,
    Shift,
}

impl DRecurrence {
    pub const ALL: [DRecurrence; 3] = [DRecurrence::AltSign, DRecurrence::Product, DRecurrence::Shift];

    pub fn eval(self, ns: &[u32]) -> Z {
        match self {
            DRecurrence::AltSign => d_alt_sign(ns),
            DRecurrence::Product => d_product(ns),
            DRecurrence::Shift => d_shift(ns),
        }
    }
}

impl fmt::Display for DRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DRecurrence::AltSign => "alt-sign",
            DRecurrence::Product => "product",
            DRecurrence::Shift => "shift",
        })
    }
}

impl FromStr for DRecurrence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        DRecurrence::ALL
            .into_iter()
            .find(|r| r.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown recurrence {s:?}")))
    }
}

/// True when the recurrence reproduces the direct sum at `ns`.
pub fn d_recurrence_check(variant: DRecurrence, ns: &[u32]) -> bool {
    variant.eval(ns) == lagrange_d(ns)
}
