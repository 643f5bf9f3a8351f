use crate::Z;

/// `C_n^ℓ`: compositions of `n` into `ℓ` positive parts, first part
/// descending, e.g. `C_3^2 = [(2,1), (1,2)]`. Empty when `ℓ` is out of range.
pub fn compositions(n: u32, l: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if l == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    if (n as usize) < l {
        return out;
    }
    let mut cur = Vec::with_capacity(l);
    comp_rec(n, l, &mut cur, &mut out);
    out
}

fn comp_rec(n: u32, l: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if l == 1 {
        cur.push(n);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for first in (1..=n - (l as u32 - 1)).rev() {
        cur.push(first);
        comp_rec(n - first, l - 1, cur, out);
        cur.pop();
    }
}

/// All compositions of `n`, by increasing length.
pub fn all_compositions(n: u32) -> Vec<Vec<u32>> {
    (1..=n as usize).flat_map(|l| compositions(n, l)).collect()
}

/// Membership in `M_ℓ`: total `ℓ`, every proper prefix sum `m_1+⋯+m_j ≥ j`.
pub fn is_m_sequence(m: &[u32]) -> bool {
    let l = m.len();
    if l == 0 {
        return false;
    }
    let mut s = 0usize;
    for (j, &v) in m.iter().enumerate() {
        s += v as usize;
        if j + 1 < l && s < j + 1 {
            return false;
        }
    }
    s == l
}

/// `M_ℓ` in descending lexicographic order; `M_0` is empty.
pub fn m_sequences(l: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if l == 0 {
        return out;
    }
    let mut cur = Vec::with_capacity(l);
    m_rec(l, 0, &mut cur, &mut out);
    out
}

fn m_rec(l: usize, sum: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let j = cur.len();
    if j == l {
        if sum == l {
            out.push(cur.clone());
        }
        return;
    }
    // after position j+1 the prefix sum must reach j+1 (or l at the end)
    let need = if j + 1 == l { l } else { j + 1 };
    let lo = need.saturating_sub(sum);
    let hi = l - sum;
    if lo > hi {
        return;
    }
    for v in (lo..=hi).rev() {
        cur.push(v as u32);
        m_rec(l, sum + v, cur, out);
        cur.pop();
    }
}

/// `M_ℓ^e`: sequences with `m_i = 0` wherever `e_i = 2` (`i ≥ 2`); empty when
/// `e_1 = 2`.
pub fn m_sequences_labeled(e: &[u8]) -> Vec<Vec<u32>> {
    if e.first() == Some(&2) {
        return Vec::new();
    }
    m_sequences(e.len())
        .into_iter()
        .filter(|m| m.iter().zip(e).skip(1).all(|(&mi, &ei)| ei != 2 || mi == 0))
        .collect()
}

/// `E_ℓ = {1,2}^ℓ`, starting from `(1,…,1)`.
pub fn bit_sequences(l: usize) -> Vec<Vec<u8>> {
    (0..1usize << l)
        .map(|mask| (0..l).map(|i| if mask >> (l - 1 - i) & 1 == 1 { 2 } else { 1 }).collect())
        .collect()
}

/// `(−1)^{e_1+⋯+e_ℓ−ℓ}`, i.e. the parity of the number of 2s.
pub fn e_sign(e: &[u8]) -> i32 {
    if e.iter().filter(|&&b| b == 2).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn catalan(n: u32) -> Z {
    super::binom(2 * n, n) / Z::from(n + 1)
}
