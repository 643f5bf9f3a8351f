use std::fmt;

use super::is_m_sequence;
use crate::{Error, Result};

/// A planar binary tree; `Leaf` is the one-leaf tree `|`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlanarBinaryTree {
    Leaf,
    Node(Box<PlanarBinaryTree>, Box<PlanarBinaryTree>),
}

impl PlanarBinaryTree {
    pub fn node(l: PlanarBinaryTree, r: PlanarBinaryTree) -> Self {
        PlanarBinaryTree::Node(Box::new(l), Box::new(r))
    }

    pub fn leaves(&self) -> usize {
        match self {
            PlanarBinaryTree::Leaf => 1,
            PlanarBinaryTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            PlanarBinaryTree::Leaf => 0,
            PlanarBinaryTree::Node(l, r) => 1 + l.internal_nodes() + r.internal_nodes(),
        }
    }

    /// `G^j(t_1, …, t_j)`: a left comb of `j` vertices whose right branches
    /// carry `t_1, …, t_j`. `G^0` is the leaf.
    pub fn comb(ts: Vec<PlanarBinaryTree>) -> Self {
        ts.into_iter().fold(PlanarBinaryTree::Leaf, PlanarBinaryTree::node)
    }
}

/// Balanced-parenthesis form: `|` for the leaf, `(LR)` for a vertex.
impl fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarBinaryTree::Leaf => write!(f, "|"),
            PlanarBinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl fmt::Debug for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All planar binary trees with `leaves` leaves.
pub fn all_trees(leaves: usize) -> Vec<PlanarBinaryTree> {
    if leaves <= 1 {
        return vec![PlanarBinaryTree::Leaf];
    }
    let mut out = Vec::new();
    for k in 1..leaves {
        for l in all_trees(k) {
            for r in all_trees(leaves - k) {
                out.push(PlanarBinaryTree::node(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Split `m = (j, q^(1), 0, q^(2), 0, …, q^(j))` into its blocks `q^(i)`.
///
/// Inside a block the running excess `Σ m − length` stays nonnegative, and a
/// zero arriving at excess zero can only be a separator, so the split is
/// unique.
fn decompose(m: &[u32]) -> Result<Vec<Vec<u32>>> {
    let bad = || Error::Invalid(format!("{m:?} is not an M-sequence"));
    let (&j, tail) = m.split_first().ok_or_else(bad)?;
    let mut blocks = Vec::with_capacity(j as usize);
    let mut cur = Vec::new();
    let mut excess = 0i64;
    for &v in tail {
        if excess == 0 && v == 0 && blocks.len() + 1 < j as usize {
            blocks.push(std::mem::take(&mut cur));
            continue;
        }
        excess += v as i64 - 1;
        if excess < 0 {
            return Err(bad());
        }
        cur.push(v);
    }
    if excess != 0 {
        return Err(bad());
    }
    blocks.push(cur);
    if blocks.len() != j as usize {
        return Err(bad());
    }
    Ok(blocks)
}

/// The bijection `Φ: M_ℓ → PBT_{ℓ+1}`, with `Φ() = |` and
/// `Φ(j, q^(1), 0, …, q^(j)) = G^j(Φ(q^(1)), …, Φ(q^(j)))`.
pub fn tree_of_msequence(m: &[u32]) -> Result<PlanarBinaryTree> {
    if m.is_empty() {
        return Ok(PlanarBinaryTree::Leaf);
    }
    if !is_m_sequence(m) {
        return Err(Error::Invalid(format!("{m:?} is not an M-sequence")));
    }
    let blocks = decompose(m)?;
    let ts = blocks.iter().map(|q| tree_of_msequence(q)).collect::<Result<Vec<_>>>()?;
    Ok(PlanarBinaryTree::comb(ts))
}
