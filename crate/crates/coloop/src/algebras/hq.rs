use std::fmt;

/// Imaginary or real basis unit of the hyperbolic quaternions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum HqBasis {
    One,
    I,
    J,
    K,
}

/// A signed unit `±1, ±i, ±j, ±k` of the hyperbolic quaternions, with
/// `i² = j² = k² = 1`, `ij = k = −ji`, `jk = i = −kj`, `ki = j = −ik`.
/// These eight units form a non-associative loop.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HqUnit {
    pub negative: bool,
    pub basis: HqBasis,
}

impl HqUnit {
    pub const ONE: HqUnit = HqUnit { negative: false, basis: HqBasis::One };

    pub fn new(negative: bool, basis: HqBasis) -> Self {
        HqUnit { negative, basis }
    }

    /// All eight units, positive first.
    pub fn all() -> Vec<HqUnit> {
        let mut v = Vec::with_capacity(8);
        for negative in [false, true] {
            for basis in [HqBasis::One, HqBasis::I, HqBasis::J, HqBasis::K] {
                v.push(HqUnit { negative, basis });
            }
        }
        v
    }

    pub fn mul(self, other: HqUnit) -> HqUnit {
        use HqBasis::*;
        let (flip, basis) = match (self.basis, other.basis) {
            (One, b) | (b, One) => (false, b),
            (a, b) if a == b => (false, One),
            (I, J) => (false, K),
            (J, I) => (true, K),
            (J, K) => (false, I),
            (K, J) => (true, I),
            (K, I) => (false, J),
            (I, K) => (true, J),
            _ => unreachable!(),
        };
        HqUnit { negative: self.negative ^ other.negative ^ flip, basis }
    }

    /// The unique `z` with `self · z = y`.
    pub fn left_div(self, y: HqUnit) -> HqUnit {
        Self::all().into_iter().find(|&z| self.mul(z) == y).expect("row is a permutation")
    }

    /// The unique `z` with `z · self = y`.
    pub fn right_div(self, y: HqUnit) -> HqUnit {
        Self::all().into_iter().find(|&z| z.mul(self) == y).expect("column is a permutation")
    }
}

impl fmt::Display for HqUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.basis {
            HqBasis::One => "1",
            HqBasis::I => "i",
            HqBasis::J => "j",
            HqBasis::K => "k",
        };
        write!(f, "{}{}", if self.negative { "-" } else { "" }, s)
    }
}

impl fmt::Debug for HqUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of checking the loop axioms on the 8-element table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HqLoopReport {
    pub latin_square: bool,
    pub two_sided_unit: bool,
    pub cancellation: bool,
    pub associative: bool,
    /// First triple found with `(xy)z ≠ x(yz)`.
    pub non_associative_triple: Option<(HqUnit, HqUnit, HqUnit)>,
}

impl HqLoopReport {
    /// A non-associative loop: every loop axiom holds and a witness exists.
    pub fn is_loop(&self) -> bool {
        self.latin_square && self.two_sided_unit && self.cancellation
    }
}

pub fn hq_loop_axioms() -> HqLoopReport {
    let units = HqUnit::all();
    let is_perm = |row: Vec<HqUnit>| {
        let mut r = row;
        r.sort();
        r.dedup();
        r.len() == 8
    };
    let latin_square = units.iter().all(|&x| is_perm(units.iter().map(|&y| x.mul(y)).collect()))
        && units.iter().all(|&y| is_perm(units.iter().map(|&x| x.mul(y)).collect()));
    let two_sided_unit = units.iter().all(|&x| HqUnit::ONE.mul(x) == x && x.mul(HqUnit::ONE) == x);
    let mut cancellation = true;
    for &x in &units {
        for &y in &units {
            // x(x\y) = y = x\(xy) and (y/x)x = y = (yx)/x
            cancellation &= x.mul(x.left_div(y)) == y && x.left_div(x.mul(y)) == y;
            cancellation &= x.right_div(y).mul(x) == y && x.right_div(y.mul(x)) == y;
        }
    }
    let mut witness = None;
    'search: for &x in &units {
        for &y in &units {
            for &z in &units {
                if x.mul(y).mul(z) != x.mul(y.mul(z)) {
                    witness = Some((x, y, z));
                    break 'search;
                }
            }
        }
    }
    HqLoopReport {
        latin_square,
        two_sided_unit,
        cancellation,
        associative: witness.is_none(),
        non_associative_triple: witness,
    }
}
