use std::fmt;

use crate::{Error, Involutive, Result, Ring, Z};

/// Square `n × n` matrix over a (possibly non-associative) ring, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<A> {
    n: usize,
    entries: Vec<A>,
}

impl<A: Ring> Matrix<A> {
    pub fn from_rows(rows: Vec<Vec<A>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("matrix must be square and nonempty".into()));
        }
        Ok(Matrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> A) -> Self {
        assert!(n > 0, "empty matrix");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    /// `n × n` identity built from the unit of `like`.
    pub fn identity(n: usize, like: &A) -> Self {
        Self::from_fn(n, |i, j| if i == j { like.one_like() } else { like.zero_like() })
    }

    /// Elementary matrix `E_{ij}` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize, like: &A) -> Self {
        Self::from_fn(n, |r, c| if (r, c) == (i, j) { like.one_like() } else { like.zero_like() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &A {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<A>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn map<B: Ring>(&self, f: impl Fn(&A) -> B) -> Matrix<B> {
        Matrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Checked product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.n, self.n, other.n, other.n)));
        }
        Ok(Self::from_fn(self.n, |i, j| {
            let mut acc = self.get(i, 0).times(other.get(0, j));
            for k in 1..self.n {
                acc = acc.plus(&self.get(i, k).times(other.get(k, j)));
            }
            acc
        }))
    }

    fn zip(&self, other: &Self, f: impl Fn(&A, &A) -> A) -> Self {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        Matrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl<A: Ring> Ring for Matrix<A> {
    fn zero_like(&self) -> Self {
        self.map(|a| a.zero_like())
    }
    fn one_like(&self) -> Self {
        Self::identity(self.n, &self.entries[0])
    }
    fn vanishes(&self) -> bool {
        self.entries.iter().all(Ring::vanishes)
    }
    fn plus(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.plus(b))
    }
    fn negate(&self) -> Self {
        self.map(|a| a.negate())
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other).expect("matrix size mismatch")
    }
    fn scale(&self, k: &Z) -> Self {
        self.map(|a| a.scale(k))
    }
}

/// Transpose composed with the entrywise involution.
impl<A: Involutive> Involutive for Matrix<A> {
    fn conj(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }
}

impl<A: Ring + fmt::Display> fmt::Display for Matrix<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, a) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<A: fmt::Debug> fmt::Debug for Matrix<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[A]> = self.entries.chunks(self.n).collect();
        write!(f, "M{}{:?}", self.n, rows)
    }
}

/// `M_2` over a commutative ring with the symplectic involution
/// `a* = adj(a)`, for which `a a* = det(a)` is scalar. Doubling this algebra
/// gives the split octonions (Zorn's vector-matrix algebra).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticM2<A>(pub Matrix<A>);

impl<A: Ring> SymplecticM2<A> {
    pub fn new(m: Matrix<A>) -> Result<Self> {
        if m.dim() != 2 {
            return Err(Error::Shape("symplectic involution needs 2x2 matrices".into()));
        }
        Ok(SymplecticM2(m))
    }

    pub fn det(&self) -> A {
        let m = &self.0;
        m.get(0, 0).times(m.get(1, 1)).minus(&m.get(0, 1).times(m.get(1, 0)))
    }
}

impl<A: Ring> Ring for SymplecticM2<A> {
    fn zero_like(&self) -> Self {
        SymplecticM2(self.0.zero_like())
    }
    fn one_like(&self) -> Self {
        SymplecticM2(self.0.one_like())
    }
    fn vanishes(&self) -> bool {
        self.0.vanishes()
    }
    fn plus(&self, other: &Self) -> Self {
        SymplecticM2(self.0.plus(&other.0))
    }
    fn negate(&self) -> Self {
        SymplecticM2(self.0.negate())
    }
    fn times(&self, other: &Self) -> Self {
        SymplecticM2(self.0.times(&other.0))
    }
    fn scale(&self, k: &Z) -> Self {
        SymplecticM2(self.0.scale(k))
    }
}

impl<A: Ring> Involutive for SymplecticM2<A> {
    fn conj(&self) -> Self {
        let m = &self.0;
        SymplecticM2(Matrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => m.get(1, 1).clone(),
            (1, 1) => m.get(0, 0).clone(),
            _ => m.get(i, j).negate(),
        }))
    }
}

impl<A: fmt::Debug> fmt::Debug for SymplecticM2<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sp{:?}", self.0)
    }
}

impl<A: Ring + fmt::Display> fmt::Display for SymplecticM2<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
