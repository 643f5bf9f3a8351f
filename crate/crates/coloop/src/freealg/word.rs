use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// A graded generator `x^{(copy)}_index`. Copies 1, 2, 3 print as `x`, `y`,
/// `z`; higher copies are auxiliary symbols and print as `s<copy>_<index>`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub copy: u8,
    pub index: u32,
}

impl Letter {
    pub fn new(copy: u8, index: u32) -> Self {
        assert!(copy >= 1 && index >= 1, "letters have copy >= 1 and index >= 1");
        Letter { copy, index }
    }

    pub fn x(index: u32) -> Self {
        Self::new(1, index)
    }
    pub fn y(index: u32) -> Self {
        Self::new(2, index)
    }
    pub fn z(index: u32) -> Self {
        Self::new(3, index)
    }

    pub fn degree(&self) -> u32 {
        self.index
    }

    pub fn parse(s: &str) -> Result<Letter> {
        let bad = || Error::Parse(format!("bad letter {s:?}"));
        let s = s.trim();
        let (copy, rest) = match s.chars().next() {
            Some('x') => (1u8, &s[1..]),
            Some('y') => (2, &s[1..]),
            Some('z') => (3, &s[1..]),
            Some('s') => {
                let (c, i) = s[1..].split_once('_').ok_or_else(bad)?;
                (c.parse().map_err(|_| bad())?, i)
            }
            _ => return Err(bad()),
        };
        let index: u32 = rest.parse().map_err(|_| bad())?;
        if copy == 0 || index == 0 {
            return Err(bad());
        }
        Ok(Letter { copy, index })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.copy {
            1 => write!(f, "x{}", self.index),
            2 => write!(f, "y{}", self.index),
            3 => write!(f, "z{}", self.index),
            c => write!(f, "s{}_{}", c, self.index),
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A word in the free algebra; the empty word is the unit.
///
/// Ordered by degree, then length, then lexicographically on `(copy, index)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(Letter::degree).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn contains_copy(&self, copy: u8) -> bool {
        self.0.iter().any(|l| l.copy == copy)
    }

    /// Letters of one copy, in order, relabeled to copy 1.
    pub fn subword(&self, copy: u8) -> Word {
        Word(self.0.iter().filter(|l| l.copy == copy).map(|l| Letter::new(1, l.index)).collect())
    }

    pub fn relabel(&self, f: impl Fn(u8) -> u8) -> Word {
        Word(self.0.iter().map(|l| Letter::new(f(l.copy), l.index)).collect())
    }

    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::unit());
        }
        s.split('*').map(Letter::parse).collect::<Result<Vec<_>>>().map(Word)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Self {
        Word::letter(l)
    }
}
