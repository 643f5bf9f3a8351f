use std::fmt;
use std::str::FromStr;

use crate::{Error, Ring};

/// Named polynomial identities in a non-associative algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Identity {
    /// `(aa)b = a(ab)`
    LeftAlternative,
    /// `(ab)b = a(bb)`
    RightAlternative,
    /// `(ab)a = a(ba)`
    Flexible,
    /// `a(b(ac)) = ((ab)a)c`
    Moufang1,
    /// `(ab)(ca) = (a(bc))a`
    Moufang2,
    /// `a(b(cb)) = ((ab)c)b`
    Moufang3,
    /// `(ab)(ca) = a((bc)a)`
    Moufang4,
    /// `(aa)a = a(aa)`
    PowerAssoc3,
    /// `(ab)c = a(bc)`
    Associative,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::LeftAlternative,
        Identity::RightAlternative,
        Identity::Flexible,
        Identity::Moufang1,
        Identity::Moufang2,
        Identity::Moufang3,
        Identity::Moufang4,
        Identity::PowerAssoc3,
        Identity::Associative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::LeftAlternative => "left-alternative",
            Identity::RightAlternative => "right-alternative",
            Identity::Flexible => "flexible",
            Identity::Moufang1 => "moufang-1",
            Identity::Moufang2 => "moufang-2",
            Identity::Moufang3 => "moufang-3",
            Identity::Moufang4 => "moufang-4",
            Identity::PowerAssoc3 => "power-assoc-3",
            Identity::Associative => "associator",
        }
    }

    /// Left side minus right side. Unused arguments are ignored.
    pub fn defect<A: Ring>(self, a: &A, b: &A, c: &A) -> A {
        let m = |x: &A, y: &A| x.times(y);
        let (l, r) = match self {
            Identity::LeftAlternative => (m(&m(a, a), b), m(a, &m(a, b))),
            Identity::RightAlternative => (m(&m(a, b), b), m(a, &m(b, b))),
            Identity::Flexible => (m(&m(a, b), a), m(a, &m(b, a))),
            Identity::Moufang1 => (m(a, &m(b, &m(a, c))), m(&m(&m(a, b), a), c)),
            Identity::Moufang2 => (m(&m(a, b), &m(c, a)), m(&m(a, &m(b, c)), a)),
            Identity::Moufang3 => (m(a, &m(b, &m(c, b))), m(&m(&m(a, b), c), b)),
            Identity::Moufang4 => (m(&m(a, b), &m(c, a)), m(a, &m(&m(b, c), a))),
            Identity::PowerAssoc3 => (m(&m(a, a), a), m(a, &m(a, a))),
            Identity::Associative => (m(&m(a, b), c), m(a, &m(b, c))),
        };
        l.minus(&r)
    }

    pub fn holds<A: Ring>(self, a: &A, b: &A, c: &A) -> bool {
        self.defect(a, b, c).vanishes()
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// The associator `(ab)c − a(bc)`.
pub fn associator<A: Ring>(a: &A, b: &A, c: &A) -> A {
    Identity::Associative.defect(a, b, c)
}
