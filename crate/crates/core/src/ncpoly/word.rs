use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    X,
    Y,
    Z,
    Zeta,
}

impl Family {
    pub fn prefix(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::Zeta => "zeta",
        }
    }

    fn code(self) -> u32 {
        match self {
            Family::X => 0,
            Family::Y => 1,
            Family::Z => 2,
            Family::Zeta => 3,
        }
    }

    fn from_code(c: u32) -> Family {
        match c {
            0 => Family::X,
            1 => Family::Y,
            2 => Family::Z,
            _ => Family::Zeta,
        }
    }
}

/// A variable: family tag plus index ≥ 1, packed so that the integer order is
/// family first, then index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

const INDEX_BITS: u32 = 24;

impl Letter {
    pub fn new(family: Family, index: u32) -> Self {
        assert!(index >= 1 && index < (1 << INDEX_BITS), "letter index out of range");
        Letter((family.code() << INDEX_BITS) | index)
    }

    pub fn x(i: u32) -> Self {
        Self::new(Family::X, i)
    }

    pub fn y(i: u32) -> Self {
        Self::new(Family::Y, i)
    }

    pub fn z(i: u32) -> Self {
        Self::new(Family::Z, i)
    }

    pub fn zeta(i: u32) -> Self {
        Self::new(Family::Zeta, i)
    }

    pub fn family(self) -> Family {
        Family::from_code(self.0 >> INDEX_BITS)
    }

    pub fn index(self) -> u32 {
        self.0 & ((1 << INDEX_BITS) - 1)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family().prefix(), self.index())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("not a variable: {s:?}"),
        };
        let (family, rest) = if let Some(r) = s.strip_prefix("zeta") {
            (Family::Zeta, r)
        } else if let Some(r) = s.strip_prefix('x') {
            (Family::X, r)
        } else if let Some(r) = s.strip_prefix('y') {
            (Family::Y, r)
        } else if let Some(r) = s.strip_prefix('z') {
            (Family::Z, r)
        } else {
            return Err(bad());
        };
        let index: u32 = rest.parse().map_err(|_| bad())?;
        if index == 0 || index >= (1 << INDEX_BITS) {
            return Err(bad());
        }
        Ok(Letter::new(family, index))
    }
}

/// A monomial; the empty word is 1. Ordered by degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree_in(&self, family: Family) -> usize {
        self.0.iter().filter(|l| l.family() == family).count()
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&m| m == l).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn substitute(&self, f: impl Fn(Letter) -> Letter) -> Word {
        Word(self.0.iter().map(|&l| f(l)).collect())
    }

    /// `x_{a}x_{a+1}…x_{b}` in one family (inclusive, one-based).
    pub fn run(family: Family, a: u32, b: u32) -> Word {
        Word((a..=b).map(|i| Letter::new(family, i)).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
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
                write!(f, ".")?;
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

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::one());
        }
        s.split('.')
            .map(|t| t.trim().parse::<Letter>())
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_order_and_text() {
        assert!(Letter::x(9) < Letter::y(1));
        assert!(Letter::z(3) < Letter::zeta(1));
        for s in ["x1", "y12", "z3", "zeta2"] {
            assert_eq!(s.parse::<Letter>().unwrap().to_string(), s);
        }
        assert!("x0".parse::<Letter>().is_err());
        assert!("w1".parse::<Letter>().is_err());
    }

    #[test]
    fn word_order() {
        let a: Word = "y1".parse().unwrap();
        let b: Word = "x1.x1".parse().unwrap();
        assert!(Word::one() < a && a < b);
        assert_eq!("1".parse::<Word>().unwrap(), Word::one());
        assert_eq!(b.to_string(), "x1.x1");
    }
}
