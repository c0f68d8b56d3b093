use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar};

/// Matrices assigned to variables; all of one size `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    d: usize,
    map: BTreeMap<Letter, ExactMatrix>,
}

impl Assignment {
    pub fn new(d: usize) -> Self {
        Assignment {
            d,
            map: BTreeMap::new(),
        }
    }

    pub fn from_pairs(d: usize, pairs: impl IntoIterator<Item = (Letter, ExactMatrix)>) -> Result<Self> {
        let mut a = Self::new(d);
        for (l, m) in pairs {
            a.insert(l, m)?;
        }
        Ok(a)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn insert(&mut self, l: Letter, m: ExactMatrix) -> Result<()> {
        if m.rows() != self.d || m.cols() != self.d {
            return Err(Error::Dimension(format!(
                "{l} assigned a {}x{} matrix, expected {}x{}",
                m.rows(),
                m.cols(),
                self.d,
                self.d
            )));
        }
        self.map.insert(l, m);
        Ok(())
    }

    pub fn get(&self, l: Letter) -> Result<&ExactMatrix> {
        self.map.get(&l).ok_or_else(|| Error::Unassigned(l.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Letter, &ExactMatrix)> {
        self.map.iter()
    }

    pub fn eval_word(&self, w: &Word) -> Result<ExactMatrix> {
        let mut acc: Option<ExactMatrix> = None;
        for &l in w.letters() {
            let m = self.get(l)?;
            acc = Some(match acc {
                None => m.clone(),
                Some(a) => a.try_mul(m)?,
            });
        }
        Ok(acc.unwrap_or_else(|| ExactMatrix::identity(self.d)))
    }
}

/// A noncommutative polynomial with exact coefficients, in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, ExactScalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(ExactScalar::one(), Word::one())
    }

    pub fn monomial(c: ExactScalar, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(ExactScalar::one(), w)
    }

    pub fn var(l: Letter) -> Self {
        Self::word(Word::letter(l))
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::monomial(c, Word::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, ExactScalar)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(ExactScalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> ExactScalar {
        self.terms.get(w).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::degree).max()
    }

    /// `Some(k)` when every term has degree `k`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Word::degree);
        let first = it.next()?;
        it.all(|k| k == first).then_some(first)
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-ExactScalar::one())
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }

    pub fn product(factors: &[&NcPoly]) -> Self {
        factors.iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    /// `ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).sub(&b.mul(a))
    }

    pub fn substitute(&self, f: impl Fn(Letter) -> Letter) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.substitute(&f), c.clone())))
    }

    pub fn eval(&self, a: &Assignment) -> Result<ExactMatrix> {
        let mut acc = ExactMatrix::zeros(a.d(), a.d());
        for (w, c) in &self.terms {
            let m = a.eval_word(w)?;
            acc = acc.try_add(&m.scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize, j: usize) -> ExactMatrix {
        ExactMatrix::unit(2, i, j)
    }

    #[test]
    fn eval_basics() {
        let x1 = NcPoly::var(Letter::x(1));
        let x2 = NcPoly::var(Letter::x(2));
        let a = Assignment::from_pairs(2, [(Letter::x(1), e(0, 1)), (Letter::x(2), e(1, 0))]).unwrap();
        assert_eq!(x1.mul(&x2).eval(&a).unwrap(), e(0, 0));
        assert_eq!(NcPoly::one().eval(&a).unwrap(), ExactMatrix::identity(2));
        let c = NcPoly::commutator(&x1, &x2).eval(&a).unwrap();
        assert_eq!(c, &e(0, 0) - &e(1, 1));
        assert_eq!(
            NcPoly::var(Letter::y(1)).eval(&a),
            Err(Error::Unassigned("y1".into()))
        );
        assert!(Assignment::new(2).insert(Letter::x(1), ExactMatrix::identity(3)).is_err());
    }

    #[test]
    fn cancellation_is_canonical() {
        let x = NcPoly::var(Letter::x(1));
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.add(&x), x.scale(&ExactScalar::from(2)));
    }
}
