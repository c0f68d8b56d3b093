use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::poly::{Assignment, NcPoly};
use super::word::{Letter, Word};
use crate::error::Result;
use crate::exact::{ExactMatrix, ExactScalar, TensorOperator};

/// `Σ c · A ⊗ B` with `A`, `B` words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorPoly2 {
    terms: BTreeMap<(Word, Word), ExactScalar>,
}

impl TensorPoly2 {
    pub fn zero() -> Self {
        TensorPoly2::default()
    }

    /// `a ⊗ b` expanded bilinearly.
    pub fn tensor(a: &NcPoly, b: &NcPoly) -> Self {
        let mut t = Self::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(wa.clone(), wb.clone(), ca * cb);
            }
        }
        t
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Word, ExactScalar)>) -> Self {
        let mut t = Self::zero();
        for (a, b, c) in terms {
            t.add_term(a, b, c);
        }
        t
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let slot = self.terms.entry(key.clone()).or_insert_with(ExactScalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &ExactScalar)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-ExactScalar::one()))
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|((a, b), v)| (a.clone(), b.clone(), v * c)),
        )
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        self.terms
            .keys()
            .flat_map(|(a, b)| a.letters().iter().chain(b.letters()).copied())
            .collect()
    }

    /// Total degree of each term, when all terms agree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|(a, b)| a.degree() + b.degree());
        let first = it.next()?;
        it.all(|k| k == first).then_some(first)
    }

    /// Every term has both slots of one common degree.
    pub fn is_balanced(&self) -> bool {
        self.slot_degree().is_some()
    }

    /// The common slot degree of a balanced polynomial.
    pub fn slot_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let (a0, _) = it.next()?;
        let k = a0.degree();
        self.terms
            .keys()
            .all(|(a, b)| a.degree() == k && b.degree() == k)
            .then_some(k)
    }

    /// The contraction `Σ c · A ζ B` for a fresh middle letter.
    pub fn sandwich(&self, middle: Letter) -> NcPoly {
        let mid = Word::letter(middle);
        NcPoly::from_terms(
            self.terms
                .iter()
                .map(|((a, b), c)| (a.concat(&mid).concat(b), c.clone())),
        )
    }

    /// The product `Σ c · A B`.
    pub fn multiply_out(&self) -> NcPoly {
        NcPoly::from_terms(self.terms.iter().map(|((a, b), c)| (a.concat(b), c.clone())))
    }

    pub fn eval_tensor(&self, asg: &Assignment) -> Result<TensorOperator> {
        let d = asg.d();
        // Group by left word so each left factor is evaluated once.
        let mut grouped: BTreeMap<&Word, Vec<(&Word, &ExactScalar)>> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            grouped.entry(a).or_default().push((b, c));
        }
        let mut acc = ExactMatrix::zeros(d * d, d * d);
        for (a, rights) in grouped {
            let ma = asg.eval_word(a)?;
            let mut mb = ExactMatrix::zeros(d, d);
            for (b, c) in rights {
                mb = mb.try_add(&asg.eval_word(b)?.scale(c))?;
            }
            acc = acc.try_add(&ma.kron(&mb))?;
        }
        TensorOperator::new(d, 2, acc)
    }
}

impl fmt::Display for TensorPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{a}|{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::swap_operator;

    #[test]
    fn identity_and_matrix_units() {
        let one = TensorPoly2::tensor(&NcPoly::one(), &NcPoly::one());
        let asg = Assignment::new(2);
        assert_eq!(
            one.eval_tensor(&asg).unwrap(),
            TensorOperator::identity(2, 2).unwrap()
        );
        // Σ e_ij ⊗ e_ji with x_{2i+j+1} pinned to e_ij.
        let mut t = TensorPoly2::zero();
        let mut asg = Assignment::new(2);
        for i in 0..2u32 {
            for j in 0..2u32 {
                asg.insert(Letter::x(2 * i + j + 1), ExactMatrix::unit(2, i as usize, j as usize))
                    .unwrap();
                t.add_term(
                    Word::letter(Letter::x(2 * i + j + 1)),
                    Word::letter(Letter::x(2 * j + i + 1)),
                    ExactScalar::one(),
                );
            }
        }
        assert_eq!(t.eval_tensor(&asg).unwrap(), swap_operator(2).unwrap());
    }

    #[test]
    fn balance() {
        let x = NcPoly::var(Letter::x(1));
        let y = NcPoly::var(Letter::y(1));
        assert!(TensorPoly2::tensor(&x, &y).is_balanced());
        assert!(!TensorPoly2::tensor(&x.mul(&y), &y).is_balanced());
        assert_eq!(TensorPoly2::tensor(&x, &y).slot_degree(), Some(1));
    }
}
