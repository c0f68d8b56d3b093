//! The invariant ring `T = F[tr x, det x, tr y, det y, tr xy]` of two 2×2 matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{ExactMatrix, ExactScalar};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    TrX,
    DetX,
    TrY,
    DetY,
    TrXY,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::TrX,
        Generator::DetX,
        Generator::TrY,
        Generator::DetY,
        Generator::TrXY,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Bidegree in `(x, y)`.
    pub fn bidegree(self) -> (usize, usize) {
        match self {
            Generator::TrX => (1, 0),
            Generator::DetX => (2, 0),
            Generator::TrY => (0, 1),
            Generator::DetY => (0, 2),
            Generator::TrXY => (1, 1),
        }
    }

    pub fn degree(self) -> usize {
        let (a, b) = self.bidegree();
        a + b
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::TrX => "tr(x)",
            Generator::DetX => "det(x)",
            Generator::TrY => "tr(y)",
            Generator::DetY => "det(y)",
            Generator::TrXY => "tr(xy)",
        }
    }

    pub fn eval(self, x: &ExactMatrix, y: &ExactMatrix) -> ExactScalar {
        let tr = |m: &ExactMatrix| m.trace().expect("square");
        let det = |m: &ExactMatrix| m.det().expect("square");
        match self {
            Generator::TrX => tr(x),
            Generator::DetX => det(x),
            Generator::TrY => tr(y),
            Generator::DetY => det(y),
            Generator::TrXY => tr(&(x * y)),
        }
    }
}

/// Exponent vector over [`Generator::ALL`].
pub type Monomial = [u32; 5];

/// A commutative polynomial in the five generators.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn constant(c: ExactScalar) -> Self {
        let mut p = Self::zero();
        p.add_term([0; 5], c);
        p
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn gen(g: Generator) -> Self {
        let mut e = [0; 5];
        e[g.index()] = 1;
        Self::monomial(e, ExactScalar::one())
    }

    pub fn monomial(e: Monomial, c: ExactScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// Product of the listed generators.
    pub fn product_of(gens: &[Generator]) -> Self {
        let mut e = [0; 5];
        for g in gens {
            e[g.index()] += 1;
        }
        Self::monomial(e, ExactScalar::one())
    }

    pub fn add_term(&mut self, e: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(ExactScalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-ExactScalar::one()))
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut e = *a;
                for i in 0..5 {
                    e[i] += b[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, x: &ExactMatrix, y: &ExactMatrix) -> ExactScalar {
        let vals: Vec<ExactScalar> = Generator::ALL.iter().map(|g| g.eval(x, y)).collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for (i, &k) in e.iter().enumerate() {
                    v = v * vals[i].pow(k);
                }
                v
            })
            .sum()
    }
}

/// Generators of a monomial with multiplicity, in [`Generator::ALL`] order.
pub fn monomial_factors(e: &Monomial) -> Vec<Generator> {
    Generator::ALL
        .iter()
        .flat_map(|&g| std::iter::repeat(g).take(e[g.index()] as usize))
        .collect()
}

pub fn monomial_degree(e: &Monomial) -> usize {
    monomial_factors(e).iter().map(|g| g.degree()).sum()
}

/// `[x,y]²` as a scalar: `tr(x)²det(y) + tr(y)²det(x) + tr(xy)² − tr(x)tr(y)tr(xy) − 4det(x)det(y)`.
pub fn bracket_square() -> TPoly {
    use Generator::*;
    let one = ExactScalar::one();
    let mut p = TPoly::zero();
    for (gens, c) in [
        (vec![TrX, TrX, DetY], one.clone()),
        (vec![TrY, TrY, DetX], one.clone()),
        (vec![TrXY, TrXY], one.clone()),
        (vec![TrX, TrY, TrXY], -one.clone()),
        (vec![DetX, DetY], ExactScalar::from(-4)),
    ] {
        p = p.add(&TPoly::product_of(&gens).scale(&c));
    }
    p
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for g in Generator::ALL {
                match e[g.index()] {
                    0 => {}
                    1 => write!(f, "*{}", g.name())?,
                    k => write!(f, "*{}^{k}", g.name())?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_square_is_minus_det() {
        let x = ExactMatrix::from_i64(&[vec![1, 2], vec![3, -4]]).unwrap();
        let y = ExactMatrix::from_i64(&[vec![0, 5], vec![-1, 2]]).unwrap();
        let c = &(&x * &y) - &(&y * &x);
        assert_eq!(bracket_square().eval(&x, &y), -c.det().unwrap());
        let c2 = &c * &c;
        assert_eq!(c2.as_scalar().unwrap(), bracket_square().eval(&x, &y));
    }

    #[test]
    fn arithmetic() {
        let a = TPoly::gen(Generator::TrX);
        let b = TPoly::gen(Generator::DetY);
        let p = a.add(&b).mul(&a.sub(&b));
        assert_eq!(p, a.mul(&a).sub(&b.mul(&b)));
        assert_eq!(monomial_degree(&[1, 0, 0, 1, 2]), 7);
    }
}
