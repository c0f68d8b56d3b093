//! Bordered brackets `Σ c·w[x,y]w′` and absorption of trace factors.
//!
//! The rewrite rules, valid for 2×2 matrices with `c = [x,y]`:
//!
//! ```text
//! tr(x)c  = cx + xc        det(x)c = xcx
//! tr(y)c  = cy + yc        det(y)c = ycy
//! tr(xy)c = c·xy + yx·c
//! ```

use std::collections::BTreeMap;
use std::fmt;

use super::tpoly::{Generator, Monomial, TPoly};
use crate::exact::{ExactMatrix, ExactScalar};
use crate::ncpoly::{Letter, NcPoly, Word};

/// Order in which generators are stripped from an invariant monomial.
pub const ABSORB_ORDER: [Generator; 5] = [
    Generator::TrY,
    Generator::TrXY,
    Generator::DetX,
    Generator::DetY,
    Generator::TrX,
];

pub fn x() -> Letter {
    Letter::x(1)
}

pub fn y() -> Letter {
    Letter::y(1)
}

/// Word over the characters `x`, `y`.
pub fn xy_word(s: &str) -> Word {
    let letters = s
        .chars()
        .map(|ch| match ch {
            'x' => x(),
            'y' => y(),
            _ => panic!("word over x, y"),
        })
        .collect();
    Word::new(letters)
}

pub fn w_poly(s: &str) -> NcPoly {
    NcPoly::word(xy_word(s))
}

/// `[x,y]` as a polynomial.
pub fn commutator_xy() -> NcPoly {
    NcPoly::commutator(&NcPoly::var(x()), &NcPoly::var(y()))
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct BracketForm {
    terms: BTreeMap<(Word, Word), ExactScalar>,
}

impl BracketForm {
    pub fn zero() -> Self {
        BracketForm::default()
    }

    /// `c·w[x,y]w′`, words written over the characters `x`, `y`.
    pub fn term(left: &str, right: &str, c: ExactScalar) -> Self {
        let mut f = Self::zero();
        f.add_term(xy_word(left), xy_word(right), c);
        f
    }

    pub fn bracket() -> Self {
        Self::term("", "", ExactScalar::one())
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        let mut out = Self::zero();
        for ((a, b), v) in &self.terms {
            out.add_term(a.clone(), b.clone(), v * c);
        }
        out
    }

    /// Multiplies every term by `u` on the left and `v` on the right.
    pub fn border(&self, u: &str, v: &str) -> Self {
        let (u, v) = (xy_word(u), xy_word(v));
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(u.concat(a), b.concat(&v), c.clone());
        }
        out
    }

    pub fn expand(&self) -> NcPoly {
        let xy = NcPoly::word(xy_word("xy"));
        let yx = NcPoly::word(xy_word("yx"));
        let mut out = NcPoly::zero();
        for ((a, b), c) in &self.terms {
            let lhs = NcPoly::word(a.clone());
            let rhs = NcPoly::word(b.clone());
            let t = NcPoly::product(&[&lhs, &xy.sub(&yx), &rhs]);
            out = out.add(&t.scale(c));
        }
        out
    }

    pub fn eval(&self, xm: &ExactMatrix, ym: &ExactMatrix) -> ExactMatrix {
        let asg = crate::ncpoly::Assignment::from_pairs(2, [(x(), xm.clone()), (y(), ym.clone())])
            .expect("2x2 pair");
        self.expand().eval(&asg).expect("x1, y1 assigned")
    }
}

pub fn absorb_generator(g: Generator, f: &BracketForm) -> BracketForm {
    let mut out = BracketForm::zero();
    for ((a, b), c) in &f.terms {
        let mut push = |l: &str, r: &str| {
            out.add_term(a.concat(&xy_word(l)), xy_word(r).concat(b), c.clone());
        };
        match g {
            Generator::TrX => {
                push("", "x");
                push("x", "");
            }
            Generator::TrY => {
                push("", "y");
                push("y", "");
            }
            Generator::DetX => push("x", "x"),
            Generator::DetY => push("y", "y"),
            Generator::TrXY => {
                push("", "xy");
                push("yx", "");
            }
        }
    }
    out
}

/// `t·f` for a monomial `t`, with every trace factor absorbed.
pub fn absorb_monomial(t: &Monomial, f: &BracketForm) -> BracketForm {
    let mut cur = f.clone();
    for g in ABSORB_ORDER {
        for _ in 0..t[g.index()] {
            cur = absorb_generator(g, &cur);
        }
    }
    cur
}

pub fn absorb_invariant_form(t: &TPoly, f: &BracketForm) -> BracketForm {
    let mut out = BracketForm::zero();
    for (e, c) in t.terms() {
        out = out.add(&absorb_monomial(e, f).scale(c));
    }
    out
}

/// Pure noncommutative polynomial equal to `t·f` on 2×2 matrices.
pub fn absorb_invariant(t: &TPoly, f: &BracketForm) -> NcPoly {
    absorb_invariant_form(t, f).expand()
}

impl fmt::Display for BracketForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{a}[x,y]{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BracketForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::{random_matrix, seeded_rng};

    #[test]
    fn single_generators() {
        let b = BracketForm::bracket();
        let got = absorb_generator(Generator::TrY, &b);
        let want = BracketForm::term("", "y", ExactScalar::one())
            .add(&BracketForm::term("y", "", ExactScalar::one()));
        assert_eq!(got, want);
        assert_eq!(
            absorb_generator(Generator::DetX, &b),
            BracketForm::term("x", "x", ExactScalar::one())
        );
        assert_eq!(absorb_invariant(&TPoly::one(), &b), commutator_xy());
    }

    #[test]
    fn numeric_faithfulness() {
        let mut rng = seeded_rng(5);
        let f = BracketForm::term("x", "yy", ExactScalar::from(3))
            .add(&BracketForm::term("yx", "", ExactScalar::from(-2)));
        let t = TPoly::product_of(&[Generator::TrY, Generator::TrXY, Generator::DetX])
            .add(&TPoly::product_of(&[Generator::TrX, Generator::TrX, Generator::DetY]));
        for _ in 0..10 {
            let xm = random_matrix(&mut rng, 2);
            let ym = random_matrix(&mut rng, 2);
            let fv = f.eval(&xm, &ym);
            for g in Generator::ALL {
                let got = absorb_generator(g, &f).eval(&xm, &ym);
                assert_eq!(got, fv.scale(&g.eval(&xm, &ym)), "{g:?}");
            }
            let got = absorb_invariant_form(&t, &f).eval(&xm, &ym);
            assert_eq!(got, fv.scale(&t.eval(&xm, &ym)));
        }
    }
}
