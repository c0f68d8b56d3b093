//! The trace algebra `S = T + Tx + Ty + Txy`.

use std::fmt;

use super::tpoly::{Generator, TPoly};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar};
use crate::ncpoly::{Family, Letter, NcPoly, Word};

/// Coefficients on the basis `1, x, y, xy`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SElement {
    pub c: [TPoly; 4],
}

fn g(gen: Generator) -> TPoly {
    TPoly::gen(gen)
}

impl SElement {
    pub const ONE: usize = 0;
    pub const X: usize = 1;
    pub const Y: usize = 2;
    pub const XY: usize = 3;

    pub fn zero() -> Self {
        SElement::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut s = Self::zero();
        s.c[i] = TPoly::one();
        s
    }

    pub fn scalar(t: TPoly) -> Self {
        let mut s = Self::zero();
        s.c[0] = t;
        s
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(TPoly::is_zero)
    }

    /// True when only the `1` coefficient is nonzero.
    pub fn is_central(&self) -> bool {
        self.c[1..].iter().all(TPoly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..4 {
            out.c[i] = out.c[i].add(&other.c[i]);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_t(&TPoly::constant(-ExactScalar::one())))
    }

    pub fn scale_t(&self, t: &TPoly) -> Self {
        let mut out = self.clone();
        for c in out.c.iter_mut() {
            *c = c.mul(t);
        }
        out
    }

    /// `self · x`.
    pub fn times_x(&self) -> Self {
        use Generator::*;
        let [c1, cx, cy, cxy] = &self.c;
        let mut out = Self::zero();
        // 1·x = x
        out.c[1] = out.c[1].add(c1);
        // x·x = g1 x − g2
        out.c[1] = out.c[1].add(&cx.mul(&g(TrX)));
        out.c[0] = out.c[0].sub(&cx.mul(&g(DetX)));
        // y·x = −xy + g1 y + g3 x + (g5 − g1 g3)
        out.c[3] = out.c[3].sub(cy);
        out.c[2] = out.c[2].add(&cy.mul(&g(TrX)));
        out.c[1] = out.c[1].add(&cy.mul(&g(TrY)));
        let k = g(TrXY).sub(&g(TrX).mul(&g(TrY)));
        out.c[0] = out.c[0].add(&cy.mul(&k));
        // xy·x = g5 x + g2 y − g2 g3
        out.c[1] = out.c[1].add(&cxy.mul(&g(TrXY)));
        out.c[2] = out.c[2].add(&cxy.mul(&g(DetX)));
        out.c[0] = out.c[0].sub(&cxy.mul(&g(DetX).mul(&g(TrY))));
        out
    }

    /// `self · y`.
    pub fn times_y(&self) -> Self {
        use Generator::*;
        let [c1, cx, cy, cxy] = &self.c;
        let mut out = Self::zero();
        out.c[2] = out.c[2].add(c1);
        out.c[3] = out.c[3].add(cx);
        // y·y = g3 y − g4
        out.c[2] = out.c[2].add(&cy.mul(&g(TrY)));
        out.c[0] = out.c[0].sub(&cy.mul(&g(DetY)));
        // xy·y = g3 xy − g4 x
        out.c[3] = out.c[3].add(&cxy.mul(&g(TrY)));
        out.c[1] = out.c[1].sub(&cxy.mul(&g(DetY)));
        out
    }

    pub fn eval(&self, x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
        let xy = x * y;
        let mut out = ExactMatrix::scalar(2, &self.c[0].eval(x, y));
        for (k, m) in [(1, x), (2, y), (3, &xy)] {
            out = &out + &m.scale(&self.c[k].eval(x, y));
        }
        out
    }
}

pub fn s_multiply(a: &SElement, b: &SElement) -> SElement {
    let ax = a.times_x();
    let terms = [a.clone(), ax.clone(), a.times_y(), ax.times_y()];
    let mut out = SElement::zero();
    for (k, t) in terms.iter().enumerate() {
        out = out.add(&t.scale_t(&b.c[k]));
    }
    out
}

fn check_letter(l: Letter) -> Result<()> {
    if l.index() != 1 || !matches!(l.family(), Family::X | Family::Y) {
        return Err(Error::Precondition(format!(
            "{l} is not one of the two generic matrices x1, y1"
        )));
    }
    Ok(())
}

pub fn word_to_s(w: &Word) -> Result<SElement> {
    let mut s = SElement::basis(0);
    for &l in w.letters() {
        check_letter(l)?;
        s = match l.family() {
            Family::X => s.times_x(),
            _ => s.times_y(),
        };
    }
    Ok(s)
}

/// Image of a polynomial in `x = x1`, `y = y1` in the trace algebra.
pub fn nc_to_s(p: &NcPoly) -> Result<SElement> {
    let mut out = SElement::zero();
    for (w, c) in p.terms() {
        out = out.add(&word_to_s(w)?.scale_t(&TPoly::constant(c.clone())));
    }
    Ok(out)
}

impl fmt::Display for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["1", "x", "y", "xy"];
        let mut first = true;
        for (c, n) in self.c.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*{n}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::{random_matrix, seeded_rng};

    fn tp(gens: &[Generator], c: i64) -> TPoly {
        TPoly::product_of(gens).scale(&ExactScalar::from(c))
    }

    #[test]
    fn rewrite_rules() {
        use Generator::*;
        let x = SElement::basis(SElement::X);
        let y = SElement::basis(SElement::Y);
        let xx = s_multiply(&x, &x);
        assert_eq!(xx.c[1], tp(&[TrX], 1));
        assert_eq!(xx.c[0], tp(&[DetX], -1));
        let yx = s_multiply(&y, &x);
        assert_eq!(yx.c[3], tp(&[], -1));
        assert_eq!(yx.c[2], tp(&[TrX], 1));
        assert_eq!(yx.c[1], tp(&[TrY], 1));
        assert_eq!(yx.c[0], tp(&[TrXY], 1).add(&tp(&[TrX, TrY], -1)));
    }

    #[test]
    fn faithful_and_associative() {
        let mut rng = seeded_rng(11);
        let words = ["x1.y1.y1.x1", "y1.x1.y1", "x1.x1.x1.y1", "y1.y1.x1"];
        let ss: Vec<SElement> = words
            .iter()
            .map(|w| word_to_s(&w.parse().unwrap()).unwrap())
            .collect();
        for _ in 0..10 {
            let x = random_matrix(&mut rng, 2);
            let y = random_matrix(&mut rng, 2);
            for a in &ss {
                for b in &ss {
                    let ab = s_multiply(a, b);
                    assert_eq!(ab.eval(&x, &y), &a.eval(&x, &y) * &b.eval(&x, &y));
                }
            }
        }
        let (a, b, c) = (&ss[0], &ss[1], &ss[3]);
        assert_eq!(
            s_multiply(&s_multiply(a, b), c),
            s_multiply(a, &s_multiply(b, c))
        );
    }

    #[test]
    fn trace_times_bracket() {
        let p: NcPoly = NcPoly::from_terms([
            ("x1.y1.x1.y1".parse().unwrap(), ExactScalar::one()),
            ("y1.x1.y1.x1".parse().unwrap(), -ExactScalar::one()),
        ]);
        let c = nc_to_s(&NcPoly::commutator(
            &NcPoly::var(Letter::x(1)),
            &NcPoly::var(Letter::y(1)),
        ))
        .unwrap();
        let want = c.scale_t(&TPoly::gen(Generator::TrXY));
        assert_eq!(nc_to_s(&p).unwrap(), want);
        assert!(nc_to_s(&NcPoly::var(Letter::z(1))).is_err());
    }
}
