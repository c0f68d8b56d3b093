//! The swap polynomials `P`, `Q`, the trace-absorbed `Q′` and the family
//! `A·[x,y]⁴·t`.

use super::bracket::{absorb_invariant, w_poly, xy_word, BracketForm};
use super::tpoly::{bracket_square, monomial_degree, monomial_factors, Generator, Monomial, TPoly};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar};
use crate::ncpoly::{NcPoly, TensorPoly2};

fn q(n: i64, d: i64) -> ExactScalar {
    ExactScalar::ratio(n, d)
}

/// `s = [x,y]²` as a bracket form `[x,y](xy − yx)`.
fn bracket_sq_form() -> BracketForm {
    BracketForm::term("", "xy", q(1, 1)).add(&BracketForm::term("", "yx", q(-1, 1)))
}

/// `P = 1⊗([x,y]² + x[x,y]y) − y⊗x[x,y] − x⊗[x,y]y + xy⊗[x,y]`.
pub fn p_xy() -> TensorPoly2 {
    let one = NcPoly::one();
    let right1 = bracket_sq_form().add(&BracketForm::term("x", "y", q(1, 1)));
    let parts = [
        (one, right1),
        (w_poly("y"), BracketForm::term("x", "", q(-1, 1))),
        (w_poly("x"), BracketForm::term("", "y", q(-1, 1))),
        (w_poly("xy"), BracketForm::bracket()),
    ];
    let mut out = TensorPoly2::zero();
    for (l, r) in parts {
        out = out.add(&TensorPoly2::tensor(&l, &r.expand()));
    }
    out
}

const Q_TERMS: [&str; 40] = [
    "+xyyxy|xyyxy", "-xyyxy|yyxxy", "-xyyyx|xyyxy", "+xyyyx|xyyyx", "+xyyyx|yxyxy",
    "-xyyyx|yyxyx", "-xyyyy|xyxyx", "+xyyyy|yxxyx", "-yxyyx|xyyxy", "-yxyyx|xyyyx",
    "+yxyyx|yxyxy", "+yxyyx|yyyxx", "-yxyyy|xyxyx", "+yxyyy|xyyxx", "+yxyyy|yxyxx",
    "-yxyyy|yyxxx", "+yyxyx|xyyxy", "-yyxyx|xyyyx", "-yyxyx|yxyxy", "+yyxyx|yxyyx",
    "-yyxyy|xyxxy", "+yyxyy|xyxyx", "+yyxyy|yxxxy", "-yyxyy|yxxyx", "+yyyxx|xyyyx",
    "-yyyxx|yxyxy", "+yyyxx|yyxxy", "-yyyxx|yyyxx", "+yyyxy|xyxyx", "-yyyxy|xyyxx",
    "-yyyxy|yxyxx", "+yyyxy|yyxxx", "-yyyyx|xxyyx", "+yyyyx|xyxxy", "+yyyyx|xyxyx",
    "-yyyyx|yxxxy", "-yyyyx|yxyxx", "+yyyyx|yyxxx", "+yyyyy|xxyxx", "-yyyyy|xyxxx",
];

/// The 40-term balanced swap polynomial of degree 5+5 with value `tr(y)²det([x,y])²·t`.
pub fn q_xy() -> TensorPoly2 {
    let mut out = TensorPoly2::zero();
    for t in Q_TERMS {
        let sign = if t.starts_with('-') { -1 } else { 1 };
        let (l, r) = t[1..].split_once('|').expect("left|right");
        out.add_term(xy_word(l), xy_word(r), q(sign, 1));
    }
    out
}

/// `Σ tᵢ·fᵢ`: a sum of invariants times bracket forms.
#[derive(Clone, Debug, Default)]
pub struct TracedBracket {
    pub parts: Vec<(TPoly, BracketForm)>,
}

impl TracedBracket {
    pub fn new(t: TPoly, f: BracketForm) -> Self {
        TracedBracket { parts: vec![(t, f)] }
    }

    pub fn plus(mut self, t: TPoly, f: BracketForm) -> Self {
        self.parts.push((t, f));
        self
    }

    pub fn times(&self, t: &TPoly) -> Self {
        TracedBracket {
            parts: self.parts.iter().map(|(a, f)| (a.mul(t), f.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(2, 2);
        for (t, f) in &self.parts {
            out = &out + &f.eval(x, y).scale(&t.eval(x, y));
        }
        out
    }

    pub fn absorb(&self) -> NcPoly {
        let mut out = NcPoly::zero();
        for (t, f) in &self.parts {
            out = out.add(&absorb_invariant(t, f));
        }
        out
    }
}

/// `Σ cᵢ·Lᵢ⊗Rᵢ` with traced bracket slots.
#[derive(Clone, Debug, Default)]
pub struct TracedTensor {
    pub terms: Vec<(ExactScalar, TracedBracket, TracedBracket)>,
}

impl TracedTensor {
    pub fn times(&self, left: &TPoly, right: &TPoly) -> Self {
        TracedTensor {
            terms: self
                .terms
                .iter()
                .map(|(c, l, r)| (c.clone(), l.times(left), r.times(right)))
                .collect(),
        }
    }

    /// Value as an operator on `F²⊗F²`.
    pub fn eval(&self, x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(4, 4);
        for (c, l, r) in &self.terms {
            out = &out + &l.eval(x, y).kron(&r.eval(x, y)).scale(c);
        }
        out
    }

    pub fn absorb(&self) -> TensorPoly2 {
        let mut out = TensorPoly2::zero();
        for (c, l, r) in &self.terms {
            out = out.add(&TensorPoly2::tensor(&l.absorb(), &r.absorb()).scale(c));
        }
        out
    }
}

fn g(gen: Generator) -> TPoly {
    TPoly::gen(gen)
}

/// Splits a monomial into two factors of equal degree, or `None`.
fn halve(e: &Monomial) -> Option<(Monomial, Monomial)> {
    let factors = monomial_factors(e);
    let total = monomial_degree(e);
    if total % 2 == 1 {
        return None;
    }
    let n = factors.len();
    for mask in 0u32..(1 << n) {
        let deg: usize = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| factors[i].degree())
            .sum();
        if deg * 2 == total {
            let mut a = [0; 5];
            let mut b = [0; 5];
            for (i, f) in factors.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    a[f.index()] += 1;
                } else {
                    b[f.index()] += 1;
                }
            }
            return Some((a, b));
        }
    }
    None
}

/// `C·[x,y]²·P` for `C = tr(a)tr(b)`, split into a balanced sum of traced
/// brackets of slot degree 5.
///
/// Uses the expansion over `1, x, y, c` with `c = [x,y]`:
/// `s·t = 1⊗R + x⊗(yc − cy)/2 + y⊗(cx − xc)/2 + c⊗c/2`,
/// `R = s + xcy + (tr(xy) − tr(x)tr(y))c/2`, where `s = c²`.
pub fn balanced_split(a: Generator, b: Generator) -> Result<TracedTensor> {
    if a.degree() != 1 || b.degree() != 1 {
        return Err(Error::Precondition("C must be a product of two traces tr(x), tr(y)".into()));
    }
    let one = TPoly::one();
    let half = q(1, 2);
    let s = bracket_sq_form();
    let k = g(Generator::TrXY).sub(&g(Generator::TrX).mul(&g(Generator::TrY)));
    let r = TracedBracket::new(one.clone(), s.clone())
        .plus(one.clone(), BracketForm::term("x", "y", q(1, 1)))
        .plus(k.scale(&half), BracketForm::bracket());
    let c1 = g(a).mul(&g(b));
    let mut out = TracedTensor::default();
    out.terms.push((
        q(1, 1),
        TracedBracket::new(g(a), s.clone()),
        r.times(&g(b)),
    ));
    // s·x ⊗ C(yc − cy)/2 and s·y ⊗ C(cx − xc)/2
    out.terms.push((
        half.clone(),
        TracedBracket::new(one.clone(), s.border("", "x")),
        TracedBracket::new(
            c1.clone(),
            BracketForm::term("y", "", q(1, 1)).add(&BracketForm::term("", "y", q(-1, 1))),
        ),
    ));
    out.terms.push((
        half.clone(),
        TracedBracket::new(one.clone(), s.border("", "y")),
        TracedBracket::new(
            c1.clone(),
            BracketForm::term("", "x", q(1, 1)).add(&BracketForm::term("x", "", q(-1, 1))),
        ),
    ));
    // C·s·(c⊗c/2), each monomial of C·s split evenly.
    for (e, coef) in c1.mul(&bracket_square()).terms() {
        let (l, rr) = halve(e).expect("C·s has a degree-1 factor");
        out.terms.push((
            coef * &half,
            TracedBracket::new(TPoly::monomial(l, q(1, 1)), BracketForm::bracket()),
            TracedBracket::new(TPoly::monomial(rr, q(1, 1)), BracketForm::bracket()),
        ));
    }
    Ok(out)
}

/// The displayed split of `tr(y)²[x,y]⁴·t` before absorption, taken literally.
pub fn literal_teo_split() -> TracedTensor {
    let one = TPoly::one();
    let ty = g(Generator::TrY);
    let ty2 = ty.mul(&ty);
    let s = bracket_sq_form();
    let mut out = TracedTensor::default();
    out.terms.push((
        q(1, 1),
        TracedBracket::new(ty.clone(), s.clone()),
        TracedBracket::new(ty.clone(), s.add(&BracketForm::term("x", "y", q(1, 1)))),
    ));
    out.terms.push((
        q(-1, 1),
        TracedBracket::new(one.clone(), s.border("", "y")),
        TracedBracket::new(ty2.clone(), BracketForm::term("x", "", q(1, 1))),
    ));
    out.terms.push((
        q(-1, 1),
        TracedBracket::new(one.clone(), s.border("", "x")),
        TracedBracket::new(ty2, BracketForm::term("", "y", q(1, 1))),
    ));
    out.terms.push((
        q(1, 1),
        TracedBracket::new(ty.clone(), BracketForm::term("", "xy", q(1, 1))),
        TracedBracket::new(ty, s),
    ));
    out
}

/// Pure noncommutative balanced polynomial with value `tr(y)²det([x,y])²·t`.
pub fn balanced_q_prime() -> TensorPoly2 {
    balanced_split(Generator::TrY, Generator::TrY)
        .expect("degree-1 generators")
        .absorb()
}

/// The other two degree-10 members, `tr(x)²[x,y]⁴t` and `tr(x)tr(y)[x,y]⁴t`.
pub fn q_variant(a: Generator, b: Generator) -> Result<TensorPoly2> {
    Ok(balanced_split(a, b)?.absorb())
}

/// Invariant `A` of an [`esss_family`] member.
pub fn esss_invariant(deg1: &[Generator], deg2: &[Generator]) -> TPoly {
    TPoly::product_of(deg1).mul(&TPoly::product_of(deg2))
}

/// Balanced swap polynomial with value `A·[x,y]⁴·t` for `A` the product of
/// `deg1` (2h traces) and `deg2` (k degree-2 invariants).
pub fn esss_family(deg1: &[Generator], deg2: &[Generator]) -> Result<TensorPoly2> {
    Ok(esss_traced(deg1, deg2)?.absorb())
}

pub fn esss_traced(deg1: &[Generator], deg2: &[Generator]) -> Result<TracedTensor> {
    if deg1.iter().any(|g| g.degree() != 1) || deg2.iter().any(|g| g.degree() != 2) {
        return Err(Error::Precondition(
            "first list takes tr(x), tr(y); second takes det(x), det(y), tr(xy)".into(),
        ));
    }
    if deg1.is_empty() || deg1.len() % 2 == 1 {
        return Err(Error::Precondition("need 2h > 0 degree-1 factors".into()));
    }
    let h = deg1.len() / 2;
    let k = deg2.len();
    if k % 2 == 1 && h < 2 {
        return Err(Error::Precondition(format!(
            "k = {k} is odd, which needs h >= 2 (got h = {h})"
        )));
    }
    let l = k / 2;
    // Degree-2 factors: B1 gets ceil(k/2), B2 gets floor(k/2). For odd k the
    // left side then carries 2 more, balanced by 2 fewer traces in C2.
    let (b1, b2) = deg2.split_at(k - l);
    let rest = &deg1[2..];
    let c2_len = if k % 2 == 1 { h - 2 } else { h - 1 };
    let (c2, c3) = rest.split_at(c2_len);
    let left = TPoly::product_of(b1).mul(&TPoly::product_of(c2));
    let right = TPoly::product_of(b2).mul(&TPoly::product_of(c3));
    Ok(balanced_split(deg1[0], deg1[1])?.times(&left, &right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::swap_operator;
    use crate::ncpoly::{random_matrix, seeded_rng, Assignment, Letter};

    fn asg(x: &ExactMatrix, y: &ExactMatrix) -> Assignment {
        Assignment::from_pairs(2, [(Letter::x(1), x.clone()), (Letter::y(1), y.clone())]).unwrap()
    }

    fn check_value(t: &TensorPoly2, scalar: &TPoly, seed: u64) {
        let mut rng = seeded_rng(seed);
        let swap = swap_operator(2).unwrap().into_matrix();
        for _ in 0..5 {
            let x = random_matrix(&mut rng, 2);
            let y = random_matrix(&mut rng, 2);
            let v = t.eval_tensor(&asg(&x, &y)).unwrap().into_matrix();
            assert_eq!(v, swap.scale(&scalar.eval(&x, &y)));
        }
    }

    #[test]
    fn p_and_q_values() {
        let s = bracket_square();
        check_value(&p_xy(), &s, 1);
        let q = q_xy();
        assert_eq!(q.len(), 40);
        assert_eq!(q.slot_degree(), Some(5));
        let ty = TPoly::gen(Generator::TrY);
        check_value(&q, &ty.mul(&ty).mul(&s).mul(&s), 2);
    }

    #[test]
    fn q_prime_is_balanced_swap() {
        let qp = balanced_q_prime();
        assert_eq!(qp.slot_degree(), Some(5));
        let s = bracket_square();
        let ty = TPoly::gen(Generator::TrY);
        check_value(&qp, &ty.mul(&ty).mul(&s).mul(&s), 3);
        let tx = TPoly::gen(Generator::TrX);
        let q3 = q_variant(Generator::TrX, Generator::TrY).unwrap();
        assert_eq!(q3.slot_degree(), Some(5));
        check_value(&q3, &tx.mul(&ty).mul(&s).mul(&s), 4);
    }

    #[test]
    fn literal_split_is_not_a_swap() {
        let mut rng = seeded_rng(9);
        let swap = swap_operator(2).unwrap().into_matrix();
        let lit = literal_teo_split();
        let mut differs = false;
        for _ in 0..5 {
            let x = random_matrix(&mut rng, 2);
            let y = random_matrix(&mut rng, 2);
            let s = bracket_square().eval(&x, &y);
            let ty = y.trace().unwrap();
            let want = swap.scale(&(ty.pow(2) * s.pow(2)));
            differs |= lit.eval(&x, &y) != want;
        }
        assert!(differs);
    }

    #[test]
    fn esss_members() {
        use Generator::*;
        let s = bracket_square();
        let s2 = s.mul(&s);
        let cases: [(&[Generator], &[Generator]); 3] = [
            (&[TrX, TrY], &[DetX, TrXY]),
            (&[TrY, TrY, TrX, TrX], &[DetY]),
            (&[TrX, TrX, TrY, TrY], &[]),
        ];
        for (i, (d1, d2)) in cases.iter().enumerate() {
            let t = esss_family(d1, d2).unwrap();
            assert!(t.is_balanced());
            check_value(&t, &esss_invariant(d1, d2).mul(&s2), 20 + i as u64);
        }
        assert!(esss_family(&[TrY, TrY], &[DetX]).is_err());
        assert!(esss_family(&[], &[]).is_err());
    }
}
