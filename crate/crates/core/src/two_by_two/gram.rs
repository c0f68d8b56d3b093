//! The trace form on the basis `1, x, y, xy` and its cofactor matrix.

use serde::Serialize;

use super::bracket::{w_poly, BracketForm};
use super::tpoly::{bracket_square, Generator, TPoly};
use crate::error::{Error, Result};
use crate::exact::{swap_operator, ExactMatrix, ExactScalar};
use crate::ncpoly::{Assignment, Letter, NcPoly};

fn basis(x: &ExactMatrix, y: &ExactMatrix) -> [ExactMatrix; 4] {
    [ExactMatrix::identity(2), x.clone(), y.clone(), x * y]
}

/// `D = (tr(bᵢbⱼ))` for `b = (1, x, y, xy)`.
pub fn gram_matrix(x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
    let b = basis(x, y);
    let mut d = ExactMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            d.set(i, j, (&b[i] * &b[j]).trace().expect("square"));
        }
    }
    d
}

/// The `Λ` matrix as printed, with `A` as printed.
pub fn printed_lambda() -> [[TPoly; 4]; 4] {
    use Generator::*;
    let g = TPoly::gen;
    let c = |k: i64| ExactScalar::from(k);
    let m = |gs: &[Generator], k: i64| TPoly::product_of(gs).scale(&c(k));
    let a = m(&[DetX, TrY, TrY], 1)
        .add(&m(&[TrXY, TrX, TrY], -1))
        .add(&m(&[TrX, TrX, DetY], 1))
        .add(&m(&[DetX, DetY], -2))
        .add(&m(&[TrXY, TrXY], 1));
    let e03 = m(&[TrX, TrY], 1).sub(&g(TrXY));
    [
        [a.scale(&c(2)), m(&[TrX, DetY], -1), m(&[DetX, TrY], -1), e03.clone()],
        [m(&[TrX, DetY], -1), m(&[DetY], 2), g(TrXY), m(&[TrY], -1)],
        [m(&[DetX, TrY], -1), g(TrXY), m(&[DetX], 2), m(&[TrX], -1)],
        [e03, m(&[TrY], -1), m(&[TrX], -1), TPoly::constant(c(2))],
    ]
}

/// Dual basis to `1, x, y, xy` scaled by `[x,y]²`, as printed.
pub fn printed_dual_basis() -> [NcPoly; 4] {
    let sq = BracketForm::term("", "xy", ExactScalar::one())
        .add(&BracketForm::term("", "yx", -ExactScalar::one()));
    [
        sq.add(&BracketForm::term("x", "y", ExactScalar::one())).expand(),
        BracketForm::term("", "y", -ExactScalar::one()).expand(),
        BracketForm::term("x", "", -ExactScalar::one()).expand(),
        BracketForm::bracket().expand(),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub gram: Vec<Vec<ExactScalar>>,
    pub det: ExactScalar,
    /// `det([x,y])²`, the scalar value of `[x,y]⁴`.
    pub bracket_fourth: ExactScalar,
    pub det_matches: bool,
    pub adjugate: Vec<Vec<ExactScalar>>,
    /// `adjugate / det([x,y])`.
    pub lambda_computed: Vec<Vec<ExactScalar>>,
    pub lambda_printed: Vec<Vec<ExactScalar>>,
    /// Entries `(i, j)` where the two disagree.
    pub lambda_mismatches: Vec<(usize, usize)>,
    /// `Σ bᵢ ⊗ [x,y]²bᵢ*` equals the value of `P`.
    pub dual_matches_p: bool,
    /// `[x,y]²bᵢ*` equals the printed dual basis element, per `i`.
    pub dual_matches_printed: Vec<bool>,
}

fn rows(m: &ExactMatrix) -> Vec<Vec<ExactScalar>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect()
}

pub fn trace_gram(x: &ExactMatrix, y: &ExactMatrix) -> Result<GramReport> {
    if x.rows() != 2 || !x.is_square() || y.rows() != 2 || !y.is_square() {
        return Err(Error::Dimension("trace_gram takes a pair of 2×2 matrices".into()));
    }
    let d = gram_matrix(x, y);
    let det = d.det()?;
    let c = &(x * y) - &(y * x);
    let det_c = c.det()?;
    let bracket_fourth = &det_c * &det_c;
    let adj = d.adjugate()?;
    let s = bracket_square().eval(x, y);
    if det_c.is_zero() {
        return Err(Error::Degenerate("[x,y] is singular at this point".into()));
    }
    let lambda = adj.scale(&det_c.recip()?);
    let printed = printed_lambda();
    let mut lp = ExactMatrix::zeros(4, 4);
    let mut mismatches = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let v = printed[i][j].eval(x, y);
            if &v != lambda.get(i, j) {
                mismatches.push((i, j));
            }
            lp.set(i, j, v);
        }
    }
    // bᵢ* = Σ_j (D⁻¹)ᵢⱼ bⱼ; scaled by s.
    let dinv = d.inverse()?;
    let b = basis(x, y);
    let asg = Assignment::from_pairs(2, [(Letter::x(1), x.clone()), (Letter::y(1), y.clone())])?;
    let printed_dual = printed_dual_basis();
    let mut total = ExactMatrix::zeros(4, 4);
    let mut dual_matches_printed = Vec::new();
    for i in 0..4 {
        let mut dual = ExactMatrix::zeros(2, 2);
        for j in 0..4 {
            dual = &dual + &b[j].scale(dinv.get(i, j));
        }
        let scaled = dual.scale(&s);
        dual_matches_printed.push(scaled == printed_dual[i].eval(&asg)?);
        total = &total + &b[i].kron(&scaled);
    }
    let p_value = super::swap::p_xy().eval_tensor(&asg)?.into_matrix();
    let swap_ok = total == swap_operator(2)?.into_matrix().scale(&s);
    Ok(GramReport {
        gram: rows(&d),
        det_matches: det == -bracket_fourth.clone(),
        det,
        bracket_fourth,
        adjugate: rows(&adj),
        lambda_computed: rows(&lambda),
        lambda_printed: rows(&lp),
        lambda_mismatches: mismatches,
        dual_matches_p: swap_ok && total == p_value,
        dual_matches_printed,
    })
}

/// The basis words `1, x, y, xy`.
pub fn basis_words() -> [NcPoly; 4] {
    [NcPoly::one(), w_poly("x"), w_poly("y"), w_poly("xy")]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::{random_matrix, seeded_rng};

    #[test]
    fn nilpotent_pair() {
        let x = ExactMatrix::unit(2, 0, 1);
        let y = ExactMatrix::unit(2, 1, 0);
        let d = gram_matrix(&x, &y);
        let want = ExactMatrix::from_i64(&[
            vec![2, 0, 0, 1],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 0],
            vec![1, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(d, want);
        assert_eq!(d.det().unwrap(), ExactScalar::from(-1));
    }

    #[test]
    fn random_points() {
        let mut rng = seeded_rng(17);
        for _ in 0..10 {
            let x = random_matrix(&mut rng, 2);
            let y = random_matrix(&mut rng, 2);
            let r = trace_gram(&x, &y).unwrap();
            assert!(r.det_matches);
            assert!(r.dual_matches_p);
            assert_eq!(r.dual_matches_printed, vec![true; 4]);
            // Only the corner entry of the printed matrix is off.
            assert_eq!(r.lambda_mismatches, vec![(0, 0)]);
            let twice = &r.lambda_computed[0][0] * ExactScalar::from(2);
            assert_eq!(twice, r.lambda_printed[0][0]);
        }
    }
}
