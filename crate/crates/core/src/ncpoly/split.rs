//! Split evaluation of a doubly alternated interleaved product.
//!
//! For `Alt_X Alt_Y` of an expression built multilinearly from the factors of
//! `m_1(X) ⊗ ⋯ ⊗ m_p(X)` and `n_1(Y) ⊗ ⋯ ⊗ n_q(Y)`, the double sum factors:
//! evaluate `T_X = Alt_X(⊗ m_i)` and `T_Y = Alt_Y(⊗ n_j)` separately, then
//! contract them according to how the factors are multiplied together.

use std::collections::HashMap;

use super::poly::Assignment;
use super::stream::{alt_eval_stream, MonomialPattern};
use crate::error::{Error, Result};
use crate::exact::tensor::unflatten;
use crate::exact::{ExactMatrix, ExactScalar, TensorOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operand {
    X,
    Y,
}

/// Output slot `r` is the product, in order, of the listed tensor factors;
/// an empty list is the identity. Every factor of both operands is used once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub out: Vec<Vec<(Operand, usize)>>,
}

impl Contraction {
    pub fn new(out: Vec<Vec<(Operand, usize)>>) -> Self {
        Contraction { out }
    }

    /// One output slot holding `x_0 y_0 x_1 y_1 ⋯`.
    pub fn interleaved(p: usize, q: usize) -> Self {
        let mut chain = Vec::new();
        for i in 0..p.max(q) {
            if i < p {
                chain.push((Operand::X, i));
            }
            if i < q {
                chain.push((Operand::Y, i));
            }
        }
        Contraction { out: vec![chain] }
    }

    fn validate(&self, p: usize, q: usize) -> Result<()> {
        let mut seen: HashMap<(Operand, usize), usize> = HashMap::new();
        for chain in &self.out {
            for &f in chain {
                *seen.entry(f).or_default() += 1;
            }
        }
        let ok = (0..p).all(|i| seen.get(&(Operand::X, i)) == Some(&1))
            && (0..q).all(|i| seen.get(&(Operand::Y, i)) == Some(&1))
            && seen.len() == p + q;
        if !ok || self.out.is_empty() {
            return Err(Error::Dimension(format!(
                "contraction does not use the {p} X-factors and {q} Y-factors exactly once"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum End {
    Row,
    Col,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Endpoint {
    Factor(Operand, usize, End),
    Out(usize, End),
}

/// Contracts two operators according to `c`.
pub fn contract(tx: &TensorOperator, ty: &TensorOperator, c: &Contraction) -> Result<TensorOperator> {
    let (p, q) = (tx.n(), ty.n());
    c.validate(p, q)?;
    if tx.d() != ty.d() {
        return Err(Error::Dimension("operands of different local dimension".into()));
    }
    let d = tx.d();
    // Each index class joins exactly two endpoints.
    let mut pairs: Vec<(Endpoint, Endpoint)> = Vec::new();
    for (r, chain) in c.out.iter().enumerate() {
        if chain.is_empty() {
            pairs.push((Endpoint::Out(r, End::Row), Endpoint::Out(r, End::Col)));
            continue;
        }
        let f = |k: usize, e: End| Endpoint::Factor(chain[k].0, chain[k].1, e);
        pairs.push((Endpoint::Out(r, End::Row), f(0, End::Row)));
        for k in 0..chain.len() - 1 {
            pairs.push((f(k, End::Col), f(k + 1, End::Row)));
        }
        pairs.push((f(chain.len() - 1, End::Col), Endpoint::Out(r, End::Col)));
    }
    let mut class_of: HashMap<Endpoint, usize> = HashMap::new();
    for (i, (a, b)) in pairs.iter().enumerate() {
        class_of.insert(*a, i);
        class_of.insert(*b, i);
    }
    let nclass = pairs.len();
    let touches = |op: Operand| -> Vec<bool> {
        (0..nclass)
            .map(|i| {
                let (a, b) = pairs[i];
                [a, b]
                    .iter()
                    .any(|e| matches!(e, Endpoint::Factor(o, _, _) if *o == op))
            })
            .collect()
    };
    let tx_cls = touches(Operand::X);
    let ty_cls = touches(Operand::Y);
    let shared: Vec<usize> = (0..nclass).filter(|&i| tx_cls[i] && ty_cls[i]).collect();
    let free: Vec<usize> = (0..nclass).filter(|&i| !tx_cls[i] && !ty_cls[i]).collect();

    // Assign class values from one operand's entry; None if inconsistent.
    let assign = |op: Operand, n: usize, row: usize, col: usize| -> Option<Vec<Option<usize>>> {
        let rd = unflatten(row, d, n);
        let cd = unflatten(col, d, n);
        let mut vals = vec![None; nclass];
        for i in 0..n {
            for (e, v) in [(End::Row, rd[i]), (End::Col, cd[i])] {
                let k = class_of[&Endpoint::Factor(op, i, e)];
                match vals[k] {
                    Some(w) if w != v => return None,
                    _ => vals[k] = Some(v),
                }
            }
        }
        Some(vals)
    };

    let entries = |t: &TensorOperator| -> Vec<(usize, usize, ExactScalar)> {
        let m = t.matrix();
        let mut out = Vec::new();
        for r in 0..m.rows() {
            for col in 0..m.cols() {
                let v = m.get(r, col);
                if !v.is_zero() {
                    out.push((r, col, v.clone()));
                }
            }
        }
        out
    };

    let mut by_key: HashMap<Vec<usize>, Vec<(Vec<Option<usize>>, ExactScalar)>> = HashMap::new();
    for (r, col, v) in entries(ty) {
        if let Some(vals) = assign(Operand::Y, q, r, col) {
            let key = shared.iter().map(|&k| vals[k].expect("assigned")).collect();
            by_key.entry(key).or_default().push((vals, v));
        }
    }

    let nout = c.out.len();
    let side = d.pow(nout as u32);
    let mut acc: HashMap<(usize, usize), ExactScalar> = HashMap::new();
    let free_combos = d.pow(free.len() as u32);
    for (r, col, v) in entries(tx) {
        let Some(xv) = assign(Operand::X, p, r, col) else {
            continue;
        };
        let key: Vec<usize> = shared.iter().map(|&k| xv[k].expect("assigned")).collect();
        let Some(matches) = by_key.get(&key) else {
            continue;
        };
        for (yv, w) in matches {
            let prod = &v * w;
            for fc in 0..free_combos {
                let fd = unflatten(fc, d, free.len());
                let value_of = |k: usize| -> usize {
                    xv[k].or(yv[k]).unwrap_or_else(|| {
                        fd[free.iter().position(|&f| f == k).expect("free class")]
                    })
                };
                let mut orow = 0;
                let mut ocol = 0;
                for s in 0..nout {
                    orow = orow * d + value_of(class_of[&Endpoint::Out(s, End::Row)]);
                    ocol = ocol * d + value_of(class_of[&Endpoint::Out(s, End::Col)]);
                }
                *acc.entry((orow, ocol)).or_insert_with(ExactScalar::zero) += &prod;
            }
        }
    }
    let mut mat = ExactMatrix::zeros(side, side);
    for ((r, col), v) in acc {
        mat.set(r, col, v);
    }
    TensorOperator::new(d, nout, mat)
}

/// Evaluates both alternated factors by streaming, then contracts.
pub fn split_alt_eval(
    xpattern: &MonomialPattern,
    ypattern: &MonomialPattern,
    contraction: &Contraction,
    asg: &Assignment,
) -> Result<TensorOperator> {
    contraction.validate(xpattern.slots().len(), ypattern.slots().len())?;
    let tx = alt_eval_stream(xpattern, asg)?;
    let ty = alt_eval_stream(ypattern, asg)?;
    contract(&tx, &ty, contraction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::alternate::{alternate, DEFAULT_TERM_CAP};
    use crate::ncpoly::poly::NcPoly;
    use crate::ncpoly::word::{Letter, Word};

    fn asg() -> Assignment {
        let mut a = Assignment::new(2);
        let vals = [[1, 2, 3, -1], [0, 1, 5, 2], [2, -3, 1, 1], [-1, 4, 2, 0], [3, 3, -2, 1], [1, 0, 0, 2]];
        for (i, v) in vals.iter().enumerate() {
            let m = ExactMatrix::from_i64(&[vec![v[0], v[1]], vec![v[2], v[3]]]).unwrap();
            a.insert(Letter::x(i as u32 + 1), m.clone()).unwrap();
            a.insert(Letter::y(i as u32 + 1), m.transpose()).unwrap();
        }
        a
    }

    #[test]
    fn interleaved_matches_direct() {
        let xs: Vec<Letter> = (1..=3).map(Letter::x).collect();
        let ys: Vec<Letter> = (1..=3).map(Letter::y).collect();
        let xp = MonomialPattern::new(
            vec!["x1".parse().unwrap(), "x2.x3".parse().unwrap()],
            vec![xs.clone()],
        )
        .unwrap();
        let yp = MonomialPattern::new(
            vec!["y1.y2".parse().unwrap(), "y3".parse().unwrap()],
            vec![ys.clone()],
        )
        .unwrap();
        let got = split_alt_eval(&xp, &yp, &Contraction::interleaved(2, 2), &asg()).unwrap();
        let w: Word = "x1.y1.y2.x2.x3.y3".parse().unwrap();
        let direct = alternate(
            &alternate(&NcPoly::word(w), &xs, DEFAULT_TERM_CAP).unwrap(),
            &ys,
            DEFAULT_TERM_CAP,
        )
        .unwrap()
        .eval(&asg())
        .unwrap();
        assert_eq!(got.into_matrix(), direct);
    }

    #[test]
    fn two_slot_output_and_identity_slot() {
        let xs: Vec<Letter> = (1..=2).map(Letter::x).collect();
        let ys: Vec<Letter> = (1..=2).map(Letter::y).collect();
        let xp = MonomialPattern::new(vec!["x1".parse().unwrap(), "x2".parse().unwrap()], vec![xs.clone()])
            .unwrap();
        let yp = MonomialPattern::new(vec!["y1".parse().unwrap(), "y2".parse().unwrap()], vec![ys.clone()])
            .unwrap();
        // (x_0 y_1) ⊗ (y_0 x_1) ⊗ 1
        let c = Contraction::new(vec![
            vec![(Operand::X, 0), (Operand::Y, 1)],
            vec![(Operand::Y, 0), (Operand::X, 1)],
            vec![],
        ]);
        let got = split_alt_eval(&xp, &yp, &c, &asg()).unwrap();
        let a = asg();
        let mut want = TensorOperator::zero(2, 3).unwrap();
        for (sx, ex) in [((1, 2), 1), ((2, 1), -1)] {
            for (sy, ey) in [((1, 2), 1), ((2, 1), -1)] {
                let l = a.eval_word(&Word::new(vec![Letter::x(sx.0), Letter::y(sy.1)])).unwrap();
                let r = a.eval_word(&Word::new(vec![Letter::y(sy.0), Letter::x(sx.1)])).unwrap();
                let t = TensorOperator::kron_all(&[l, r, ExactMatrix::identity(2)])
                    .unwrap()
                    .scale(&ExactScalar::from(ex * ey));
                want = want.try_add(&t).unwrap();
            }
        }
        assert_eq!(got, want);
    }

    #[test]
    fn bad_descriptor() {
        let c = Contraction::new(vec![vec![(Operand::X, 0), (Operand::X, 0)]]);
        assert!(c.validate(1, 0).is_err());
        assert!(Contraction::interleaved(2, 1).validate(2, 2).is_err());
    }
}
