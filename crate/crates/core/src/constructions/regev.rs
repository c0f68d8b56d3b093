//! Regev's central polynomial `F(X,Y) = Alt_X Alt_Y(m_1(X)m_1(Y)⋯m_d(X)m_d(Y))`.

use rand::Rng;

use super::tcal::{letters, regev_monomials};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar};
use crate::ncpoly::{
    alternate, random_matrix, split_alt_eval, Assignment, Contraction, Family, MonomialPattern,
    NcPoly, Word, DEFAULT_TERM_CAP,
};

#[derive(Clone, Debug)]
pub struct RegevPattern {
    pub d: usize,
    pub mx: Vec<Word>,
    pub my: Vec<Word>,
}

impl RegevPattern {
    pub fn new(d: usize) -> Self {
        RegevPattern {
            d,
            mx: regev_monomials(d, Family::X),
            my: regev_monomials(d, Family::Y),
        }
    }

    pub fn x_letters(&self) -> Vec<crate::ncpoly::Letter> {
        letters(Family::X, self.d * self.d)
    }

    pub fn y_letters(&self) -> Vec<crate::ncpoly::Letter> {
        letters(Family::Y, self.d * self.d)
    }

    /// `m_1(X)⊗⋯⊗m_d(X)` alternated in `X`.
    pub fn x_pattern(&self) -> MonomialPattern {
        MonomialPattern::new(self.mx.clone(), vec![self.x_letters()]).expect("valid blocks")
    }

    pub fn y_pattern(&self) -> MonomialPattern {
        MonomialPattern::new(self.my.clone(), vec![self.y_letters()]).expect("valid blocks")
    }

    /// The interleaved word `m_1(X)m_1(Y)⋯m_d(X)m_d(Y)`.
    pub fn word(&self) -> Word {
        let mut w = Word::one();
        for (a, b) in self.mx.iter().zip(&self.my) {
            w = w.concat(a).concat(b);
        }
        w
    }
}

/// `(−1)^{d−1} / ((d!)²(2d−1))`.
pub fn regev_multiplier(d: usize) -> ExactScalar {
    let f = ExactScalar::factorial(d as u32);
    let v = (&f * &f * ExactScalar::from(2 * d - 1)).recip().expect("nonzero");
    if d % 2 == 0 {
        -v
    } else {
        v
    }
}

/// Random `x_1…x_{d²}, y_1…y_{d²}`.
pub fn random_xy(rng: &mut impl Rng, d: usize) -> Assignment {
    let mut a = Assignment::new(d);
    for f in [Family::X, Family::Y] {
        for l in letters(f, d * d) {
            a.insert(l, random_matrix(rng, d)).expect("size d");
        }
    }
    a
}

/// Matrices assigned to `family_1 … family_{d²}`.
pub fn family_mats(asg: &Assignment, family: Family) -> Result<Vec<ExactMatrix>> {
    let d = asg.d();
    letters(family, d * d)
        .into_iter()
        .map(|l| asg.get(l).cloned())
        .collect()
}

/// `F(X,Y)` at a point, by split evaluation.
pub fn regev_f_value(d: usize, asg: &Assignment) -> Result<ExactMatrix> {
    if asg.d() != d {
        return Err(Error::Dimension(format!("assignment is {0}×{0}, not {d}×{d}", asg.d())));
    }
    let p = RegevPattern::new(d);
    let t = split_alt_eval(
        &p.x_pattern(),
        &p.y_pattern(),
        &Contraction::interleaved(d, d),
        asg,
    )?;
    Ok(t.into_matrix())
}

/// `F(X,Y)` as a symbolic polynomial; `((d²)!)²` terms.
pub fn regev_f_symbolic(d: usize) -> Result<NcPoly> {
    let p = RegevPattern::new(d);
    let once = alternate(&NcPoly::word(p.word()), &p.x_letters(), DEFAULT_TERM_CAP)?;
    alternate(&once, &p.y_letters(), DEFAULT_TERM_CAP)
}

/// Replaces `x_i` (or `y_i`) by `z·x_i` in the assignment.
pub fn left_multiply(asg: &Assignment, family: Family, z: &ExactMatrix) -> Result<Assignment> {
    let mut out = Assignment::new(asg.d());
    for (l, m) in asg.iter() {
        let v = if l.family() == family { z * m } else { m.clone() };
        out.insert(*l, v)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::tcal::t_cal;
    use crate::ncpoly::seeded_rng;

    #[test]
    fn multiplier_d2_and_routes_agree() {
        let mut rng = seeded_rng(21);
        let sym = regev_f_symbolic(2).unwrap();
        for _ in 0..3 {
            let a = random_xy(&mut rng, 2);
            let f = regev_f_value(2, &a).unwrap();
            assert_eq!(f, sym.eval(&a).unwrap());
            let tt = t_cal(&family_mats(&a, Family::X).unwrap()).unwrap()
                * t_cal(&family_mats(&a, Family::Y).unwrap()).unwrap();
            assert_eq!(f, ExactMatrix::scalar(2, &(tt * regev_multiplier(2))));
        }
        assert_eq!(regev_multiplier(2), ExactScalar::ratio(-1, 12));
        assert_eq!(regev_multiplier(3), ExactScalar::ratio(1, 180));
    }

    #[test]
    fn conductor_d2() {
        let mut rng = seeded_rng(22);
        let a = random_xy(&mut rng, 2);
        let z = random_matrix(&mut rng, 2);
        let f = regev_f_value(2, &a).unwrap();
        let dz = z.det().unwrap().pow(2);
        for fam in [Family::X, Family::Y] {
            let g = regev_f_value(2, &left_multiply(&a, fam, &z).unwrap()).unwrap();
            assert_eq!(g, f.scale(&dz));
        }
    }

    #[test]
    fn multiplier_d3() {
        let mut rng = seeded_rng(23);
        let a = random_xy(&mut rng, 3);
        let f = regev_f_value(3, &a).unwrap();
        let tt = t_cal(&family_mats(&a, Family::X).unwrap()).unwrap()
            * t_cal(&family_mats(&a, Family::Y).unwrap()).unwrap();
        assert_eq!(f, ExactMatrix::scalar(3, &(tt * regev_multiplier(3))));
    }
}
