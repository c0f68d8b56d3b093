//! Central and swap polynomials from the Capelli polynomial `f = C_{d²}`.
//!
//! For every term `a·x_i·b` of `f` the companion `f_i` collects `b·a`, so that
//! `tr(x_j f_i) = δ_ij tr(f)`. Then `H = Σ x_i ⊗ f_i` is a swap polynomial with
//! value `tr(f)` and `h = Σ x_i ζ f_i = tr(ζ) tr(f)` is central.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{swap_operator, ExactMatrix, ExactScalar};
use crate::ncpoly::{
    capelli_poly, random_assignment, random_traceless, seeded_rng, Assignment, Letter, NcPoly,
    TensorPoly2, Word,
};

/// Stand-in for the middle variable `y_0`.
pub fn middle_letter() -> Letter {
    Letter::zeta(1)
}

#[derive(Clone, Debug)]
pub struct CapelliSwap {
    pub d: usize,
    pub f: NcPoly,
    pub companions: Vec<NcPoly>,
    pub h_central: NcPoly,
    pub h_swap: TensorPoly2,
}

/// `f_i` for each `x_i` occurring exactly once in every term of `f`.
pub fn companions(f: &NcPoly, xs: &[Letter]) -> Result<Vec<NcPoly>> {
    let mut out = vec![NcPoly::zero(); xs.len()];
    for (w, c) in f.terms() {
        for (i, &x) in xs.iter().enumerate() {
            let ls = w.letters();
            let pos: Vec<usize> = (0..ls.len()).filter(|&k| ls[k] == x).collect();
            if pos.len() != 1 {
                return Err(Error::NotMultilinear(format!("{x} in {w}")));
            }
            let a = Word::new(ls[..pos[0]].to_vec());
            let b = Word::new(ls[pos[0] + 1..].to_vec());
            out[i].add_term(b.concat(&a), c.clone());
        }
    }
    Ok(out)
}

pub fn capelli_swap(d: usize) -> Result<CapelliSwap> {
    if d != 2 {
        return Err(Error::Budget {
            estimated: (1..=(d * d) as u128).product(),
            budget: 24,
        });
    }
    let m = d * d;
    let f = capelli_poly(m)?;
    let xs: Vec<Letter> = (1..=m as u32).map(Letter::x).collect();
    let companions = companions(&f, &xs)?;
    let mut h_swap = TensorPoly2::zero();
    for (x, fi) in xs.iter().zip(&companions) {
        h_swap = h_swap.add(&TensorPoly2::tensor(&NcPoly::var(*x), fi));
    }
    let h_central = h_swap.sandwich(middle_letter());
    Ok(CapelliSwap {
        d,
        f,
        companions,
        h_central,
        h_swap,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CapelliReport {
    pub points: usize,
    /// `tr(x_i f_i) = tr(f)` for all `i`.
    pub trace_pairing: bool,
    /// `tr(x_j f_i) = 0` for `j ≠ i`.
    pub off_diagonal_zero: bool,
    /// `H = tr(f)·swap`.
    pub swap_value: bool,
    /// `h = tr(ζ) tr(f)·1`, and `h = 0` for traceless `ζ`.
    pub central: bool,
    pub vanishes_on_traceless: bool,
    pub nondegenerate: bool,
}

impl CapelliReport {
    pub fn ok(&self) -> bool {
        self.trace_pairing
            && self.off_diagonal_zero
            && self.swap_value
            && self.central
            && self.vanishes_on_traceless
            && self.nondegenerate
    }
}

fn letters_of(c: &CapelliSwap) -> Vec<Letter> {
    let mut ls: Vec<Letter> = c.f.letters().into_iter().collect();
    ls.push(middle_letter());
    ls
}

pub fn capelli_check(c: &CapelliSwap, points: usize, seed: u64) -> Result<CapelliReport> {
    let d = c.d;
    let mut rng = seeded_rng(seed);
    let swap = swap_operator(d)?;
    let xs: Vec<Letter> = (1..=(d * d) as u32).map(Letter::x).collect();
    let mut rep = CapelliReport {
        points,
        trace_pairing: true,
        off_diagonal_zero: true,
        swap_value: true,
        central: true,
        vanishes_on_traceless: true,
        nondegenerate: false,
    };
    for _ in 0..points {
        let asg: Assignment = random_assignment(&mut rng, d, &letters_of(c));
        let trf = c.f.eval(&asg)?.trace()?;
        rep.nondegenerate |= !trf.is_zero();
        for (i, fi) in c.companions.iter().enumerate() {
            let fv = fi.eval(&asg)?;
            for (j, x) in xs.iter().enumerate() {
                let t = (asg.get(*x)? * &fv).trace()?;
                if i == j {
                    rep.trace_pairing &= t == trf;
                } else {
                    rep.off_diagonal_zero &= t.is_zero();
                }
            }
        }
        rep.swap_value &= c.h_swap.eval_tensor(&asg)? == swap.scale(&trf);
        let zeta = asg.get(middle_letter())?.trace()?;
        let h = c.h_central.eval(&asg)?;
        rep.central &= h == ExactMatrix::scalar(d, &(&zeta * &trf));
        let mut asg0 = asg.clone();
        asg0.insert(middle_letter(), random_traceless(&mut rng, d))?;
        rep.vanishes_on_traceless &= c.h_central.eval(&asg0)?.is_zero();
    }
    Ok(rep)
}

/// `tr(f)` restricted to the `x` family, for callers that only need the scalar.
pub fn capelli_scalar(c: &CapelliSwap, asg: &Assignment) -> Result<ExactScalar> {
    c.f.eval(asg)?.trace()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capelli_d2() {
        let c = capelli_swap(2).unwrap();
        assert_eq!(c.f.len(), 24);
        assert_eq!(c.h_swap.len(), 4 * 24);
        let rep = capelli_check(&c, 5, 31).unwrap();
        assert!(rep.ok(), "{rep:?}");
    }
}
