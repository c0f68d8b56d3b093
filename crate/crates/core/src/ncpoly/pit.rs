//! Seeded random evaluation points and identity testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::Assignment;
use super::tensor::TensorPoly2;
use super::word::Letter;
use crate::error::Result;
use crate::exact::{ExactMatrix, ExactScalar, TensorOperator};

pub const ENTRY_BOUND: i64 = 9;

/// Cap on the number of matrix-unit assignments tried when upgrading a
/// verdict to a proof.
pub const EXHAUSTIVE_CAP: u128 = 200_000;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer matrix with entries uniform in `[-9, 9]`.
pub fn random_matrix(rng: &mut impl Rng, d: usize) -> ExactMatrix {
    let entries = (0..d * d)
        .map(|_| ExactScalar::from(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND)))
        .collect();
    ExactMatrix::new(d, d, entries).expect("d >= 1")
}

/// Random integer matrix with zero trace.
pub fn random_traceless(rng: &mut impl Rng, d: usize) -> ExactMatrix {
    let mut m = random_matrix(rng, d);
    let t = m.trace().expect("square");
    let last = m.get(d - 1, d - 1) - &t;
    m.set(d - 1, d - 1, last);
    m
}

/// Draws matrices for `letters` in the given order.
pub fn random_assignment(rng: &mut impl Rng, d: usize, letters: &[Letter]) -> Assignment {
    let mut a = Assignment::new(d);
    for &l in letters {
        a.insert(l, random_matrix(rng, d)).expect("size d");
    }
    a
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TpiVerdict {
    /// A nonzero value at an explicit point.
    NotIdentity {
        witness: Assignment,
        value: TensorOperator,
    },
    /// Zero at every random trial; not multilinear or too large to exhaust.
    PlausiblyIdentity { trials: usize },
    /// Multilinear and zero on every assignment of matrix units.
    ProvedIdentity { trials: usize, unit_assignments: u128 },
}

impl TpiVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            TpiVerdict::NotIdentity { .. } => "not identity",
            TpiVerdict::PlausiblyIdentity { .. } => "plausibly identity",
            TpiVerdict::ProvedIdentity { .. } => "proved identity",
        }
    }

    pub fn is_identity(&self) -> bool {
        !matches!(self, TpiVerdict::NotIdentity { .. })
    }
}

fn is_multilinear(t: &TensorPoly2) -> bool {
    let letters = t.letters();
    t.terms().all(|(a, b, _)| {
        letters
            .iter()
            .all(|&l| a.count(l) + b.count(l) == 1)
    })
}

/// Randomized test for `t` vanishing on all d×d matrices.
pub fn is_tpi(t: &TensorPoly2, d: usize, trials: usize, seed: u64) -> Result<TpiVerdict> {
    let letters: Vec<Letter> = t.letters().into_iter().collect();
    let mut rng = seeded_rng(seed);
    for _ in 0..trials.max(1) {
        let asg = random_assignment(&mut rng, d, &letters);
        let value = t.eval_tensor(&asg)?;
        if !value.is_zero() {
            return Ok(TpiVerdict::NotIdentity {
                witness: asg,
                value,
            });
        }
    }
    if !is_multilinear(t) {
        return Ok(TpiVerdict::PlausiblyIdentity { trials });
    }
    let units = (d * d) as u128;
    let total = units
        .checked_pow(letters.len() as u32)
        .unwrap_or(u128::MAX);
    if total > EXHAUSTIVE_CAP {
        return Ok(TpiVerdict::PlausiblyIdentity { trials });
    }
    let basis: Vec<ExactMatrix> = (0..d * d)
        .map(|k| ExactMatrix::unit(d, k / d, k % d))
        .collect();
    for code in 0..total {
        let mut asg = Assignment::new(d);
        let mut r = code;
        for &l in &letters {
            asg.insert(l, basis[(r % units) as usize].clone())?;
            r /= units;
        }
        let value = t.eval_tensor(&asg)?;
        if !value.is_zero() {
            return Ok(TpiVerdict::NotIdentity {
                witness: asg,
                value,
            });
        }
    }
    Ok(TpiVerdict::ProvedIdentity {
        trials,
        unit_assignments: total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::alternate::standard_poly;
    use crate::ncpoly::poly::NcPoly;

    #[test]
    fn trivial_identity_and_witness() {
        let x = NcPoly::var(Letter::x(1));
        let one = NcPoly::one();
        let t = TensorPoly2::tensor(&x, &one).sub(&TensorPoly2::tensor(&x, &one));
        assert!(matches!(is_tpi(&t, 2, 3, 1).unwrap(), TpiVerdict::ProvedIdentity { .. }));
        let t = TensorPoly2::tensor(&x, &one);
        assert!(matches!(is_tpi(&t, 2, 3, 1).unwrap(), TpiVerdict::NotIdentity { .. }));
    }

    #[test]
    fn st5_is_proved_at_d2() {
        let t = TensorPoly2::tensor(&standard_poly(5).unwrap(), &NcPoly::one());
        let v = is_tpi(&t, 2, 3, 5).unwrap();
        assert_eq!(
            v,
            TpiVerdict::ProvedIdentity {
                trials: 3,
                unit_assignments: 1024
            }
        );
    }

    #[test]
    fn traceless_draws() {
        let mut rng = seeded_rng(3);
        for _ in 0..10 {
            assert!(random_traceless(&mut rng, 3).trace().unwrap().is_zero());
        }
    }
}
