//! Swap tensors from a dual basis: for `d²` monomials `A_i` with
//! `Δ = det(tr(A_iA_j)) ≠ 0`, the Cramer solution `B_i` gives `Σ A_i⊗B_i = Δ·swap`.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{swap_operator, ExactMatrix, ExactScalar, TensorOperator};
use crate::ncpoly::{random_assignment, seeded_rng, Assignment, Letter, Word};

#[derive(Clone, Debug, Serialize)]
pub struct DualCertificate {
    pub gram: ExactMatrix,
    pub delta: ExactScalar,
    /// `B_i = Δ Σ_j (G⁻¹)_{ij} A_j`.
    pub dual: Vec<ExactMatrix>,
    /// `Σ A_i ⊗ B_i == Δ·swap`.
    pub valid: bool,
}

/// `Σ a_i ⊗ b_i` as an order-2 operator.
pub fn tensor_sum(a: &[ExactMatrix], b: &[ExactMatrix]) -> Result<TensorOperator> {
    let d = a.first().map_or(0, |m| m.rows());
    let mut acc = ExactMatrix::zeros(d * d, d * d);
    for (x, y) in a.iter().zip(b) {
        acc = &acc + &x.kron(y);
    }
    TensorOperator::new(d, 2, acc)
}

/// Dual basis of evaluated matrices; `Singular` if the Gram matrix is.
pub fn dual_basis_from_matrices(mats: &[ExactMatrix]) -> Result<DualCertificate> {
    let n = mats.len();
    let d = mats.first().map_or(0, |m| m.rows());
    if n == 0 || d * d != n || mats.iter().any(|m| m.rows() != d || m.cols() != d) {
        return Err(Error::Dimension(format!(
            "need d² matrices of size d, got {n} of size {d}"
        )));
    }
    let mut gram = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, (&mats[i] * &mats[j]).trace()?);
        }
    }
    let delta = gram.det()?;
    if delta.is_zero() {
        return Err(Error::Singular);
    }
    let ginv = gram.inverse()?;
    let dual: Vec<ExactMatrix> = (0..n)
        .map(|i| {
            (0..n).fold(ExactMatrix::zeros(d, d), |acc, j| {
                &acc + &mats[j].scale(&(ginv.get(i, j) * &delta))
            })
        })
        .collect();
    let valid = tensor_sum(mats, &dual)? == swap_operator(d)?.scale(&delta);
    Ok(DualCertificate {
        gram,
        delta,
        dual,
        valid,
    })
}

/// Evaluates the words at `asg` and builds the dual basis there.
pub fn dual_basis_swap(words: &[Word], asg: &Assignment) -> Result<DualCertificate> {
    let mats: Vec<ExactMatrix> = words
        .iter()
        .map(|w| asg.eval_word(w))
        .collect::<Result<_>>()?;
    dual_basis_from_matrices(&mats)
}

/// Retries at fresh random points while the Gram matrix is singular.
pub fn dual_basis_swap_random(
    words: &[Word],
    d: usize,
    rng: &mut impl Rng,
    tries: usize,
) -> Result<(Assignment, DualCertificate)> {
    let mut letters: Vec<Letter> = words.iter().flat_map(|w| w.letters().to_vec()).collect();
    letters.sort();
    letters.dedup();
    for _ in 0..tries {
        let asg = random_assignment(rng, d, &letters);
        match dual_basis_swap(words, &asg) {
            Err(Error::Singular) => continue,
            other => return other.map(|c| (asg, c)),
        }
    }
    Err(Error::Singular)
}

/// `1, x, y, x², xy, yx, y², x²y, xy²` for `d = 3`; `1, x, y, xy` for `d = 2`.
pub fn standard_words(d: usize) -> Result<Vec<Word>> {
    let list: &[&str] = match d {
        2 => &["1", "x1", "y1", "x1.y1"],
        3 => &[
            "1", "x1", "y1", "x1.x1", "x1.y1", "y1.x1", "y1.y1", "x1.x1.y1", "x1.y1.y1",
        ],
        _ => return Err(Error::Precondition(format!("no standard word list for d = {d}"))),
    };
    Ok(list
        .iter()
        .map(|s| if *s == "1" { Word::one() } else { s.parse().expect("literal") })
        .collect())
}

pub fn dual_basis_default(d: usize, seed: u64) -> Result<(Assignment, DualCertificate)> {
    let mut rng = seeded_rng(seed);
    dual_basis_swap_random(&standard_words(d)?, d, &mut rng, 16)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_by_two::p_xy;

    #[test]
    fn matrix_units() {
        let units: Vec<ExactMatrix> = (0..4).map(|k| ExactMatrix::unit(2, k / 2, k % 2)).collect();
        let c = dual_basis_from_matrices(&units).unwrap();
        assert!(c.valid);
        assert_eq!(c.delta.abs(), ExactScalar::one());
        for (k, b) in c.dual.iter().enumerate() {
            let (i, j) = (k / 2, k % 2);
            assert_eq!(b.scale(&c.delta.recip().unwrap()), ExactMatrix::unit(2, j, i));
        }
    }

    #[test]
    fn d2_matches_p() {
        let (asg, c) = dual_basis_default(2, 3).unwrap();
        assert!(c.valid);
        let p = p_xy().eval_tensor(&asg).unwrap();
        let s = crate::exact::decompose_sigma2(&p).unwrap();
        assert!(s.residual_zero && s.a.is_zero() && !s.b.is_zero());
    }

    #[test]
    fn d3_and_singular() {
        let (_, c) = dual_basis_default(3, 4).unwrap();
        assert!(c.valid);
        let words = vec![Word::one(), "x1".parse().unwrap(), "x1.x1".parse().unwrap(), "x1.x1.x1".parse().unwrap()];
        let mut rng = seeded_rng(1);
        assert!(matches!(dual_basis_swap_random(&words, 2, &mut rng, 3), Err(Error::Singular)));
    }
}
