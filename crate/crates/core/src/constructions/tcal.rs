//! The alternating invariant `𝒯_d` and its primitive factors.
//!
//! `𝒯_d(x_1,…,x_{d²}) = Σ_σ ε_σ Π_i tr(m_i(x_σ))` with `m_i` the consecutive
//! blocks of lengths `1, 3, …, 2d−1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar};
use crate::ncpoly::{Family, Letter, Word};

/// Largest number of permutations summed by [`alternating_trace_product`].
pub const DEFAULT_LEAF_BUDGET: u128 = 100_000_000;

/// `m_i = v_{(i−1)²+1} ⋯ v_{i²}`, for `i = 1..=d`.
pub fn regev_monomials(d: usize, family: Family) -> Vec<Word> {
    (1..=d as u32)
        .map(|i| Word::run(family, (i - 1) * (i - 1) + 1, i * i))
        .collect()
}

/// `1, 3, …, 2d−1`.
pub fn delta_profile(d: usize) -> Vec<usize> {
    (1..=d).map(|i| 2 * i - 1).collect()
}

/// `C_d = 1!3!⋯(2d−1)! / (1!2!⋯(d−1)!)`, without sign.
pub fn c_d(d: usize) -> ExactScalar {
    let mut num = ExactScalar::one();
    for i in 1..=d {
        num = num * ExactScalar::factorial((2 * i - 1) as u32);
    }
    let mut den = ExactScalar::one();
    for i in 1..d {
        den = den * ExactScalar::factorial(i as u32);
    }
    num / den
}

/// `det` of the d²×d² matrix whose columns are the vectorized arguments.
pub fn vec_det(mats: &[ExactMatrix]) -> Result<ExactScalar> {
    let n = mats.len();
    let mut m = ExactMatrix::zeros(n, n);
    for (j, a) in mats.iter().enumerate() {
        let v = a.vectorize();
        if v.len() != n {
            return Err(Error::Dimension(format!(
                "{n} matrices with {} entries each",
                v.len()
            )));
        }
        for (i, e) in v.into_iter().enumerate() {
            m.set(i, j, e);
        }
    }
    m.det()
}

trait Ring: Clone + Send + Sync {
    fn zero() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

struct Dfs<'a, R: Ring> {
    d: usize,
    mats: &'a [Vec<R>],
    /// Slot index of each position; ends[p] marks the last position of a slot.
    ends: Vec<bool>,
}

impl<R: Ring> Dfs<'_, R> {
    fn matmul(&self, a: &[R], b: &[R]) -> Vec<R> {
        let d = self.d;
        let mut out = vec![R::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let aik = &a[i * d + k];
                for j in 0..d {
                    out[i * d + j] = out[i * d + j].add(&aik.mul(&b[k * d + j]));
                }
            }
        }
        out
    }

    fn trace(&self, a: &[R]) -> R {
        (0..self.d).fold(R::zero(), |acc, i| acc.add(&a[i * self.d + i]))
    }

    /// Sum over completions, given the running slot product `cur` (None at a
    /// slot start) and the product `acc` of completed traces.
    fn go(&self, pos: usize, used: u64, neg: bool, cur: Option<&[R]>, acc: &R) -> R {
        let n = self.ends.len();
        if pos == n {
            return if neg { acc.neg() } else { acc.clone() };
        }
        let mut total = R::zero();
        let mut smaller_unused = 0;
        for j in 0..n {
            if used >> j & 1 == 1 {
                continue;
            }
            let flip = neg ^ (smaller_unused % 2 == 1);
            smaller_unused += 1;
            let prod = match cur {
                None => self.mats[j].clone(),
                Some(c) => self.matmul(c, &self.mats[j]),
            };
            let v = if self.ends[pos] {
                let a = acc.mul(&self.trace(&prod));
                self.go(pos + 1, used | 1 << j, flip, None, &a)
            } else {
                self.go(pos + 1, used | 1 << j, flip, Some(&prod), acc)
            };
            total = total.add(&v);
        }
        total
    }
}

fn run<R: Ring>(d: usize, mats: &[Vec<R>], ends: Vec<bool>, one: R) -> R {
    let n = ends.len();
    let dfs = Dfs { d, mats, ends };
    // Parallel over the first choice; the sum is order independent.
    (0..n)
        .into_par_iter()
        .map(|j| {
            let prod = mats[j].clone();
            let neg = j % 2 == 1;
            if dfs.ends[0] {
                let a = one.mul(&dfs.trace(&prod));
                dfs.go(1, 1 << j, neg, None, &a)
            } else {
                dfs.go(1, 1 << j, neg, Some(&prod), &one)
            }
        })
        .collect::<Vec<R>>()
        .iter()
        .fold(R::zero(), |a, b| a.add(b))
}

/// `Σ_σ ε_σ Π_i tr(block_i(x_σ))` for consecutive blocks of the given lengths.
pub fn alternating_trace_product(profile: &[usize], mats: &[ExactMatrix]) -> Result<ExactScalar> {
    alternating_trace_product_with_budget(profile, mats, DEFAULT_LEAF_BUDGET)
}

pub fn alternating_trace_product_with_budget(
    profile: &[usize],
    mats: &[ExactMatrix],
    budget: u128,
) -> Result<ExactScalar> {
    let n: usize = profile.iter().sum();
    if n != mats.len() || n == 0 || profile.contains(&0) {
        return Err(Error::Dimension(format!(
            "profile sums to {n} but {} matrices were given",
            mats.len()
        )));
    }
    let leaves = (1..=n as u128).try_fold(1u128, |a, k| a.checked_mul(k)).unwrap_or(u128::MAX);
    if leaves > budget || n > 64 {
        return Err(Error::Budget {
            estimated: leaves,
            budget,
        });
    }
    let d = mats[0].rows();
    if mats.iter().any(|m| m.rows() != d || m.cols() != d) {
        return Err(Error::Dimension("matrices of different sizes".into()));
    }
    let mut ends = Vec::with_capacity(n);
    for &k in profile {
        ends.extend(std::iter::repeat(false).take(k - 1));
        ends.push(true);
    }
    // Clear denominators per matrix, then undo at the end.
    let mut scale = BigInt::one();
    let mut ints: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut max_abs: BigInt = Zero::zero();
    for m in mats {
        let (v, l) = m.clear_denominators();
        for e in &v {
            if e.abs() > max_abs {
                max_abs = e.abs();
            }
        }
        scale *= l;
        ints.push(v);
    }
    // |entry of a product of k matrices| <= d^{k-1} M^k; bound the total.
    let bits_m = max_abs.bits().max(1) as f64;
    let bits_d = (d as f64).log2();
    let bits_leaves = (leaves as f64).log2();
    let per_term = n as f64 * (bits_m + bits_d) + 1.0;
    let value = if per_term + bits_leaves < 120.0 {
        let small: Vec<Vec<i128>> = ints
            .iter()
            .map(|v| v.iter().map(|e| i128::try_from(e).expect("fits")).collect())
            .collect();
        BigInt::from(run(d, &small, ends, 1i128))
    } else {
        run(d, &ints, ends, BigInt::one())
    };
    Ok(ExactScalar::from(value) / ExactScalar::from(scale))
}

/// `𝒯_d` of `d²` matrices of size `d`.
pub fn t_cal(mats: &[ExactMatrix]) -> Result<ExactScalar> {
    let n = mats.len();
    let d = (n as f64).sqrt().round() as usize;
    if d * d != n || mats.iter().any(|m| m.rows() != d) {
        return Err(Error::Dimension(format!(
            "T_d takes d^2 matrices of size d; got {n} of size {}",
            mats.first().map_or(0, |m| m.rows())
        )));
    }
    alternating_trace_product(&delta_profile(d), mats)
}

/// `T_k = tr(St_k(x_1,…,x_k))`.
pub fn primitive_t(mats: &[ExactMatrix]) -> Result<ExactScalar> {
    alternating_trace_product(&[mats.len()], mats)
}

/// Letters `family_1 … family_{d²}` mapped to the given matrices.
pub fn letters(family: Family, n: usize) -> Vec<Letter> {
    (1..=n as u32).map(|i| Letter::new(family, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::{random_matrix, seeded_rng};

    fn units(d: usize) -> Vec<ExactMatrix> {
        (0..d * d).map(|k| ExactMatrix::unit(d, k / d, k % d)).collect()
    }

    #[test]
    fn small_d() {
        let x = ExactMatrix::from_i64(&[vec![3]]).unwrap();
        assert_eq!(t_cal(&[x]).unwrap(), ExactScalar::from(3));
        assert_eq!(c_d(2), ExactScalar::from(6));
        assert_eq!(c_d(3), ExactScalar::from(360));
        assert_eq!(c_d(4), ExactScalar::from(302400));
        let t2 = t_cal(&units(2)).unwrap();
        assert_eq!(t2.abs(), ExactScalar::from(6));
        assert_eq!(vec_det(&units(2)).unwrap().abs(), ExactScalar::one());
    }

    #[test]
    fn proportional_to_det_d2() {
        let mut rng = seeded_rng(2);
        for _ in 0..5 {
            let m: Vec<ExactMatrix> = (0..4).map(|_| random_matrix(&mut rng, 2)).collect();
            let t = t_cal(&m).unwrap();
            assert_eq!(t, vec_det(&m).unwrap() * ExactScalar::from(-6));
        }
    }

    #[test]
    fn even_primitive_vanishes() {
        let mut rng = seeded_rng(4);
        let m: Vec<ExactMatrix> = (0..4).map(|_| random_matrix(&mut rng, 3)).collect();
        assert!(primitive_t(&m).unwrap().is_zero());
        assert!(matches!(
            alternating_trace_product_with_budget(&[1, 3], &m, 10),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn proportional_to_det_d3() {
        let mut rng = seeded_rng(3);
        for _ in 0..5 {
            let m: Vec<ExactMatrix> = (0..9).map(|_| random_matrix(&mut rng, 3)).collect();
            let t = t_cal(&m).unwrap();
            assert_eq!(t, vec_det(&m).unwrap() * ExactScalar::from(360));
        }
    }
}
