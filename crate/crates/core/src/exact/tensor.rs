//! Operators on `(F^d)^{⊗n}`.
//!
//! Flat index convention: `e_{i_1} ⊗ … ⊗ e_{i_n}` has index
//! `Σ i_k d^{n-k}` (zero-based digits, first factor most significant).

use super::matrix::ExactMatrix;
use super::scalar::ExactScalar;
use crate::error::{Error, Result};
use crate::symmetric::permutation::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TensorOperator {
    d: usize,
    n: usize,
    mat: ExactMatrix,
}

pub(crate) fn checked_pow(d: usize, n: usize) -> Result<usize> {
    d.checked_pow(n as u32)
        .ok_or_else(|| Error::Dimension(format!("{d}^{n} overflows")))
}

/// Digits of `flat` in base `d`, most significant first.
pub fn unflatten(flat: usize, d: usize, n: usize) -> Vec<usize> {
    let mut digits = vec![0; n];
    let mut r = flat;
    for k in (0..n).rev() {
        digits[k] = r % d;
        r /= d;
    }
    digits
}

pub fn flatten(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &i| acc * d + i)
}

impl TensorOperator {
    pub fn new(d: usize, n: usize, mat: ExactMatrix) -> Result<Self> {
        let size = checked_pow(d, n)?;
        if d == 0 || mat.rows() != size || mat.cols() != size {
            return Err(Error::Dimension(format!(
                "{}x{} matrix is not an operator on ({d})^⊗{n}",
                mat.rows(),
                mat.cols()
            )));
        }
        Ok(TensorOperator { d, n, mat })
    }

    /// A d×d matrix as an order-1 operator.
    pub fn from_matrix(m: ExactMatrix) -> Result<Self> {
        Self::new(m.rows(), 1, m)
    }

    pub fn identity(d: usize, n: usize) -> Result<Self> {
        Self::new(d, n, ExactMatrix::identity(checked_pow(d, n)?))
    }

    pub fn zero(d: usize, n: usize) -> Result<Self> {
        let s = checked_pow(d, n)?;
        Self::new(d, n, ExactMatrix::zeros(s, s))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ExactMatrix {
        self.mat
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.d != other.d || self.n != other.n {
            return Err(Error::Dimension(format!(
                "operators on ({})^⊗{} and ({})^⊗{}",
                self.d, self.n, other.d, other.n
            )));
        }
        Ok(())
    }

    pub fn kron(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::Dimension(format!(
                "kron of local dimensions {} and {}",
                self.d, other.d
            )));
        }
        Ok(TensorOperator {
            d: self.d,
            n: self.n + other.n,
            mat: self.mat.kron(&other.mat),
        })
    }

    /// `m_1 ⊗ … ⊗ m_k` for d×d matrices.
    pub fn kron_all(factors: &[ExactMatrix]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::Dimension("empty tensor product".into()))?;
        let mut acc = Self::from_matrix(first.clone())?;
        for f in rest {
            acc = acc.kron(&Self::from_matrix(f.clone())?)?;
        }
        Ok(acc)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(TensorOperator {
            d: self.d,
            n: self.n,
            mat: self.mat.try_add(&other.mat)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(TensorOperator {
            d: self.d,
            n: self.n,
            mat: self.mat.try_sub(&other.mat)?,
        })
    }

    /// Operator composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(TensorOperator {
            d: self.d,
            n: self.n,
            mat: self.mat.try_mul(&other.mat)?,
        })
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        TensorOperator {
            d: self.d,
            n: self.n,
            mat: self.mat.scale(c),
        }
    }

    pub fn trace(&self) -> ExactScalar {
        self.mat.trace().expect("operators are square")
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// `tr(P(σ) ∘ self)` without forming the product.
    pub fn trace_with_perm(&self, sigma: &Permutation) -> Result<ExactScalar> {
        if sigma.n() != self.n {
            return Err(Error::Dimension(format!(
                "permutation of {} points on order-{} operator",
                sigma.n(),
                self.n
            )));
        }
        // tr(P A) = Σ_k A[k, P(k)].
        let size = self.mat.rows();
        let mut acc = ExactScalar::zero();
        for k in 0..size {
            let digits = unflatten(k, self.d, self.n);
            acc += self.mat.get(k, perm_target(sigma, &digits, self.d));
        }
        Ok(acc)
    }
}

/// Flat index of `P(σ) e_I`: the factor in position `k` moves to `σ(k)`.
pub fn perm_target(sigma: &Permutation, digits: &[usize], d: usize) -> usize {
    let mut out = vec![0; digits.len()];
    for (k, &i) in digits.iter().enumerate() {
        out[sigma.image(k)] = i;
    }
    flatten(&out, d)
}

/// The switch `Σ_{i,j} e_{ij} ⊗ e_{ji}` on `F^d ⊗ F^d`.
pub fn swap_operator(d: usize) -> Result<TensorOperator> {
    let mut mat = ExactMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            mat.set(i * d + j, j * d + i, ExactScalar::one());
        }
    }
    TensorOperator::new(d, 2, mat)
}

/// Place permutation: `e_{i_1}⊗…⊗e_{i_n} ↦ e_{i_{σ⁻¹(1)}}⊗…⊗e_{i_{σ⁻¹(n)}}`.
/// With this convention `P(στ) = P(σ)P(τ)`.
pub fn perm_operator(sigma: &Permutation, d: usize) -> Result<TensorOperator> {
    let n = sigma.n();
    let size = checked_pow(d, n)?;
    let mut mat = ExactMatrix::zeros(size, size);
    for src in 0..size {
        let digits = unflatten(src, d, n);
        mat.set(perm_target(sigma, &digits, d), src, ExactScalar::one());
    }
    TensorOperator::new(d, n, mat)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma2Decomposition {
    pub a: ExactScalar,
    pub b: ExactScalar,
    pub residual_zero: bool,
}

/// Writes an order-2 operator as `a·Id + b·swap` using the trace pairings
/// `tr T = a d² + b d`, `tr(swap T) = a d + b d²`.
pub fn decompose_sigma2(t: &TensorOperator) -> Result<Sigma2Decomposition> {
    if t.n() != 2 {
        return Err(Error::Dimension(format!(
            "expected an order-2 operator, got order {}",
            t.n()
        )));
    }
    let d = t.d();
    if d == 1 {
        return Err(Error::Degenerate(
            "d = 1: identity and swap coincide".into(),
        ));
    }
    let t1 = t.trace();
    let t2 = t.trace_with_perm(&Permutation::transposition(2, 0, 1))?;
    let dd = ExactScalar::from(d);
    let denom = &dd * &dd * &dd - &dd;
    let a = (&dd * &t1 - &t2) / &denom;
    let b = (&dd * &t2 - &t1) / &denom;
    let size = d * d;
    let mut residual_zero = true;
    'outer: for r in 0..size {
        for c in 0..size {
            let mut expect = ExactScalar::zero();
            if r == c {
                expect += &a;
            }
            if c == (r % d) * d + r / d {
                expect += &b;
            }
            if *t.matrix().get(r, c) != expect {
                residual_zero = false;
                break 'outer;
            }
        }
    }
    Ok(Sigma2Decomposition {
        a,
        b,
        residual_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_d2_exchanges_middle_indices() {
        let s = swap_operator(2).unwrap();
        let m = s.matrix();
        for (r, c) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            assert!(m.get(r, c).is_one());
        }
        assert_eq!(m.entries().iter().filter(|e| !e.is_zero()).count(), 4);
        assert_eq!(s, perm_operator(&Permutation::transposition(2, 0, 1), 2).unwrap());
    }

    #[test]
    fn perm_traces_count_cycles() {
        for d in [2usize, 3] {
            for p in Permutation::all(3) {
                let op = perm_operator(&p, d).unwrap();
                let want = ExactScalar::from(d.pow(p.cycle_count() as u32));
                assert_eq!(op.trace(), want);
                let id = TensorOperator::identity(d, 3).unwrap();
                assert_eq!(id.trace_with_perm(&p).unwrap(), want);
            }
        }
    }

    #[test]
    fn perm_operator_is_homomorphism() {
        for s in Permutation::all(3) {
            for t in Permutation::all(3) {
                let lhs = perm_operator(&s.compose(&t), 2).unwrap();
                let rhs = perm_operator(&s, 2)
                    .unwrap()
                    .compose(&perm_operator(&t, 2).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn decompose_basics() {
        let id = TensorOperator::identity(2, 2).unwrap();
        let sw = swap_operator(2).unwrap();
        let r = decompose_sigma2(&id).unwrap();
        assert_eq!((r.a.clone(), r.b.clone(), r.residual_zero), (ExactScalar::one(), ExactScalar::zero(), true));
        let r = decompose_sigma2(&sw).unwrap();
        assert_eq!((r.a.clone(), r.b.clone(), r.residual_zero), (ExactScalar::zero(), ExactScalar::one(), true));
        let t = id.try_add(&sw.scale(&ExactScalar::from(2))).unwrap();
        let r = decompose_sigma2(&t).unwrap();
        assert_eq!((r.a, r.b, r.residual_zero), (ExactScalar::one(), ExactScalar::from(2), true));
        let e = TensorOperator::kron_all(&[ExactMatrix::unit(2, 0, 0), ExactMatrix::unit(2, 0, 0)]).unwrap();
        assert!(!decompose_sigma2(&e).unwrap().residual_zero);
        assert!(matches!(
            decompose_sigma2(&TensorOperator::identity(1, 2).unwrap()),
            Err(Error::Degenerate(_))
        ));
    }
}
